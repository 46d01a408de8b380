#include "weil_lab/experiments.hpp"
#include "weil_lab/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace wl = weil_lab;
using wl::report::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_empty = 3;
constexpr int exit_unsupported = 4;

void emit(const json& report, const std::string& json_path, const std::string& format) {
    std::string text = wl::report::to_text(report);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << text;
    }
    if (format == "text") {
        // plain table: one prime per line for scans, JSON otherwise
        const auto& results = report.at("results");
        if (results.is_object() && results.contains("primes")) {
            for (const auto& p : results.at("primes"))
                std::cout << p.get<unsigned long>() << "\n";
            return;
        }
    }
    std::cout << text;
}

std::vector<long> parse_slope(const std::string& s) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty())
            throw std::invalid_argument("bad slope entry");
        out.push_back(std::stol(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"weil-lab: weight-0 Weil numbers, Brauer invariants, and cyclic-extension searches"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned parallel = 1;
    std::string json_path;
    std::string format = "json";
    app.add_option("--parallel", parallel, "parallel width for range searches");
    app.add_option("--json", json_path, "write the JSON report to this file");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    // field
    auto* field_cmd = app.add_subcommand("field", "describe a cyclotomic field");
    unsigned long f_conductor = 0, f_p = 0;
    field_cmd->add_option("--conductor", f_conductor, "conductor N")->required();
    field_cmd->add_option("--p", f_p, "also split this prime");

    // weil enumerate
    auto* weil_cmd = app.add_subcommand("weil", "Weil number operations");
    auto* weil_enum = weil_cmd->add_subcommand("enumerate", "enumerate slope vectors in a box");
    unsigned long w_conductor = 0, w_p = 0, w_n = 1;
    long w_box = 1;
    bool w_explicit = false;
    weil_enum->add_option("--conductor", w_conductor, "conductor N")->required();
    weil_enum->add_option("--p", w_p, "prime p")->required();
    weil_enum->add_option("--n", w_n, "level n");
    weil_enum->add_option("--box", w_box, "slope box radius");
    weil_enum->add_flag("--explicit", w_explicit, "construct explicit representatives");

    // invariants
    auto* inv_cmd = app.add_subcommand("invariants", "Tate invariant profile of a slope");
    unsigned long i_conductor = 0, i_p = 0, i_qexp = 1;
    std::string i_slope;
    inv_cmd->add_option("--conductor", i_conductor, "conductor N")->required();
    inv_cmd->add_option("--p", i_p, "prime p")->required();
    inv_cmd->add_option("--q-exp", i_qexp, "q = p^E");
    inv_cmd->add_option("--slope", i_slope, "slope entries a,b,... in label order")->required();

    // search-l
    auto* sl_cmd = app.add_subcommand("search-l", "search for the cyclic extension L in Q(zeta_l)");
    unsigned long s_conductor = 0, s_p = 0, s_n = 1, s_bound = 0;
    std::string s_mode = "ab";
    sl_cmd->add_option("--conductor", s_conductor, "conductor N")->required();
    sl_cmd->add_option("--p", s_p, "prime p")->required();
    sl_cmd->add_option("--n", s_n, "level n");
    sl_cmd->add_option("--bound", s_bound, "search bound for l")->required();
    sl_cmd->add_option("--mode", s_mode, "hit rule")->check(CLI::IsMember({"cd", "ab"}));

    // artin
    auto* artin_cmd = app.add_subcommand("artin", "generalized primitive-root scan");
    long a_a = 0;
    unsigned long a_n = 1, a_conductor = 1, a_k = 1, a_bound = 0;
    bool a_real = false;
    artin_cmd->add_option("--a", a_a, "square-free integer a")->required();
    artin_cmd->add_option("--n", a_n, "quotient order n");
    artin_cmd->add_option("--conductor", a_conductor, "conductor of F (1 for Q)");
    artin_cmd->add_flag("--real-subfield", a_real, "F = maximal real subfield");
    artin_cmd->add_option("--k", a_k, "index bound k (0 disables the index test)");
    artin_cmd->add_option("--bound", a_bound, "scan bound")->required();

    // wieferich
    auto* wf_cmd = app.add_subcommand("wieferich", "Wieferich prime scan for p");
    unsigned long wf_p = 0, wf_bound = 0;
    wf_cmd->add_option("--p", wf_p, "prime p")->required();
    wf_cmd->add_option("--bound", wf_bound, "scan bound")->required();

    // category demo
    auto* cat_cmd = app.add_subcommand("category", "motive category operations");
    auto* cat_demo = cat_cmd->add_subcommand("demo", "decomposition table for a default object set");
    unsigned long c_conductor = 0, c_p = 0;
    cat_demo->add_option("--conductor", c_conductor, "conductor N")->required();
    cat_demo->add_option("--p", c_p, "prime p")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }

    if (const char* table = std::getenv("WEIL_LAB_FIELD_TABLE"))
        wl::cyclotomic::set_class_number_overrides(wl::cyclotomic::load_field_table(table));

    auto t0 = std::chrono::steady_clock::now();
    int code = exit_ok;
    json report;

    if (*field_cmd) {
        auto K = wl::cyclotomic::describe_field(f_conductor);
        json config{{"conductor", f_conductor}};
        json results;
        results["field"] = wl::report::field_json(K);
        if (f_p > 0) {
            config["p"] = f_p;
            results["splitting"] = wl::report::splitting_json(wl::cyclotomic::split_prime(K, f_p));
        }
        report = wl::report::make_report("field", config, results);
    } else if (*weil_enum) {
        auto K = wl::cyclotomic::describe_field(w_conductor);
        auto sp = wl::cyclotomic::split_prime(K, w_p);
        json config{{"conductor", w_conductor}, {"p", w_p}, {"n", w_n},
                    {"box", w_box},            {"explicit", w_explicit}};
        unsigned long torder = wl::weil::torsion_order(K, sp, w_n);
        json rows = json::array();
        std::optional<wl::cyclotomic::PAdicContext> ctx;
        for (const auto& s : wl::weil::kernel_box(K, sp, w_p, w_box)) {
            json row;
            row["slope"] = wl::report::slope_json(s);
            row["torsion_order"] = torder;
            if (w_explicit && K.class_number == 1) {
                if (!ctx)
                    ctx.emplace(K, w_p);
                auto w = wl::weil::construct_weil_auto(*ctx, s, w_n);
                row["explicit"] = w.explicit_power ? wl::report::element_json(*w.explicit_power)
                                                   : json(nullptr);
            } else {
                row["explicit"] = nullptr;
            }
            rows.push_back(std::move(row));
        }
        report = wl::report::make_report("weil enumerate", config,
                                         json{{"torsion_order", torder}, {"rows", rows}});
    } else if (*inv_cmd) {
        auto K = wl::cyclotomic::describe_field(i_conductor);
        auto sp = wl::cyclotomic::split_prime(K, i_p);
        wl::weil::SlopeVector s{i_conductor, i_p, parse_slope(i_slope)};
        if (s.entries.size() != sp.labels.size())
            throw std::invalid_argument("slope has " + std::to_string(s.entries.size()) +
                                        " entries, expected " + std::to_string(sp.labels.size()));
        json config{{"conductor", i_conductor}, {"p", i_p}, {"q_exp", i_qexp},
                    {"slope", s.entries}};
        auto profile = wl::brauer::tate_invariants(K, sp, s, i_qexp);
        report = wl::report::make_report("invariants", config, wl::report::profile_json(profile));
    } else if (*sl_cmd) {
        auto K = wl::cyclotomic::describe_field(s_conductor);
        auto mode = s_mode == "cd" ? wl::lsearch::Mode::sufficient_cd : wl::lsearch::Mode::full_ab;
        auto task = wl::lsearch::make_task(K, s_p, s_n, s_bound, mode);
        json config{{"conductor", s_conductor}, {"p", s_p},       {"n", s_n},
                    {"mn", task.mn},            {"bound", s_bound}, {"mode", s_mode}};
        auto candidates = wl::lsearch::search(task, parallel);
        json rows = json::array();
        for (const auto& c : candidates)
            rows.push_back(wl::report::candidate_json(c));
        auto hit = wl::lsearch::first_hit(candidates);
        json results;
        results["first_hit"] = hit ? json(hit->l) : json(nullptr);
        results["candidates"] = rows;
        report = wl::report::make_report("search-l", config, results);
        if (!hit)
            code = exit_empty;
    } else if (*artin_cmd) {
        wl::experiments::MTask task{wl::Integer(a_a), a_n, a_conductor, a_real, a_k, a_bound};
        json config{{"a", std::to_string(a_a)},
                    {"n", a_n},
                    {"conductor", a_conductor},
                    {"real_subfield", a_real},
                    {"k", a_k},
                    {"bound", a_bound}};
        auto primes = wl::experiments::enumerate_M(task, parallel);
        json results;
        results["count"] = primes.size();
        results["primes"] = primes;
        results["power_obstruction_bound"] =
            wl::experiments::power_obstruction(task.a, a_conductor, a_real);
        report = wl::report::make_report("artin", config, results);
        if (primes.empty())
            code = exit_empty;
    } else if (*wf_cmd) {
        json config{{"p", wf_p}, {"bound", wf_bound}};
        auto primes = wl::experiments::wieferich_search(wf_p, wf_bound, parallel);
        json results;
        results["count"] = primes.size();
        results["primes"] = primes;
        report = wl::report::make_report("wieferich", config, results);
        if (primes.empty())
            code = exit_empty;
    } else if (*cat_demo) {
        auto K = wl::cyclotomic::describe_field(c_conductor);
        auto sp = wl::cyclotomic::split_prime(K, c_p);
        if (sp.f * K.class_number != 1)
            throw wl::UnsupportedLevel("category demo needs level 1: f_K*h_K must be 1");
        wl::cyclotomic::PAdicContext ctx(K, c_p);
        json config{{"conductor", c_conductor}, {"p", c_p}};
        // default object set: unit, torsion generator, one simple per
        // kernel-basis slope; then pairwise tensor decompositions
        std::vector<std::pair<std::string, wl::category::MotiveObject>> objects;
        objects.emplace_back("unit", wl::category::unit_object(K));
        objects.emplace_back("torsion", wl::category::object_of(wl::category::simple_from_element(
                                            K, wl::cyclotomic::re_torsion_unit(K.conductor, 1))));
        unsigned idx = 0;
        for (const auto& s : wl::weil::kernel_basis(K, sp, c_p)) {
            auto w = wl::weil::construct_weil_auto(ctx, s, 1);
            objects.emplace_back("simple_" + std::to_string(idx++),
                                 wl::category::object_of(wl::category::simple_from_weil(K, w)));
        }
        json objs = json::array();
        for (const auto& [name, X] : objects) {
            json o;
            o["name"] = name;
            o["object"] = wl::report::motive_json(X);
            o["dual"] = wl::report::motive_json(wl::category::dual(K, X));
            objs.push_back(std::move(o));
        }
        json tensors = json::array();
        for (const auto& [nx, X] : objects)
            for (const auto& [ny, Y] : objects) {
                json t;
                t["factors"] = json::array({nx, ny});
                t["product"] = wl::report::motive_json(wl::category::tensor(K, X, Y));
                tensors.push_back(std::move(t));
            }
        json results;
        results["torsion_character_check"] = wl::category::torsion_character_check(K, 1);
        results["objects"] = objs;
        results["tensor_table"] = tensors;
        report = wl::report::make_report("category demo", config, results);
    } else {
        std::cerr << "missing subcommand\n";
        return exit_usage;
    }

    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
    emit(report, json_path, format);
    return code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wl::UnsupportedConductor& e) {
        std::cerr << "unsupported conductor: " << e.what() << "\n";
    } catch (const wl::DivisibilityError& e) {
        std::cerr << "divisibility error: " << e.what() << "\n";
    } catch (const wl::NotIntegral& e) {
        std::cerr << "not integral: " << e.what() << "\n";
    } catch (const wl::UnsupportedLevel& e) {
        std::cerr << "unsupported level: " << e.what() << "\n";
    } catch (const wl::MissingCertificate& e) {
        std::cerr << "missing certificate: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "unsupported input: " << e.what() << "\n";
    }
    return exit_unsupported;
}
