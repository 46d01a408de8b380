#include "weil_lab/experiments.hpp"
#include "weil_lab/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

// Python surface: structured results are returned as JSON strings with
// the same layout as the CLI reports (exact rationals as "num/den"),
// scalar and list results as native types.

namespace py = pybind11;
namespace wl = weil_lab;

namespace {

std::string field_json(unsigned long N) {
    return wl::report::to_text(wl::report::field_json(wl::cyclotomic::describe_field(N)));
}

std::string splitting_json(unsigned long N, unsigned long p) {
    auto K = wl::cyclotomic::describe_field(N);
    return wl::report::to_text(wl::report::splitting_json(wl::cyclotomic::split_prime(K, p)));
}

std::vector<std::vector<long>> kernel_basis(unsigned long N, unsigned long p) {
    auto K = wl::cyclotomic::describe_field(N);
    auto sp = wl::cyclotomic::split_prime(K, p);
    std::vector<std::vector<long>> out;
    for (const auto& s : wl::weil::kernel_basis(K, sp, p))
        out.push_back(s.entries);
    return out;
}

std::string construct_weil_json(unsigned long N, unsigned long p, const std::vector<long>& slope,
                                unsigned long n) {
    auto K = wl::cyclotomic::describe_field(N);
    wl::cyclotomic::PAdicContext ctx(K, p);
    wl::weil::SlopeVector s{N, p, slope};
    return wl::report::to_text(wl::report::weil_json(wl::weil::construct_weil_auto(ctx, s, n)));
}

std::string invariants_json(unsigned long N, unsigned long p, unsigned long q_exp,
                            const std::vector<long>& slope) {
    auto K = wl::cyclotomic::describe_field(N);
    auto sp = wl::cyclotomic::split_prime(K, p);
    wl::weil::SlopeVector s{N, p, slope};
    return wl::report::to_text(
        wl::report::profile_json(wl::brauer::tate_invariants(K, sp, s, q_exp)));
}

std::string search_l_json(unsigned long N, unsigned long p, unsigned long n, unsigned long bound,
                          const std::string& mode, unsigned parallel) {
    auto K = wl::cyclotomic::describe_field(N);
    auto task = wl::lsearch::make_task(K, p, n, bound,
                                       mode == "cd" ? wl::lsearch::Mode::sufficient_cd
                                                    : wl::lsearch::Mode::full_ab);
    auto candidates = wl::lsearch::search(task, parallel);
    wl::report::json rows = wl::report::json::array();
    for (const auto& c : candidates)
        rows.push_back(wl::report::candidate_json(c));
    auto hit = wl::lsearch::first_hit(candidates);
    wl::report::json out;
    out["first_hit"] = hit ? wl::report::json(hit->l) : wl::report::json(nullptr);
    out["candidates"] = rows;
    return wl::report::to_text(out);
}

std::optional<unsigned long> first_hit_l(unsigned long N, unsigned long p, unsigned long n,
                                         unsigned long bound) {
    auto K = wl::cyclotomic::describe_field(N);
    auto task = wl::lsearch::make_task(K, p, n, bound);
    auto hit = wl::lsearch::first_hit(wl::lsearch::search(task));
    if (!hit)
        return std::nullopt;
    return hit->l;
}

std::vector<unsigned long> enumerate_m(long a, unsigned long n, unsigned long conductor,
                                       bool real_subfield, unsigned long k, unsigned long bound,
                                       unsigned parallel) {
    wl::experiments::MTask task{wl::Integer(a), n, conductor, real_subfield, k, bound};
    return wl::experiments::enumerate_M(task, parallel);
}

std::string cyclic_invariant(unsigned long e, unsigned long f, unsigned long n, long ord_a) {
    return wl::report::rat_str(wl::brauer::cyclic_invariant({e, f}, n, ord_a));
}

bool torsion_character_check(unsigned long N, unsigned long n) {
    return wl::category::torsion_character_check(wl::cyclotomic::describe_field(N), n);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "weight-0 Weil numbers, Brauer invariants, and cyclic-extension searches";
    m.attr("schema_version") = wl::report::schema_version;

    m.def("field_json", &field_json, py::arg("conductor"));
    m.def("splitting_json", &splitting_json, py::arg("conductor"), py::arg("p"));
    m.def("kernel_basis", &kernel_basis, py::arg("conductor"), py::arg("p"));
    m.def("construct_weil_json", &construct_weil_json, py::arg("conductor"), py::arg("p"),
          py::arg("slope"), py::arg("n"));
    m.def("invariants_json", &invariants_json, py::arg("conductor"), py::arg("p"),
          py::arg("q_exp"), py::arg("slope"));
    m.def("search_l_json", &search_l_json, py::arg("conductor"), py::arg("p"), py::arg("n"),
          py::arg("bound"), py::arg("mode") = "ab", py::arg("parallel") = 1);
    m.def("first_hit_l", &first_hit_l, py::arg("conductor"), py::arg("p"), py::arg("n"),
          py::arg("bound"));
    m.def("enumerate_m", &enumerate_m, py::arg("a"), py::arg("n") = 1, py::arg("conductor") = 1,
          py::arg("real_subfield") = false, py::arg("k") = 1, py::arg("bound") = 100,
          py::arg("parallel") = 1);
    m.def("wieferich_search", &wl::experiments::wieferich_search, py::arg("p"), py::arg("bound"),
          py::arg("parallel") = 1);
    m.def("power_obstruction",
          [](long a, unsigned long conductor, bool real_subfield) {
              return wl::experiments::power_obstruction(wl::Integer(a), conductor, real_subfield);
          },
          py::arg("a"), py::arg("conductor") = 1, py::arg("real_subfield") = false);
    m.def("condition_c", &wl::lsearch::condition_c, py::arg("l"), py::arg("p"), py::arg("mn"));
    m.def("cyclic_invariant", &cyclic_invariant, py::arg("e"), py::arg("f"), py::arg("n"),
          py::arg("ord_a"));
    m.def("torsion_character_check", &torsion_character_check, py::arg("conductor"),
          py::arg("n"));
}
