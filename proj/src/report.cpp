#include "weil_lab/report.hpp"

namespace weil_lab::report {

std::string rat_str(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string int_str(const Integer& z) { return z.get_str(); }

json field_json(const cyclotomic::CyclotomicField& K) {
    json j;
    j["conductor"] = K.conductor;
    j["degree"] = K.degree;
    j["torsion_order"] = K.torsion_order;
    j["class_number"] = K.class_number;
    j["real_subfield_degree"] = K.real_subfield_degree;
    json mp = json::array();
    for (const auto& c : K.min_poly)
        mp.push_back(int_str(c));
    j["min_poly"] = mp;
    j["units"] = K.units;
    return j;
}

json splitting_json(const cyclotomic::PrimeSplitting& sp) {
    json j;
    j["p"] = sp.p;
    j["ramification_e"] = sp.e;
    j["residue_degree_f"] = sp.f;
    j["num_primes_g"] = sp.g;
    j["labels"] = sp.labels;
    j["fibers"] = sp.fibers;
    return j;
}

json element_json(const cyclotomic::RingElement& x) {
    json j;
    j["conductor"] = x.conductor;
    json cs = json::array();
    for (const auto& c : x.coeffs)
        cs.push_back(int_str(c));
    j["coeffs"] = cs;
    j["den"] = int_str(x.den);
    return j;
}

json slope_json(const weil::SlopeVector& s) {
    json j;
    j["conductor"] = s.conductor;
    j["p"] = s.p;
    j["entries"] = s.entries;
    return j;
}

json weil_json(const weil::WeilElement& w) {
    json j;
    j["level"] = w.level;
    j["torsion_exponent"] = w.torsion_exponent;
    j["slope"] = slope_json(w.slope);
    if (w.explicit_power)
        j["explicit_power"] = element_json(*w.explicit_power);
    else
        j["explicit_power"] = nullptr;
    return j;
}

json profile_json(const brauer::InvariantProfile& p) {
    json j;
    j["center_degree"] = p.center_degree;
    j["stabilizer"] = p.stabilizer;
    json entries = json::array();
    for (const auto& v : p.entries) {
        json e;
        e["prime_label"] = v.rep_label;
        e["local_e"] = v.local.e;
        e["local_f"] = v.local.f;
        e["invariant"] = rat_str(v.invariant);
        entries.push_back(std::move(e));
    }
    j["entries"] = entries;
    j["real_invariant"] = rat_str(p.real_invariant);
    j["commutative"] = brauer::is_commutative(p);
    j["division_rank"] = brauer::division_rank(p);
    j["reciprocity"] = brauer::reciprocity_check(p);
    return j;
}

json candidate_json(const lsearch::Candidate& c) {
    json j;
    j["l"] = c.l;
    j["passes_a"] = c.passes_a;
    j["passes_b"] = lsearch::to_string(c.passes_b);
    j["passes_c"] = c.passes_c;
    j["passes_d"] = c.passes_d;
    j["hit"] = c.hit;
    j["L"] = c.L_description;
    j["certificate"] = c.certificate;
    return j;
}

json probe_json(const lsearch::ProbeReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json j;
        j["conductor"] = row.conductor;
        j["p"] = row.p;
        j["n"] = row.n;
        if (!row.error.empty()) {
            j["error"] = row.error;
        } else {
            j["found"] = row.found;
            j["smallest_hit"] = row.found ? json(row.smallest_hit) : json(nullptr);
            j["hits"] = row.hits;
            j["eligible"] = row.eligible;
            j["heuristic_density"] = rat_str(row.heuristic_density);
        }
        rows.push_back(std::move(j));
    }
    json out;
    out["rows"] = rows;
    return out;
}

json motive_json(const category::MotiveObject& X) {
    json terms = json::array();
    for (const auto& [s, mult] : X.terms) {
        json t;
        t["multiplicity"] = mult;
        t["level"] = s.level;
        t["rank"] = s.rank;
        t["center_degree"] = s.center_degree;
        if (s.level == 1) {
            json orbit = json::array();
            for (const auto& x : s.orbit)
                orbit.push_back(element_json(x));
            t["orbit"] = orbit;
        } else {
            json orbit = json::array();
            for (const auto& sv : s.slope_orbit)
                orbit.push_back(slope_json(sv));
            t["slope_orbit"] = orbit;
        }
        terms.push_back(std::move(t));
    }
    json j;
    j["terms"] = terms;
    j["total_rank"] = X.total_rank();
    return j;
}

json make_report(const std::string& command, json config, json results) {
    json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["config"] = std::move(config);
    j["results"] = std::move(results);
    return j;
}

std::string to_text(const json& j) { return j.dump(2) + "\n"; }

} // namespace weil_lab::report
