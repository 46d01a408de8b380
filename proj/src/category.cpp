#include "weil_lab/category.hpp"

#include <algorithm>

namespace weil_lab::category {

using cyclotomic::re_conj;
using cyclotomic::re_galois;
using cyclotomic::re_less;
using cyclotomic::re_mul;
using cyclotomic::re_one;
using cyclotomic::re_pow;
using cyclotomic::re_torsion_unit;

namespace {

std::vector<RingElement> galois_orbit(const CyclotomicField& K, const RingElement& x) {
    std::vector<RingElement> orbit;
    for (unsigned long a : K.units) {
        RingElement im = re_galois(x, a);
        if (std::none_of(orbit.begin(), orbit.end(),
                         [&](const RingElement& o) { return o == im; }))
            orbit.push_back(std::move(im));
    }
    std::sort(orbit.begin(), orbit.end(), re_less);
    return orbit;
}

bool simple_less(const SimpleClass& a, const SimpleClass& b) {
    if (a.level != b.level)
        return a.level < b.level;
    if (a.orbit.size() != b.orbit.size())
        return a.orbit.size() < b.orbit.size();
    for (std::size_t i = 0; i < a.orbit.size(); ++i) {
        if (re_less(a.orbit[i], b.orbit[i]))
            return true;
        if (re_less(b.orbit[i], a.orbit[i]))
            return false;
    }
    if (a.slope_orbit.size() != b.slope_orbit.size())
        return a.slope_orbit.size() < b.slope_orbit.size();
    for (std::size_t i = 0; i < a.slope_orbit.size(); ++i)
        if (a.slope_orbit[i].entries != b.slope_orbit[i].entries)
            return a.slope_orbit[i].entries < b.slope_orbit[i].entries;
    return false;
}

void normalize(MotiveObject& X) {
    std::sort(X.terms.begin(), X.terms.end(),
              [](const auto& a, const auto& b) { return simple_less(a.first, b.first); });
    std::vector<std::pair<SimpleClass, unsigned long>> merged;
    for (auto& term : X.terms) {
        if (term.second == 0)
            continue;
        if (!merged.empty() && merged.back().first == term.first)
            merged.back().second += term.second;
        else
            merged.push_back(std::move(term));
    }
    X.terms = std::move(merged);
}

} // namespace

unsigned long MotiveObject::total_rank() const {
    unsigned long r = 0;
    for (const auto& [s, mult] : terms)
        r += s.rank * mult;
    return r;
}

SimpleClass simple_from_element(const CyclotomicField& K, const RingElement& x) {
    SimpleClass s;
    s.level = 1;
    s.orbit = galois_orbit(K, x);
    s.rank = static_cast<unsigned long>(s.orbit.size());
    s.center_degree =
        static_cast<unsigned long>(galois_orbit(K, re_pow(x, K.torsion_order)).size());
    return s;
}

SimpleClass simple_from_weil(const CyclotomicField& K, const WeilElement& w) {
    if (w.level == 1) {
        if (!w.explicit_power)
            throw MissingCertificate("level-1 simple requires an explicit representative");
        return simple_from_element(K, *w.explicit_power);
    }
    SimpleClass s;
    s.level = w.level;
    auto sp = cyclotomic::split_prime(K, w.slope.p);
    for (unsigned long a : K.units) {
        SlopeVector im = weil::slope_galois(sp, w.slope, a);
        if (std::find(s.slope_orbit.begin(), s.slope_orbit.end(), im) == s.slope_orbit.end())
            s.slope_orbit.push_back(std::move(im));
    }
    std::sort(s.slope_orbit.begin(), s.slope_orbit.end(),
              [](const SlopeVector& a, const SlopeVector& b) { return a.entries < b.entries; });
    // slope orbit size bounds the true rank from below
    s.rank = static_cast<unsigned long>(s.slope_orbit.size());
    s.center_degree = static_cast<unsigned long>(K.units.size() /
                                                 weil::slope_stabilizer(K, sp, w.slope).size());
    return s;
}

MotiveObject object_of(SimpleClass s, unsigned long multiplicity) {
    MotiveObject X;
    if (multiplicity > 0)
        X.terms.emplace_back(std::move(s), multiplicity);
    return X;
}

MotiveObject direct_sum(const MotiveObject& X, const MotiveObject& Y) {
    MotiveObject Z = X;
    Z.terms.insert(Z.terms.end(), Y.terms.begin(), Y.terms.end());
    normalize(Z);
    return Z;
}

MotiveObject unit_object(const CyclotomicField& K) {
    return object_of(simple_from_element(K, re_one(K.conductor)));
}

MotiveObject tensor(const CyclotomicField& K, const MotiveObject& X, const MotiveObject& Y) {
    for (const auto& [s, mult] : X.terms)
        if (s.level != 1)
            throw UnsupportedLevel("tensor decomposition requires level 1");
    for (const auto& [s, mult] : Y.terms)
        if (s.level != 1)
            throw UnsupportedLevel("tensor decomposition requires level 1");

    // multiset of pairwise products
    std::vector<std::pair<RingElement, unsigned long>> pool;
    auto add = [&](const RingElement& x, unsigned long count) {
        for (auto& [e, c] : pool)
            if (e == x) {
                c += count;
                return;
            }
        pool.emplace_back(x, count);
    };
    for (const auto& [s, ms] : X.terms)
        for (const auto& [t, mt] : Y.terms)
            for (const auto& x : s.orbit)
                for (const auto& y : t.orbit)
                    add(re_mul(x, y), ms * mt);

    // regroup into Galois orbits; the pool is Galois-stable
    MotiveObject Z;
    while (!pool.empty()) {
        auto rep = std::min_element(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
            return re_less(a.first, b.first);
        });
        SimpleClass s = simple_from_element(K, rep->first);
        unsigned long mult = rep->second;
        for (const auto& x : s.orbit) {
            auto it = std::find_if(pool.begin(), pool.end(),
                                   [&](const auto& e) { return e.first == x; });
            if (it == pool.end() || it->second < mult)
                throw std::logic_error("product multiset is not Galois-stable");
            it->second -= mult;
        }
        std::erase_if(pool, [](const auto& e) { return e.second == 0; });
        Z.terms.emplace_back(std::move(s), mult);
    }
    normalize(Z);
    return Z;
}

MotiveObject dual(const CyclotomicField& K, const MotiveObject& X) {
    MotiveObject Z;
    for (const auto& [s, mult] : X.terms) {
        if (s.level == 1) {
            // weight 0: pi^{-1} = conj(pi)
            SimpleClass d = simple_from_element(K, re_conj(s.orbit.front()));
            Z.terms.emplace_back(std::move(d), mult);
        } else {
            SimpleClass d = s;
            for (auto& sv : d.slope_orbit)
                for (auto& e : sv.entries)
                    e = -e;
            std::sort(d.slope_orbit.begin(), d.slope_orbit.end(),
                      [](const SlopeVector& a, const SlopeVector& b) {
                          return a.entries < b.entries;
                      });
            Z.terms.emplace_back(std::move(d), mult);
        }
    }
    normalize(Z);
    return Z;
}

bool torsion_character_check(const CyclotomicField& K, unsigned long n) {
    if (n == 0 || n % K.class_number != 0)
        throw DivisibilityError("level n must be a positive multiple of h_K");
    // the canonical torsion unit must have exact multiplicative order m;
    // the level then contributes the cyclic factor of order n.
    RingElement zeta = re_torsion_unit(K.conductor, 1);
    RingElement acc = zeta;
    unsigned long order = 1;
    while (!(acc == re_one(K.conductor))) {
        acc = re_mul(acc, zeta);
        ++order;
        if (order > 2 * K.torsion_order)
            return false;
    }
    return order == K.torsion_order;
}

} // namespace weil_lab::category
