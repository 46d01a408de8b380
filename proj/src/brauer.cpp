#include "weil_lab/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace weil_lab::brauer {

namespace {

// Product set of two subgroups of the abelian group (Z/NZ)^x.
std::vector<unsigned long> subgroup_product(const std::vector<unsigned long>& A,
                                            const std::vector<unsigned long>& B,
                                            unsigned long N) {
    std::set<unsigned long> out;
    for (unsigned long a : A)
        for (unsigned long b : B)
            out.insert(static_cast<unsigned long>(Integer(Integer(a) * b % N).get_ui()));
    return {out.begin(), out.end()};
}

} // namespace

InvariantProfile tate_invariants(const CyclotomicField& K, const PrimeSplitting& sp,
                                 const SlopeVector& slope, unsigned long q_exp,
                                 unsigned long weight) {
    if (q_exp == 0)
        throw std::invalid_argument("q_exp must be positive");
    if (slope.conductor != K.conductor || slope.entries.size() != sp.labels.size())
        throw std::invalid_argument("slope vector does not match the splitting data");

    unsigned long N = K.conductor;
    unsigned long Np = sp.cofactor;

    InvariantProfile profile;
    profile.stabilizer = weil::slope_stabilizer(K, sp, slope);
    profile.center_degree =
        static_cast<unsigned long>(K.units.size() / profile.stabilizer.size());
    profile.real_invariant = real_place_invariant(weight);

    // Decomposition and inertia subgroups of p in Gal(K/Q) = (Z/NZ)^x:
    // D = preimage of <p> mod N', I = kernel of reduction mod N'.
    std::vector<unsigned long> D, I;
    std::set<unsigned long> frob_powers;
    unsigned long pw = 1 % Np;
    do {
        frob_powers.insert(pw);
        pw = static_cast<unsigned long>(Integer(Integer(pw) * sp.p % Np).get_ui());
    } while (!frob_powers.count(pw));
    for (unsigned long a : K.units) {
        if (frob_powers.count(a % Np))
            D.push_back(a);
        if (a % Np == 1 % Np)
            I.push_back(a);
    }

    const auto& H = profile.stabilizer;
    auto HI = subgroup_product(H, I, N);
    auto HD = subgroup_product(H, D, N);
    unsigned long e_v = static_cast<unsigned long>(HI.size() / H.size());
    unsigned long f_v = static_cast<unsigned long>(HD.size() / HI.size());

    // Places of the centre above p = orbits of HD on the prime labels.
    // D fixes every label, so these are the H-orbits; the slope is
    // constant on each (H stabilizes it).
    std::set<unsigned long> done;
    for (std::size_t i = 0; i < sp.labels.size(); ++i) {
        unsigned long t = sp.labels[i];
        if (done.count(t))
            continue;
        unsigned long rep = t;
        for (unsigned long a : HD) {
            unsigned long im = sp.act(a, t);
            done.insert(im);
            rep = std::min(rep, im);
            if (slope.entries[sp.index_of(im)] != slope.entries[i])
                throw std::logic_error("slope not constant on a place of the centre");
        }
        PlaceInvariant pv;
        pv.rep_label = rep;
        pv.local.e = e_v;
        pv.local.f = f_v;
        // ord_v(pi)/ord_v(q) * [F_v:Q_p] with ord_w(pi) = s_w/f spread
        // over e_v*f_v local degrees of the centre place.
        Rational raw(Integer(slope.entries[i]) * Integer(e_v) * Integer(f_v),
                     Integer(sp.f) * Integer(q_exp) * Integer(sp.e));
        raw.canonicalize();
        pv.invariant = modmath::mod_one(raw);
        profile.entries.push_back(std::move(pv));
    }
    std::sort(profile.entries.begin(), profile.entries.end(),
              [](const PlaceInvariant& a, const PlaceInvariant& b) {
                  return a.rep_label < b.rep_label;
              });
    return profile;
}

Rational real_place_invariant(unsigned long weight) {
    return weight % 2 == 1 ? Rational(1, 2) : Rational(0);
}

bool is_commutative(const InvariantProfile& profile) {
    if (profile.real_invariant != 0)
        return false;
    return std::all_of(profile.entries.begin(), profile.entries.end(),
                       [](const PlaceInvariant& v) { return v.invariant == 0; });
}

unsigned long schur_index(const InvariantProfile& profile) {
    Integer l = 1;
    for (const auto& v : profile.entries)
        l = lcm(l, v.invariant.get_den());
    l = lcm(l, profile.real_invariant.get_den());
    return static_cast<unsigned long>(l.get_ui());
}

unsigned long division_rank(const InvariantProfile& profile) {
    return schur_index(profile) * profile.center_degree;
}

Rational cyclic_invariant(const LocalFieldData& local, unsigned long n, long ord_a) {
    if (n == 0)
        throw std::invalid_argument("cyclic extension degree must be positive");
    Rational r(Integer(ord_a) * Integer(local.f), Integer(n));
    r.canonicalize();
    return modmath::mod_one(r);
}

bool reciprocity_check(const InvariantProfile& profile) {
    Rational sum = profile.real_invariant;
    for (const auto& v : profile.entries)
        sum += v.invariant;
    return modmath::mod_one(sum) == 0;
}

} // namespace weil_lab::brauer
