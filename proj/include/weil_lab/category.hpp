#ifndef WEIL_LAB_CATEGORY_HPP
#define WEIL_LAB_CATEGORY_HPP

#include "weil_lab/weil.hpp"

// Explicit model of the semisimple category of weight-0 motives over
// F_{p^n} with coefficients generated by K: objects are formal sums of
// Galois orbits of Weil elements. No vector spaces are materialized;
// an object is its eigenvalue data with multiplicities.

namespace weil_lab::category {

using cyclotomic::CyclotomicField;
using cyclotomic::RingElement;
using weil::SlopeVector;
using weil::WeilElement;

struct SimpleClass {
    unsigned long level = 1;
    // level 1: full Galois orbit of the explicit element, sorted.
    std::vector<RingElement> orbit;
    // level > 1: orbit of the slope vector instead.
    std::vector<SlopeVector> slope_orbit;
    unsigned long rank = 1;          // = orbit size over F_p, weight 0
    unsigned long center_degree = 1; // degree of Q[pi^{mn}]

    bool operator==(const SimpleClass&) const = default;
};

struct MotiveObject {
    // sorted by orbit representative; multiplicities >= 1
    std::vector<std::pair<SimpleClass, unsigned long>> terms;

    unsigned long total_rank() const;
    bool operator==(const MotiveObject&) const = default;
};

// Galois orbit of pi. Level 1 requires the explicit representative
// (MissingCertificate otherwise); level > 1 uses the slope orbit and
// reports rank = slope orbit size (a lower bound).
SimpleClass simple_from_weil(const CyclotomicField& K, const WeilElement& w);

// Convenience: level-1 simple straight from an element of K.
SimpleClass simple_from_element(const CyclotomicField& K, const RingElement& x);

MotiveObject object_of(SimpleClass s, unsigned long multiplicity = 1);
MotiveObject direct_sum(const MotiveObject& X, const MotiveObject& Y);

// The unit object: class of pi = 1.
MotiveObject unit_object(const CyclotomicField& K);

// Tensor product with regrouping of the product multiset into Galois
// orbits. Level 1 only; UnsupportedLevel otherwise.
MotiveObject tensor(const CyclotomicField& K, const MotiveObject& X, const MotiveObject& Y);

// Termwise inverse (= conjugate in weight 0); an involution.
MotiveObject dual(const CyclotomicField& K, const MotiveObject& X);

// True iff the torsion subgroup of the implemented Weil group at level n
// is cyclic of order exactly m*n: the canonical torsion unit of K has
// exact order m and the level contributes the cyclic factor n.
// Throws DivisibilityError unless h_K | n.
bool torsion_character_check(const CyclotomicField& K, unsigned long n);

} // namespace weil_lab::category

#endif
