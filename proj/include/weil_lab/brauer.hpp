#ifndef WEIL_LAB_BRAUER_HPP
#define WEIL_LAB_BRAUER_HPP

#include "weil_lab/weil.hpp"

// Exact Brauer-invariant computation for the endomorphism algebras of
// simple weight-0 motives: Tate's formula over the p-adic places of the
// centre, cyclic-algebra invariants for unramified extensions, and the
// rank/commutativity consequences. Places of the centre are computed
// group-theoretically from the slope stabilizer; no p-adic polynomial
// factoring is involved.

namespace weil_lab::brauer {

using cyclotomic::CyclotomicField;
using cyclotomic::PrimeSplitting;
using weil::SlopeVector;

struct LocalFieldData {
    unsigned long e = 1; // ramification index over Q_p
    unsigned long f = 1; // residue degree
    unsigned long degree() const { return e * f; }
};

struct PlaceInvariant {
    unsigned long rep_label = 0; // a p-adic prime of K above this place
    LocalFieldData local;        // of the place in the centre
    Rational invariant;          // in [0, 1)
};

struct InvariantProfile {
    unsigned long center_degree = 1;
    std::vector<unsigned long> stabilizer; // subgroup of (Z/NZ)^x fixing the slope
    std::vector<PlaceInvariant> entries;   // p-adic places of the centre
    Rational real_invariant = 0;           // always 0 in weight 0
};

// Tate's formula at q = p^q_exp for a Weil number given by its slope.
// weight enters only through the real branch and is fixed to 0 by all
// weight-0 inputs; the odd-weight branch exists for unit coverage.
InvariantProfile tate_invariants(const CyclotomicField& K, const PrimeSplitting& sp,
                                 const SlopeVector& slope, unsigned long q_exp,
                                 unsigned long weight = 0);

// Invariant contribution of a real place: 1/2 for odd weight, else 0.
Rational real_place_invariant(unsigned long weight);

bool is_commutative(const InvariantProfile& profile);

// lcm of the orders of the invariants in Q/Z: the Schur index [D:F]^{1/2}.
unsigned long schur_index(const InvariantProfile& profile);

// rank = [D:F]^{1/2} * [F:Q].
unsigned long division_rank(const InvariantProfile& profile);

// Invariant of B(L tensor F, sigma, a) for L/Q_p unramified cyclic of
// degree n with sigma the Frobenius and ord_a = ord_F(a):
// ord_a * f / n mod 1.
Rational cyclic_invariant(const LocalFieldData& local, unsigned long n, long ord_a);

// Global reciprocity: all invariants (including the real one) sum to 0 mod 1.
bool reciprocity_check(const InvariantProfile& profile);

} // namespace weil_lab::brauer

#endif
