#ifndef WEIL_LAB_WEIL_HPP
#define WEIL_LAB_WEIL_HPP

#include "weil_lab/cyclotomic.hpp"

#include <optional>
#include <vector>

// The groups W_0^K(p^n) and W_0^K(p,n) of weight-0 Weil numbers, in the
// slope-vector representation: a Weil number is primarily a
// (torsion exponent, slope) pair at a level n, with an optional explicit
// certificate for pi^n as an element of K with p-power denominator.
// The n-th root pi itself is never materialized as an algebraic number.

namespace weil_lab::weil {

using cyclotomic::CyclotomicField;
using cyclotomic::PAdicContext;
using cyclotomic::PrimeSplitting;
using cyclotomic::RingElement;

// Integer vector on the p-adic primes of K, in label order. Membership in
// the kernel lattice (fiber sums vanish) is what makes it the slope of a
// weight-0 Weil number.
struct SlopeVector {
    unsigned long conductor = 0;
    unsigned long p = 0;
    std::vector<long> entries; // parallel to PrimeSplitting::labels

    bool is_zero() const;
    bool operator==(const SlopeVector&) const = default;
};

struct WeilElement {
    unsigned long level = 1;            // n, divisible by f_K * h_K
    unsigned long torsion_exponent = 0; // mod m*n, on the canonical generator of mu_{mn}
    SlopeVector slope;                  // slope of pi^n in W_0^K(p^n)
    std::optional<RingElement> explicit_power; // pi^n as an element of K
};

// Weight-0 infinity type: exponents n_sigma indexed by the units mod N,
// with n_sigma + n_{-sigma} = 0.
struct InfinityType {
    unsigned long conductor = 0;
    std::vector<long> exponents; // parallel to CyclotomicField::units
};

// Slope lattice membership: fiber sums over the real subfield vanish.
bool in_kernel_lattice(const PrimeSplitting& sp, const SlopeVector& s);

// Basis of the kernel of Z^X -> Z^Y: one vector e_w - e_{w-bar} per
// conjugation orbit of size two. Size |X| - |Y|.
std::vector<SlopeVector> kernel_basis(const CyclotomicField& K, const PrimeSplitting& sp,
                                      unsigned long p);

// The vector n_w(x) = ord_w(x)/ord_w(q) * [K_w:Q_p] at q = p^q_exp,
// together with the integrality verdict (membership in W_0^K(q)).
struct IntegralityResult {
    std::vector<Rational> entries;
    bool integral = false;
};
IntegralityResult integrality_vector(const PAdicContext& ctx, const RingElement& x,
                                     unsigned long q_exp);

// Slope of an explicit element of W_0^K(q), q = p^q_exp. Throws NotIntegral
// when some n_w is not an integer.
SlopeVector slope_of(const PAdicContext& ctx, const RingElement& x, unsigned long q_exp);

// m * n. Throws DivisibilityError unless f_K * h_K | n.
unsigned long torsion_order(const CyclotomicField& K, const PrimeSplitting& sp, unsigned long n);

// Explicit construction of a Weil element with the requested slope at
// level n (Prop-4 style: infinity type applied to a prime generator).
// Requires h_K = 1 for the explicit certificate. The result is verified
// post-hoc: slope round-trips and pi^n * conj(pi^n) = 1 exactly.
WeilElement construct_weil(const PAdicContext& ctx, const SlopeVector& s, unsigned long n,
                           unsigned long coeff_bound);

// As above but retries with doubled coefficient bounds up to max_bound.
WeilElement construct_weil_auto(const PAdicContext& ctx, const SlopeVector& s, unsigned long n,
                                unsigned long max_bound = 16);

// Degree of the centre Q[pi^{mn}] over Q: the Galois orbit size of the
// slope (and of the explicit (pi^n)^m when present, cross-checked).
unsigned long center_degree(const PAdicContext& ctx, const WeilElement& w);

// Stabilizer of the slope inside (Z/NZ)^x; the centre is its fixed field.
std::vector<unsigned long> slope_stabilizer(const CyclotomicField& K, const PrimeSplitting& sp,
                                            const SlopeVector& s);

// Galois action on slopes: entries permuted by sigma_a acting on the primes.
SlopeVector slope_galois(const PrimeSplitting& sp, const SlopeVector& s, unsigned long a);

// All slope vectors of the kernel lattice with |a_w| <= box.
std::vector<SlopeVector> kernel_box(const CyclotomicField& K, const PrimeSplitting& sp,
                                    unsigned long p, long box);

} // namespace weil_lab::weil

#endif
