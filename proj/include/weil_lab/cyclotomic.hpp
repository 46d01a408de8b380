#ifndef WEIL_LAB_CYCLOTOMIC_HPP
#define WEIL_LAB_CYCLOTOMIC_HPP

#include "weil_lab/errors.hpp"
#include "weil_lab/modmath.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

// Concrete model of the CM field K = Q(zeta_N): Galois group, complex
// conjugation, splitting of rational primes, and exact arithmetic in
// Z[zeta_N] including p-adic valuations.
//
// Conventions used throughout:
//  * The Galois group Gal(K/Q) is (Z/NZ)^x, sigma_a(zeta) = zeta^a.
//  * For p with N = p^k * N', the p-adic primes of K are labeled by the
//    cosets of <p> in (Z/N'Z)^x, each named by its smallest member.
//    The prime labeled t is the kernel of zeta |-> eta^t for a fixed
//    primitive N'-th root of unity eta in the residue field F_{p^f}.
//    Consequently sigma_a sends the prime labeled t to the one labeled
//    t * a^{-1}, and complex conjugation sends t to -t.

namespace weil_lab::cyclotomic {

unsigned long euler_phi(unsigned long n);

// Coefficients of the N-th cyclotomic polynomial, constant term first,
// monic of degree phi(N).
std::vector<Integer> cyclotomic_polynomial(unsigned long n);

struct CyclotomicField {
    unsigned long conductor = 0;       // N >= 3, N != 2 mod 4
    unsigned long degree = 0;          // phi(N)
    unsigned long torsion_order = 0;   // m = |mu(K)| = lcm(2, N)
    unsigned long class_number = 0;    // h_K, from the embedded table or override
    unsigned long real_subfield_degree = 0;
    std::vector<Integer> min_poly;       // Phi_N
    std::vector<unsigned long> units;    // (Z/NZ)^x, ascending
};

// Populate the field data for conductor N. Throws UnsupportedConductor
// when N is not canonical (N < 3 or N = 2 mod 4) or when h_K is not in
// the embedded table and no override supplies it.
CyclotomicField describe_field(unsigned long N);

// Class-number overrides, merged on top of the embedded h = 1 table.
// Table file format: one "conductor class_number" pair per line;
// '#' starts a comment.
void set_class_number_overrides(const std::map<unsigned long, unsigned long>& table);
std::map<unsigned long, unsigned long> load_field_table(const std::string& path);
void clear_class_number_overrides();

struct PrimeSplitting {
    unsigned long p = 0;
    unsigned long p_power = 1;  // p^k, the p-part of N
    unsigned long cofactor = 1; // N' = N / p^k
    unsigned long e = 1;        // ramification index, phi(p^k)
    unsigned long f = 1;        // inertia degree, ord of p mod N'
    unsigned long g = 1;        // number of p-adic primes
    std::vector<unsigned long> labels;              // canonical coset reps, ascending
    std::vector<std::vector<std::size_t>> fibers;   // primes of the real subfield,
                                                    // as conjugation orbits of label indices

    unsigned long label_of(unsigned long t) const;  // canonical rep of the coset t<p>
    std::size_t index_of(unsigned long label) const;
    unsigned long conjugate(unsigned long label) const;
    // sigma_a acting on primes: the image of the prime labeled `label`.
    unsigned long act(unsigned long a, unsigned long label) const;
};

PrimeSplitting split_prime(const CyclotomicField& K, unsigned long p);

// Element of Q(zeta_N) with a p-power (or trivial) denominator, stored
// as an integer coefficient vector over the power basis 1, zeta, ...,
// zeta^{phi(N)-1}.
struct RingElement {
    unsigned long conductor = 0;
    std::vector<Integer> coeffs;
    Integer den = 1;

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const RingElement& other) const = default;
};

RingElement re_zero(unsigned long N);
RingElement re_one(unsigned long N);
RingElement re_rational(unsigned long N, const Integer& num, const Integer& den = 1);
RingElement re_zeta_power(unsigned long N, unsigned long j);
// Power of the canonical generator of mu(K): -zeta_N for odd N (order 2N),
// zeta_N for even N.
RingElement re_torsion_unit(unsigned long N, unsigned long j);

RingElement re_add(const RingElement& a, const RingElement& b);
RingElement re_sub(const RingElement& a, const RingElement& b);
RingElement re_mul(const RingElement& a, const RingElement& b);
RingElement re_pow(const RingElement& a, unsigned long n);
RingElement re_galois(const RingElement& a, unsigned long sigma);
RingElement re_conj(const RingElement& a);
// Multiplicative inverse; requires the numerator's norm to be +-(power of p)
// times den-compatible content, which holds for all elements this artifact
// inverts. p = 0 means "numerator must be a unit".
RingElement re_inverse(const RingElement& a, unsigned long p);

// Exact norm K -> Q as product of all Galois conjugates.
Rational element_norm(const RingElement& x);
Integer integral_norm(unsigned long N, const std::vector<Integer>& coeffs);

// Strict total order for canonical sorting of orbit representatives.
bool re_less(const RingElement& a, const RingElement& b);

// p-adic valuation machinery for one (K, p) pair. Immutable after
// construction; safe for concurrent use.
class PAdicContext {
public:
    PAdicContext(const CyclotomicField& K, unsigned long p);
    ~PAdicContext();
    PAdicContext(PAdicContext&&) noexcept;

    const CyclotomicField& field() const;
    const PrimeSplitting& splitting() const;

    // ord_w of a nonzero element at the prime labeled `label`,
    // normalized so that ord_w maps K^x onto Z.
    long ord(const RingElement& x, unsigned long label) const;

    // Valuations at all p-adic primes, in label order.
    std::vector<long> ord_vector(const RingElement& x) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Bounded search for a generator of p_w^exponent: an integral element with
// ord_w = exponent at the requested prime and 0 at every other finite
// prime, with all power-basis coefficients bounded by coeff_bound.
// Returns nullopt when the box is exhausted.
std::optional<RingElement> find_prime_generator(const PAdicContext& ctx,
                                                unsigned long label,
                                                unsigned long exponent,
                                                unsigned long coeff_bound);

} // namespace weil_lab::cyclotomic

#endif
