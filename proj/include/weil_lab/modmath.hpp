#ifndef WEIL_LAB_MODMATH_HPP
#define WEIL_LAB_MODMATH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

// Exact integer/rational arithmetic, primality, multiplicative orders and
// power-residue tests. Everything is a pure function over immutable values;
// no floating point anywhere.

namespace weil_lab {

using Integer = mpz_class;
using Rational = mpq_class;

struct NotCoprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace modmath {

// Primality verdict. Deterministic (Miller-Rabin with a proven base set)
// for n < 2^64; probabilistic with 64 rounds above, in which case
// `proven` is false and callers should surface "probable prime".
struct PrimalityResult {
    bool prime = false;
    bool proven = true;
};

PrimalityResult classify_prime(const Integer& n);

inline bool is_prime(const Integer& n) { return classify_prime(n).prime; }

Integer powmod(const Integer& base, const Integer& exp, const Integer& modulus);

// Ascending primes <= bound (simple sieve).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Factor n by trial division. Throws std::domain_error if a cofactor
// above bound^2 remains composite; callers here only factor desk-scale
// group orders.
std::map<Integer, unsigned> factor(Integer n, std::uint64_t trial_bound = 1'000'000);

// Smallest d >= 1 with a^d = 1 mod modulus. Throws NotCoprime.
Integer multiplicative_order(const Integer& a, const Integer& modulus);

// True iff a is an r-th power in (Z/lZ)^x, via a^((l-1)/r) = 1 mod l.
// Requires r | l-1 and l coprime to a (BadModulus otherwise).
bool is_rth_power_residue(const Integer& a, const Integer& r, const Integer& l);

// Canonical representative of x mod m in [0, m).
Integer mod_reduce(const Integer& x, const Integer& m);

// Inverse of a mod m; throws NotCoprime.
Integer invmod(const Integer& a, const Integer& m);

// Fractional part of q as a rational in [0, 1).
Rational mod_one(const Rational& q);

// p-adic valuation of a nonzero integer.
unsigned long ord_p(const Integer& x, const Integer& p);

} // namespace modmath
} // namespace weil_lab

#endif
