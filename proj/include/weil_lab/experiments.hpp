#ifndef WEIL_LAB_EXPERIMENTS_HPP
#define WEIL_LAB_EXPERIMENTS_HPP

#include "weil_lab/modmath.hpp"

#include <vector>

// Empirical harnesses: the generalized Artin primitive-root set M
// (primes where a generates the order-n quotient, with a splitting
// condition in an abelian field F), the power obstruction bound, and
// the Wieferich scan.

namespace weil_lab::experiments {

struct MTask {
    Integer a;                     // square-free, != +-1
    unsigned long n = 1;           // quotient order
    unsigned long F_conductor = 1; // F = Q(zeta_C), or Q for C = 1
    bool real_subfield = false;    // F = maximal real subfield of Q(zeta_C)
    unsigned long k = 1;           // index of <a> must divide k; 0 disables the test
    unsigned long bound = 0;
};

// Throws std::invalid_argument unless a is square-free and != +-1.
void validate_task(const MTask& task);

// Ascending primes p <= bound with p coprime to a, p split in F
// (congruence: p = 1 mod C, or p = +-1 mod C for the real subfield),
// the class of a generating a cyclic quotient of (Z/pZ)^x of order n,
// and (unless k = 0) the index of <a> in (Z/pZ)^x dividing k. With
// n = 1, k = 1, F = Q this is the primitive-root scan for a.
std::vector<unsigned long> enumerate_M(const MTask& task, unsigned parallel_width = 1);

// Conservative divisor bound N = 2*[F:Q]: every m with a an m-th power
// in F*Q^ab divides it. The even-m side is a bound, not sharp.
unsigned long power_obstruction(const Integer& a, unsigned long F_conductor,
                                bool real_subfield = false);

// Primes l <= bound, l != p, with p^{l-1} = 1 mod l^2, ascending.
std::vector<unsigned long> wieferich_search(unsigned long p, unsigned long bound,
                                            unsigned parallel_width = 1);

} // namespace weil_lab::experiments

#endif
