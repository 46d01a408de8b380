#ifndef WEIL_LAB_LSEARCH_HPP
#define WEIL_LAB_LSEARCH_HPP

#include "weil_lab/weil.hpp"

#include <string>

// Search for primes l such that the degree-mn cyclic subfield L of
// Q(zeta_l) has (p) inert (condition a) and every generator pi^{mn} a
// local norm at the ramified prime (condition b), via the sufficient
// congruence conditions (c) and (d). L is only ever sought inside
// Q(zeta_l), so it ramifies at l alone.

namespace weil_lab::lsearch {

using cyclotomic::CyclotomicField;
using cyclotomic::PrimeSplitting;
using cyclotomic::RingElement;
using weil::WeilElement;

enum class Mode { sufficient_cd, full_ab };
enum class Verdict { yes, no, undetermined };

const char* to_string(Verdict v);

struct SearchTask {
    CyclotomicField K;
    unsigned long p = 0;
    unsigned long n = 1;                  // level, divisible by f_K * h_K
    unsigned long mn = 0;                 // m * n = torsion order at level n
    std::vector<WeilElement> generators;  // generate W_0^K(p^n) mod torsion
    unsigned long bound = 0;
    Mode mode = Mode::full_ab;
};

// Builds the task for (K, p, n): kernel-basis generators constructed
// explicitly, mn = m*n. Throws DivisibilityError / GeneratorNotFound.
SearchTask make_task(const CyclotomicField& K, unsigned long p, unsigned long n,
                     unsigned long bound, Mode mode = Mode::full_ab);

struct Candidate {
    unsigned long l = 0;
    bool passes_c = false;
    bool passes_d = false;
    Verdict passes_b = Verdict::undetermined;
    bool passes_a = false; // = passes_c for L inside Q(zeta_l)
    bool hit = false;      // per task mode
    std::string L_description;
    std::vector<std::string> certificate;
};

// (c): mn | l-1 and the class of p generates the order-mn quotient of
// (Z/lZ)^x, i.e. p^{(l-1)/r} != 1 mod l for every prime r | mn.
bool condition_c(unsigned long l, unsigned long p, unsigned long mn);

// (d): l = 1 mod lcm(N, mn) and the residue of each explicit generator
// pi^n at every prime of K above l is an n-th power mod l. Sufficient
// for "l splits in F". Throws MissingCertificate.
bool condition_d(unsigned long l, const SearchTask& task,
                 std::vector<std::string>* certificate = nullptr);

// (b): for each generator, the residues of pi^{mn} at the degree-1
// places of Q[pi^{mn}] above l must be mn-th powers mod l; undetermined
// when some place has residue degree > 1. Requires condition_c.
Verdict condition_b(unsigned long l, const SearchTask& task,
                    std::vector<std::string>* certificate = nullptr);

// Verdicts for one prime l; primes dividing N*mn*p are excluded upstream.
Candidate evaluate_candidate(unsigned long l, const SearchTask& task);

// All primes l <= bound (excluding divisors of N*mn*p), ascending.
// Deterministic: independent of parallel_width.
std::vector<Candidate> search(const SearchTask& task, unsigned parallel_width = 1);

// Smallest hit of a search result, if any.
std::optional<Candidate> first_hit(const std::vector<Candidate>& candidates);

struct ProbeRow {
    unsigned long conductor = 0;
    unsigned long p = 0;
    unsigned long n = 0;
    std::string error;            // e.g. divisibility failure; empty if ok
    bool found = false;
    unsigned long smallest_hit = 0;
    unsigned long hits = 0;
    unsigned long eligible = 0;   // primes l = 1 mod lcm(N, mn) below bound
    Rational heuristic_density;   // 1/phi(mn)
};

struct ProbeReport {
    std::vector<ProbeRow> rows;
};

struct ProbePair {
    unsigned long conductor = 0;
    unsigned long p = 0;
    unsigned long n = 1;
    unsigned long bound = 0;
};

// Evidence collector: per pair the smallest hit or "none below bound",
// plus hit density against the naive heuristic. Never asserts nonexistence.
ProbeReport probe_question(const std::vector<ProbePair>& grid, unsigned parallel_width = 1);

} // namespace weil_lab::lsearch

#endif
