#include "weil_lab/modmath.hpp"

namespace weil_lab::modmath {

namespace {

// Deterministic Miller-Rabin base set for n < 2^64 (Sinclair / Jaeschke).
const std::uint64_t kSmallBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(const Integer& n, const Integer& base, const Integer& d, unsigned s) {
    Integer a = base % n;
    if (a == 0)
        return true;
    Integer x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

Integer powmod(const Integer& base, const Integer& exp, const Integer& modulus) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

PrimalityResult classify_prime(const Integer& n) {
    if (n < 2)
        return {false, true};
    for (std::uint64_t b : kSmallBases) {
        if (n == b)
            return {true, true};
        if (mpz_divisible_ui_p(n.get_mpz_t(), b))
            return {false, true};
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        for (std::uint64_t b : kSmallBases)
            if (!miller_rabin_round(n, Integer(b), d, s))
                return {false, true};
        return {true, true};
    }
    int v = mpz_probab_prime_p(n.get_mpz_t(), 64);
    return {v != 0, v == 2};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i)
            sieve[j] = false;
    }
    return out;
}

std::map<Integer, unsigned> factor(Integer n, std::uint64_t trial_bound) {
    if (n < 0)
        n = -n;
    if (n == 0)
        throw std::domain_error("factor: zero");
    std::map<Integer, unsigned> out;
    for (std::uint64_t d = 2; Integer(d) * d <= n && d <= trial_bound; d == 2 ? d = 3 : d += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            ++out[Integer(d)];
            n /= static_cast<unsigned long>(d);
        }
    }
    if (n > 1) {
        if (!is_prime(n))
            throw std::domain_error("factor: composite cofactor beyond trial bound");
        ++out[n];
    }
    return out;
}

Integer multiplicative_order(const Integer& a, const Integer& modulus) {
    if (modulus < 2)
        throw BadModulus("multiplicative_order: modulus < 2");
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1)
        throw NotCoprime("multiplicative_order: gcd(a, modulus) != 1");
    // Group order: phi(modulus) from the factorization of the modulus.
    Integer order = 1;
    for (const auto& [p, e] : factor(modulus)) {
        Integer pe = 1;
        for (unsigned i = 0; i + 1 < e; ++i)
            pe *= p;
        order *= pe * (p - 1);
    }
    Integer d = order;
    for (const auto& [q, e] : factor(order)) {
        (void)e;
        while (mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t()) && powmod(a, d / q, modulus) == 1)
            d /= q;
    }
    return d;
}

bool is_rth_power_residue(const Integer& a, const Integer& r, const Integer& l) {
    if (r < 1 || !mpz_divisible_p(Integer(l - 1).get_mpz_t(), r.get_mpz_t()))
        throw BadModulus("is_rth_power_residue: r does not divide l-1");
    if (mpz_divisible_p(a.get_mpz_t(), l.get_mpz_t()))
        throw BadModulus("is_rth_power_residue: l divides a");
    return powmod(a, (l - 1) / r, l) == 1;
}

Integer mod_reduce(const Integer& x, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer invmod(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw NotCoprime("invmod: not invertible");
    return r;
}

Rational mod_one(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

unsigned long ord_p(const Integer& x, const Integer& p) {
    if (x == 0)
        throw std::domain_error("ord_p: zero");
    Integer n = abs(x);
    unsigned long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace weil_lab::modmath
