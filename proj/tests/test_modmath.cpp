#include "weil_lab/modmath.hpp"

#include <doctest.h>

#include <random>

using namespace weil_lab;
using namespace weil_lab::modmath;

TEST_CASE("classify_prime on known values") {
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(3)));
    CHECK(is_prime(Integer(1093)));
    CHECK(is_prime(Integer(3511)));
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK_FALSE(is_prime(Integer(0)));
    CHECK_FALSE(is_prime(Integer(561)));    // Carmichael
    CHECK_FALSE(is_prime(Integer(341)));    // Fermat pseudoprime base 2
    CHECK(classify_prime(Integer(97)).proven);
    // 2^89 - 1 is a Mersenne prime above the deterministic range
    Integer m89 = (Integer(1) << 89) - 1;
    auto r = classify_prime(m89);
    CHECK(r.prime);
    CHECK_FALSE(r.proven);
}

TEST_CASE("powmod against naive multiplication") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Integer base = rng() % 1000;
        unsigned long exp = rng() % 50;
        Integer mod = 2 + rng() % 997;
        Integer naive = 1;
        for (unsigned long j = 0; j < exp; ++j)
            naive = naive * base % mod;
        CHECK(powmod(base, Integer(exp), mod) == naive);
    }
}

TEST_CASE("primes_up_to against trial division") {
    auto primes = primes_up_to(200);
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t n = 2; n <= 200; ++n) {
        bool p = true;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                p = false;
                break;
            }
        if (p)
            oracle.push_back(n);
    }
    CHECK(primes == oracle);
    CHECK(primes_up_to(1).empty());
}

TEST_CASE("factor recombines") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        Integer n = 2 + rng() % 100000;
        Integer prod = 1;
        for (const auto& [p, k] : factor(n)) {
            CHECK(is_prime(p));
            for (unsigned j = 0; j < k; ++j)
                prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(Integer(2), Integer(7)) == 3);
    CHECK(multiplicative_order(Integer(3), Integer(7)) == 6);
    CHECK(multiplicative_order(Integer(1), Integer(5)) == 1);
    CHECK_THROWS_AS(multiplicative_order(Integer(6), Integer(4)), NotCoprime);
    // minimality against a scan
    for (unsigned long m : {11ul, 13ul, 36ul}) {
        for (unsigned long a = 2; a < m; ++a) {
            if (gcd(Integer(a), Integer(m)) != 1)
                continue;
            Integer d = multiplicative_order(Integer(a), Integer(m));
            CHECK(powmod(Integer(a), d, Integer(m)) == 1);
            for (Integer j = 1; j < d; ++j)
                CHECK(powmod(Integer(a), j, Integer(m)) != 1);
        }
    }
}

TEST_CASE("is_rth_power_residue") {
    // fourth powers mod 13 are {1, 3, 9}
    for (unsigned long a = 1; a < 13; ++a) {
        bool expect = (a == 1 || a == 3 || a == 9);
        CHECK(is_rth_power_residue(Integer(a), Integer(4), Integer(13)) == expect);
    }
    CHECK_THROWS_AS(is_rth_power_residue(Integer(13), Integer(4), Integer(13)), BadModulus);
}

TEST_CASE("mod_reduce, invmod, mod_one, ord_p") {
    CHECK(mod_reduce(Integer(-1), Integer(5)) == 4);
    CHECK(mod_reduce(Integer(12), Integer(5)) == 2);
    CHECK(invmod(Integer(5), Integer(13)) == 8);
    CHECK_THROWS_AS(invmod(Integer(4), Integer(8)), NotCoprime);
    CHECK(mod_one(Rational(7, 3)) == Rational(1, 3));
    CHECK(mod_one(Rational(-1, 4)) == Rational(3, 4));
    CHECK(mod_one(Rational(4, 2)) == 0);
    CHECK(ord_p(Integer(250), Integer(5)) == 3);
    CHECK(ord_p(Integer(7), Integer(5)) == 0);
}
