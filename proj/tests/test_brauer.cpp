#include "weil_lab/brauer.hpp"

#include <doctest.h>

using namespace weil_lab;
using namespace weil_lab::cyclotomic;
using namespace weil_lab::weil;
using namespace weil_lab::brauer;

TEST_CASE("tate_invariants: (3+4i)/5 as Weil 5-number and at q=25") {
    auto K4 = describe_field(4);
    auto sp = split_prime(K4, 5);
    SlopeVector s{4, 5, {1, -1}};

    auto prof1 = tate_invariants(K4, sp, s, 1);
    CHECK(prof1.center_degree == 2);
    REQUIRE(prof1.entries.size() == 2);
    for (const auto& v : prof1.entries)
        CHECK(v.invariant == 0);
    CHECK(is_commutative(prof1));
    CHECK(division_rank(prof1) == 2);
    CHECK(reciprocity_check(prof1));

    auto prof2 = tate_invariants(K4, sp, s, 2);
    REQUIRE(prof2.entries.size() == 2);
    for (const auto& v : prof2.entries)
        CHECK(v.invariant == Rational(1, 2));
    CHECK_FALSE(is_commutative(prof2));
    CHECK(schur_index(prof2) == 2);
    CHECK(division_rank(prof2) == 4); // quaternionic over degree-2 center
    CHECK(reciprocity_check(prof2));
}

TEST_CASE("tate_invariants: torsion gives the zero profile") {
    auto K4 = describe_field(4);
    auto sp = split_prime(K4, 5);
    SlopeVector z{4, 5, {0, 0}};
    auto prof = tate_invariants(K4, sp, z, 1);
    CHECK(prof.center_degree == 1);
    CHECK(is_commutative(prof));
    CHECK(division_rank(prof) == 1);
}

TEST_CASE("rank examples from fixed profiles") {
    InvariantProfile zero2;
    zero2.center_degree = 2;
    zero2.entries.push_back({1, {1, 1}, Rational(0)});
    CHECK(is_commutative(zero2));
    CHECK(division_rank(zero2) == 2);

    InvariantProfile halves;
    halves.center_degree = 2;
    halves.entries.push_back({1, {1, 1}, Rational(1, 2)});
    halves.entries.push_back({3, {1, 1}, Rational(1, 2)});
    CHECK(division_rank(halves) == 4);
    CHECK(reciprocity_check(halves));

    InvariantProfile thirds;
    thirds.center_degree = 3;
    thirds.entries.push_back({1, {1, 1}, Rational(1, 3)});
    thirds.entries.push_back({2, {1, 1}, Rational(2, 3)});
    CHECK(division_rank(thirds) == 9);
    CHECK(reciprocity_check(thirds));

    InvariantProfile bad;
    bad.center_degree = 1;
    bad.entries.push_back({1, {1, 1}, Rational(1, 3)});
    bad.entries.push_back({2, {1, 1}, Rational(1, 3)});
    CHECK_FALSE(reciprocity_check(bad)); // malformed input detector
}

TEST_CASE("cyclic_invariant") {
    // F = Q_p, a = p: invariant 1/n
    for (unsigned long n = 1; n <= 6; ++n)
        CHECK(cyclic_invariant({1, 1}, n, 1) == modmath::mod_one(Rational(1, n)));
    // e=1, f=2, n=4, ord 1 -> 1/2
    CHECK(cyclic_invariant({1, 2}, 4, 1) == Rational(1, 2));
    // ord_K(a) = k at e = f = 1: k/n
    CHECK(cyclic_invariant({1, 1}, 5, 3) == Rational(3, 5));
    CHECK(cyclic_invariant({1, 1}, 5, 7) == Rational(2, 5));
    CHECK(cyclic_invariant({1, 1}, 5, -2) == Rational(3, 5));
    // additive in ord_a, vanishes iff n | ord_a * f
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            CHECK(modmath::mod_one(cyclic_invariant({1, 1}, 6, a) +
                                   cyclic_invariant({1, 1}, 6, b)) ==
                  cyclic_invariant({1, 1}, 6, a + b));
    CHECK(cyclic_invariant({1, 2}, 4, 2) == 0);
}

TEST_CASE("real place branch") {
    CHECK(real_place_invariant(0) == 0);
    CHECK(real_place_invariant(2) == 0);
    CHECK(real_place_invariant(1) == Rational(1, 2));
    CHECK(real_place_invariant(3) == Rational(1, 2));
    auto K4 = describe_field(4);
    auto sp = split_prime(K4, 5);
    auto odd = tate_invariants(K4, sp, SlopeVector{4, 5, {0, 0}}, 1, 1);
    CHECK(odd.real_invariant == Rational(1, 2));
    CHECK_FALSE(is_commutative(odd));
}

TEST_CASE("reciprocity and commutativity over slope boxes") {
    for (unsigned long N : {4ul, 3ul, 5ul, 12ul}) {
        auto K = describe_field(N);
        for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
            auto sp = split_prime(K, p);
            unsigned long n = sp.f * K.class_number;
            for (const auto& s : weil::kernel_box(K, sp, p, 2)) {
                auto prof = tate_invariants(K, sp, s, n);
                CHECK(reciprocity_check(prof));
                // q = p: only slopes divisible by f are Weil p-numbers
                bool level1 = true;
                for (long v : s.entries)
                    if (v % static_cast<long>(sp.f) != 0)
                        level1 = false;
                if (level1)
                    CHECK(is_commutative(tate_invariants(K, sp, s, 1)));
            }
        }
    }
}

TEST_CASE("invariant profile of an inert place") {
    auto K4 = describe_field(4);
    auto sp = split_prime(K4, 3); // f = 2, one prime
    SlopeVector z{4, 3, {0}};
    auto prof = tate_invariants(K4, sp, z, 2);
    CHECK(prof.center_degree == 1);
    REQUIRE(prof.entries.size() == 1);
    CHECK(prof.entries[0].invariant == 0);
    // the centre is Q: its unique place over p is Q_p itself
    CHECK(prof.entries[0].local.degree() == 1);
}
