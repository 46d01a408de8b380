#include "weil_lab/category.hpp"

#include "weil_lab/errors.hpp"

#include <doctest.h>

using namespace weil_lab;
using namespace weil_lab::cyclotomic;
using namespace weil_lab::weil;
using namespace weil_lab::category;

TEST_CASE("simple classes from elements") {
    auto K4 = describe_field(4);
    auto one = simple_from_element(K4, re_one(4));
    CHECK(one.rank == 1);
    CHECK(one.center_degree == 1);

    // i and -i form one orbit of rank 2; i^4 = 1 so the center is Q
    auto ci = simple_from_element(K4, re_torsion_unit(4, 1));
    CHECK(ci.rank == 2);
    CHECK(ci.center_degree == 1);
    CHECK(ci == simple_from_element(K4, re_torsion_unit(4, 3)));

    // (3+4i)/5 and its conjugate; pi^4 is irrational, center degree 2
    RingElement x{4, {Integer(3), Integer(4)}, Integer(5)};
    auto cx = simple_from_element(K4, x);
    CHECK(cx.rank == 2);
    CHECK(cx.center_degree == 2);
    CHECK(cx == simple_from_element(K4, re_conj(x)));
}

TEST_CASE("simple_from_weil") {
    auto K4 = describe_field(4);
    PAdicContext ctx(K4, 5);
    auto kb = kernel_basis(K4, ctx.splitting(), 5);
    auto w = construct_weil(ctx, kb[0], 1, 8);
    auto s = simple_from_weil(K4, w);
    CHECK(s.level == 1);
    CHECK(s.rank == 2);
    CHECK(s.center_degree == 2);

    // level 1 without the explicit element: no certificate
    WeilElement bare;
    bare.level = 1;
    bare.slope = kb[0];
    CHECK_THROWS_AS(simple_from_weil(K4, bare), MissingCertificate);

    // level > 1 falls back to the slope orbit
    auto K12 = describe_field(12);
    PAdicContext ctx12(K12, 5);
    auto kb12 = kernel_basis(K12, ctx12.splitting(), 5);
    WeilElement w2;
    w2.level = 2;
    w2.slope = kb12[0];
    auto s2 = simple_from_weil(K12, w2);
    CHECK(s2.level == 2);
    CHECK(s2.orbit.empty());
    CHECK_FALSE(s2.slope_orbit.empty());
    CHECK(s2.rank == s2.slope_orbit.size());
}

TEST_CASE("direct sums and ranks") {
    auto K4 = describe_field(4);
    auto u = unit_object(K4);
    CHECK(u.total_rank() == 1);
    auto ci = object_of(simple_from_element(K4, re_torsion_unit(4, 1)), 2);
    CHECK(ci.total_rank() == 4);
    auto sum = direct_sum(u, ci);
    CHECK(sum.total_rank() == 5);
    // summing merges multiplicities of equal classes
    auto twice = direct_sum(ci, ci);
    REQUIRE(twice.terms.size() == 1);
    CHECK(twice.terms[0].second == 4);
    CHECK(direct_sum(u, ci) == direct_sum(ci, u));
}

TEST_CASE("tensor products regroup into orbits") {
    auto K4 = describe_field(4);
    auto u = unit_object(K4);
    auto ci = object_of(simple_from_element(K4, re_torsion_unit(4, 1)));

    // unit is a tensor identity
    CHECK(tensor(K4, u, ci) == ci);
    CHECK(tensor(K4, ci, u) == ci);

    // {i,-i} x {i,-i} = {-1,-1,1,1}: two rank-1 classes, multiplicity 2
    auto sq = tensor(K4, ci, ci);
    CHECK(sq.total_rank() == 4);
    REQUIRE(sq.terms.size() == 2);
    CHECK(sq.terms[0].second == 2);
    CHECK(sq.terms[1].second == 2);
    for (const auto& [cls, mult] : sq.terms)
        CHECK(cls.rank == 1);

    // rank 2 x rank 2 with a nontrivial slope
    RingElement x{4, {Integer(3), Integer(4)}, Integer(5)};
    auto cx = object_of(simple_from_element(K4, x));
    auto prod = tensor(K4, cx, ci);
    CHECK(prod.total_rank() == 4);

    // rank is multiplicative, tensor is commutative
    CHECK(tensor(K4, cx, cx).total_rank() == 4);
    CHECK(tensor(K4, cx, ci) == tensor(K4, ci, cx));

    // associativity on a small case
    CHECK(tensor(K4, tensor(K4, ci, ci), cx) == tensor(K4, ci, tensor(K4, ci, cx)));

    // level > 1 simples are not tensorable here
    auto K12 = describe_field(12);
    PAdicContext ctx12(K12, 5);
    WeilElement w2;
    w2.level = 2;
    w2.slope = kernel_basis(K12, ctx12.splitting(), 5)[0];
    auto lvl2 = object_of(simple_from_weil(K12, w2));
    CHECK_THROWS_AS(tensor(K12, lvl2, lvl2), UnsupportedLevel);
}

TEST_CASE("duals") {
    auto K4 = describe_field(4);
    RingElement x{4, {Integer(3), Integer(4)}, Integer(5)};
    auto cx = object_of(simple_from_element(K4, x));
    auto ci = object_of(simple_from_element(K4, re_torsion_unit(4, 1)));

    // conjugation-stable orbits are self-dual; dual is an involution
    CHECK(dual(K4, cx) == cx);
    CHECK(dual(K4, ci) == ci);
    auto mixed = direct_sum(cx, direct_sum(ci, unit_object(K4)));
    CHECK(dual(K4, dual(K4, mixed)) == mixed);
    CHECK(dual(K4, mixed).total_rank() == mixed.total_rank());

    // over F_p the pairing X (x) dual(X) contains the unit once per
    // orbit member: the diagonal pairs multiply to 1
    auto pairing = tensor(K4, cx, dual(K4, cx));
    unsigned long unit_mult = 0;
    for (const auto& [cls, mult] : pairing.terms)
        if (object_of(cls) == unit_object(K4))
            unit_mult = mult;
    CHECK(unit_mult == 2);

    // level > 1 dual negates the slopes
    auto K12 = describe_field(12);
    PAdicContext ctx12(K12, 5);
    WeilElement w2;
    w2.level = 2;
    w2.slope = kernel_basis(K12, ctx12.splitting(), 5)[0];
    auto lvl2 = object_of(simple_from_weil(K12, w2));
    CHECK(dual(K12, dual(K12, lvl2)) == lvl2);
}

TEST_CASE("torsion_character_check") {
    auto K4 = describe_field(4);
    CHECK(torsion_character_check(K4, 1));
    CHECK(torsion_character_check(K4, 2));
    auto K3 = describe_field(3);
    CHECK(torsion_character_check(K3, 1));

    set_class_number_overrides({{23, 3}});
    auto K23 = describe_field(23);
    CHECK_THROWS_AS(torsion_character_check(K23, 1), DivisibilityError);
    CHECK(torsion_character_check(K23, 3));
    clear_class_number_overrides();
}
