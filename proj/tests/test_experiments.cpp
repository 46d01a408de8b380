#include "weil_lab/experiments.hpp"

#include <doctest.h>

#include <algorithm>

using namespace weil_lab;
using namespace weil_lab::experiments;

TEST_CASE("validate_task") {
    CHECK_THROWS_AS(validate_task({Integer(4), 1, 1, false, 1, 100}), std::invalid_argument);
    CHECK_THROWS_AS(validate_task({Integer(12), 1, 1, false, 1, 100}), std::invalid_argument);
    CHECK_THROWS_AS(validate_task({Integer(1), 1, 1, false, 1, 100}), std::invalid_argument);
    CHECK_THROWS_AS(validate_task({Integer(-1), 1, 1, false, 1, 100}), std::invalid_argument);
    CHECK_THROWS_AS(validate_task({Integer(0), 1, 1, false, 1, 100}), std::invalid_argument);
    CHECK_NOTHROW(validate_task({Integer(-2), 1, 1, false, 1, 100}));
    CHECK_NOTHROW(validate_task({Integer(30), 1, 1, false, 1, 100}));
}

TEST_CASE("enumerate_M with n = 1, k = 1, F = Q is the primitive-root scan") {
    MTask task{Integer(2), 1, 1, false, 1, 200};
    auto got = enumerate_M(task);
    std::vector<unsigned long> oracle;
    for (unsigned long p : modmath::primes_up_to(200))
        if (p != 2 && modmath::multiplicative_order(Integer(2), Integer(p)) == p - 1)
            oracle.push_back(p);
    CHECK(got == oracle);
    CHECK(std::is_sorted(got.begin(), got.end()));
    // spot values: 2 is a primitive root mod 3, 5, 11, 13 but not 7
    CHECK(std::find(got.begin(), got.end(), 3) != got.end());
    CHECK(std::find(got.begin(), got.end(), 11) != got.end());
    CHECK(std::find(got.begin(), got.end(), 7) == got.end());
}

TEST_CASE("enumerate_M with a quotient of order n") {
    // a = 3, n = 2: the image of 3 must generate the order-2 quotient
    // and the index of <3> must divide k = 2
    MTask task{Integer(3), 2, 1, false, 2, 200};
    auto got = enumerate_M(task);
    for (unsigned long p : got) {
        CHECK((p - 1) % 2 == 0);
        // nonresidue: 3^{(p-1)/2} != 1
        CHECK(modmath::powmod(Integer(3), Integer((p - 1) / 2), Integer(p)) != 1);
        Integer idx = Integer(p - 1) / modmath::multiplicative_order(Integer(3), Integer(p));
        CHECK(Integer(2) % idx == 0);
    }
    // oracle recount
    std::size_t count = 0;
    for (unsigned long p : modmath::primes_up_to(200)) {
        if (p == 3 || (p - 1) % 2 != 0)
            continue;
        Integer ord = modmath::multiplicative_order(Integer(3), Integer(p));
        bool nonres = modmath::powmod(Integer(3), Integer((p - 1) / 2), Integer(p)) != 1;
        if (nonres && Integer(2) % (Integer(p - 1) / ord) == 0)
            ++count;
    }
    CHECK(got.size() == count);
}

TEST_CASE("enumerate_M splitting condition in F") {
    // F = Q(zeta_5): only primes = 1 mod 5 survive
    MTask task{Integer(2), 1, 5, false, 0, 500};
    for (unsigned long p : enumerate_M(task))
        CHECK(p % 5 == 1);

    // real subfield of Q(zeta_5): p = +-1 mod 5
    MTask real_task{Integer(2), 1, 5, true, 0, 500};
    auto real_got = enumerate_M(real_task);
    for (unsigned long p : real_got)
        CHECK((p % 5 == 1 || p % 5 == 4));
    // the real condition is strictly weaker
    CHECK(real_got.size() > enumerate_M(task).size());
}

TEST_CASE("enumerate_M: k = 0 disables the index test") {
    // with the index test off, every prime with a of full quotient order
    // n = 1 (i.e. every odd prime coprime to a and split in F) survives
    MTask task{Integer(2), 1, 1, false, 0, 100};
    auto got = enumerate_M(task);
    std::vector<unsigned long> oracle;
    for (unsigned long p : modmath::primes_up_to(100))
        if (p != 2)
            oracle.push_back(p);
    CHECK(got == oracle);
}

TEST_CASE("enumerate_M is independent of the parallel plan") {
    MTask task{Integer(2), 1, 1, false, 1, 2000};
    auto base = enumerate_M(task, 1);
    CHECK(base == enumerate_M(task, 3));
    CHECK(base == enumerate_M(task, 8));
}

TEST_CASE("power_obstruction") {
    CHECK(power_obstruction(Integer(2), 1) == 2);
    CHECK(power_obstruction(Integer(2), 5) == 8);       // phi(5) = 4
    CHECK(power_obstruction(Integer(2), 5, true) == 4); // real subfield
    CHECK(power_obstruction(Integer(3), 12) == 8);      // phi(12) = 4
    CHECK(power_obstruction(Integer(3), 1, true) == 2); // real subfield of Q is Q
}

TEST_CASE("wieferich_search: base 2 below 10^4") {
    auto got = wieferich_search(2, 10000);
    CHECK(got == std::vector<unsigned long>{1093, 3511});
    // recheck the defining congruence at l^2
    for (unsigned long l : got) {
        Integer l2 = Integer(l) * l;
        CHECK(modmath::powmod(Integer(2), Integer(l - 1), l2) == 1);
    }
    // determinism across widths
    CHECK(got == wieferich_search(2, 10000, 8));
}

TEST_CASE("wieferich_search: other bases and the empty verdict") {
    // base 5: l = 2 works since 5^1 = 1 mod 4; next is far away
    auto got5 = wieferich_search(5, 1000);
    CHECK(got5 == std::vector<unsigned long>{2});
    // oracle scan for base 3 below 500 (known: 11, 1006003)
    auto got3 = wieferich_search(3, 500);
    CHECK(got3 == std::vector<unsigned long>{11});
    CHECK(wieferich_search(2, 1000).empty());
}
