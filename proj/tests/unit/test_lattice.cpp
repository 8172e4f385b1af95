#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cocycle/lattice.hpp"

using namespace cocycle;

TEST_CASE("smith normal form of a small integer matrix") {
    auto s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3, 0);
    CHECK(s.diag == Vec{2, 6, 12});
}

TEST_CASE("subquotient of Z^2 by a sublattice") {
    Vec mod{0, 0};
    auto big = echelon({{1, 0}, {0, 1}}, mod);
    auto small = echelon({{2, 0}, {0, 3}}, mod);
    Subquotient q(big, small);
    CHECK(q.invariants() == Vec{6});
    CHECK(q.order() == 6);
    auto c = q.coords({1, 1});
    CHECK(c.size() == 1);
    CHECK((c[0] == 1 || c[0] == 5));
}

TEST_CASE("modular columns") {
    Vec mod{4, 4};
    auto big = echelon({}, mod);  // all of Z4^2 ... represented by relations only
    auto all = echelon({{1, 0}, {0, 1}}, mod);
    auto rel = echelon({}, mod);
    Subquotient q(all, rel);
    CHECK(q.invariants() == Vec{4, 4});
    auto two = echelon({{2, 0}}, mod);
    Subquotient q2(two, rel);
    CHECK(q2.invariants() == Vec{2});
    CHECK(big.rows.size() == 2);
}

TEST_CASE("kernel and solve agree with enumeration mod 6") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix M(2, 2);
        for (auto& x : M.a) x = int(rng() % 6);
        Vec mod{6, 6};
        auto K = kernel_lattice(M, mod, mod);
        int count = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                Vec y = reduce(M.apply({a, b}), mod);
                bool in = is_zero(y);
                count += in;
                CHECK(K.contains({a, b}) == in);
            }
        Subquotient q(K, echelon({}, mod));
        CHECK(q.order() == count);
        Vec b{int64_t(rng() % 6), int64_t(rng() % 6)};
        auto x = solve(M, b, mod, mod);
        bool solvable = false;
        for (int a = 0; a < 6 && !solvable; ++a)
            for (int c = 0; c < 6 && !solvable; ++c) solvable = reduce(M.apply({a, c}), mod) == reduce(b, mod);
        CHECK(x.has_value() == solvable);
        if (x) CHECK(reduce(M.apply(*x), mod) == reduce(b, mod));
    }
}

TEST_CASE("overflow is reported") {
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), ResourceError);
}
