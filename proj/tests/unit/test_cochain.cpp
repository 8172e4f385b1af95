#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cocycle/cochain.hpp"

using namespace cocycle;

namespace {

std::shared_ptr<const GAction> trivial(const FiniteGroup& G, int64_t m) {
    return std::make_shared<GAction>(GAction::trivial(G, AbelianGroup::cyclic(m)));
}

// g acts by (-1)^{chi(g)} where chi is the given parity of each element.
std::shared_ptr<const GAction> sign(const FiniteGroup& G, int64_t m, const std::vector<int>& parity) {
    std::vector<IntMat> mats;
    for (int g = 0; g < G.order(); ++g) mats.push_back(IntMat{{parity[g] ? -1 : 1}});
    return std::make_shared<GAction>(G, AbelianGroup::cyclic(m), mats);
}

Cochain random_cochain(std::shared_ptr<const GAction> S, int p, std::mt19937& rng) {
    Cochain c(S, p);
    for (int64_t i = 0; i < c.size(); ++i) {
        Vec v(S->module().dim());
        for (auto& x : v) x = int64_t(rng() % 97);
        c.set_index(i, v);
    }
    return c;
}

}  // namespace

TEST_CASE("bar differential examples") {
    auto S = trivial(make_cyclic(2), 2);
    Cochain f(S, 1);
    f.set({1}, {1});
    // (df)(1,1) = f(1) - f(0) + f(1) = 0 mod 2
    CHECK(differential(f).at({1, 1}) == Vec{0});
    Cochain z(S, 2);
    CHECK(differential(z).is_zero());
    Cochain g(S, 2);
    g.set({1, 1}, {1});
    CHECK(is_cocycle(g));
    auto cb = is_coboundary(g);
    CHECK(cb.cocycle);
    CHECK_FALSE(cb.witness.has_value());
    auto zero = is_coboundary(z);
    REQUIRE(zero.witness.has_value());
    CHECK(zero.witness->is_zero());
}

TEST_CASE("non-cocycles are flagged") {
    auto S = trivial(make_cyclic(3), 3);
    Cochain f(S, 1);
    f.set({1}, {1});  // not a homomorphism Z3 -> Z3 since f(2) = 0
    auto cb = is_coboundary(f);
    CHECK_FALSE(cb.cocycle);
    CHECK_FALSE(cb.witness.has_value());
}

TEST_CASE("d o d = 0 and coboundaries have witnesses") {
    std::mt19937 rng(11);
    std::vector<std::shared_ptr<const GAction>> actions = {
        trivial(make_cyclic(3), 4), sign(make_cyclic(4), 5, {0, 1, 0, 1}),
        sign(make_dihedral(3), 0, {0, 0, 0, 1, 1, 1}),
        std::make_shared<GAction>(GAction::trivial(make_cyclic(2), AbelianGroup(1, {2})))};
    for (const auto& S : actions)
        for (int p = 0; p <= 2; ++p)
            for (int trial = 0; trial < 100; ++trial) {
                Cochain h = random_cochain(S, p, rng);
                Cochain dh = differential(h);
                CHECK(differential(dh).is_zero());
                if (trial % 10 == 0) {
                    auto cb = is_coboundary(dh);
                    REQUIRE(cb.witness.has_value());
                    CHECK(differential(*cb.witness) == dh);
                }
            }
}

TEST_CASE("small cohomology groups") {
    auto Z2 = make_cyclic(2);
    CHECK(cohomology(trivial(Z2, 2), 2).invariant_factors == Vec{2});
    CHECK(cohomology(trivial(Z2, 2), 3).invariant_factors == Vec{2});
    CHECK(cohomology(trivial(Z2, 3), 2).trivial());
    CHECK(cohomology(trivial(make_cyclic(3), 2), 1).trivial());
    CHECK(cohomology(trivial(Z2, 2), 0).invariant_factors == Vec{2});
    // free coefficients: H^1(Z2, Z) = 0, H^2(Z2, Z) = Z2, H^0 = Z
    auto Zf = std::make_shared<GAction>(GAction::trivial(Z2, AbelianGroup(1, {})));
    CHECK(cohomology(Zf, 0).invariant_factors == Vec{0});
    CHECK(cohomology(Zf, 1).trivial());
    CHECK(cohomology(Zf, 2).invariant_factors == Vec{2});
    // Klein four group: H^2(V, Z2) = Z2^3
    auto V = make_product(Z2, Z2);
    CHECK(cohomology(trivial(V, 2), 2).invariant_factors == Vec{2, 2, 2});
    CHECK_THROWS_AS(cohomology(trivial(Z2, 2), 5), InputError);
}

TEST_CASE("class coordinates") {
    auto S = trivial(make_cyclic(4), 4);
    auto H = cohomology(S, 2);
    REQUIRE(H.invariant_factors == Vec{4});
    for (int k = 0; k < 4; ++k) {
        Cochain rep = H.representative({k});
        CHECK(is_cocycle(rep));
        CHECK(H.class_of(rep) == Vec{k});
        std::mt19937 rng(k);
        Cochain shifted = rep + differential(random_cochain(S, 1, rng));
        CHECK(H.class_of(shifted) == Vec{k});
    }
}

TEST_CASE("oracle agrees with the lattice pipeline") {
    auto Z2 = make_cyclic(2), Z3 = make_cyclic(3), Z4 = make_cyclic(4);
    auto V = make_product(Z2, Z2);
    std::vector<std::shared_ptr<const GAction>> acts = {
        trivial(Z2, 2), trivial(Z3, 2), trivial(Z2, 3), trivial(Z4, 4), trivial(V, 2),
        sign(Z2, 3, {0, 1}), sign(Z4, 4, {0, 1, 0, 1}), sign(V, 3, {0, 1, 1, 0})};
    for (const auto& S : acts)
        for (int p = 0; p <= 3; ++p) {
            auto a = cohomology(S, p).invariant_factors;
            auto b = brute_force_oracle(S, p).invariant_factors;
            CHECK(a == b);
        }
    CHECK(brute_force_oracle(trivial(Z2, 2), 1).invariant_factors == Vec{2});
    CHECK(brute_force_oracle(trivial(Z3, 2), 1).trivial());
}

TEST_CASE("torsion counts to invariant factors") {
    // Z2 x Z4: killed by 1 -> 1, by 2 -> 4, by 4 -> 8
    auto f = [](int64_t k) -> int64_t { return k == 1 ? 1 : k == 2 ? 4 : 8; };
    CHECK(invariants_from_torsion_counts(8, f) == Vec{2, 4});
    // Z6 = Z2 x Z3
    auto g = [](int64_t k) -> int64_t { return k == 1 ? 1 : k == 2 ? 2 : k == 3 ? 3 : k == 4 ? 2 : 3; };
    CHECK(invariants_from_torsion_counts(6, g) == Vec{6});
}

TEST_CASE("base-pointed complex") {
    std::mt19937 rng(5);
    for (int ord : {2, 3}) {
        auto G = make_cyclic(ord);
        AbelianGroup A = AbelianGroup::cyclic(ord);
        for (int n = 0; n <= 2; ++n)
            for (int trial = 0; trial < 100; ++trial) {
                BasepointedCochain d(G, A, n);
                for (auto& v : d.table) v = A.reduce({int64_t(rng() % 7)});
                auto c = basepointed_delta(d);
                CHECK(basepointed_delta(c).is_zero());
                auto w = triviality_witness(c);
                CHECK(basepointed_delta(w) == c);
            }
    }
    // n = 1, hand expansion: (delta d)(g; g1) = d(g g1) - d(g)
    auto G = make_cyclic(2);
    AbelianGroup A = AbelianGroup::cyclic(2);
    BasepointedCochain d(G, A, 0);
    d.table = {{1}, {0}};
    auto c = basepointed_delta(d);
    for (int g = 0; g < 2; ++g)
        for (int g1 = 0; g1 < 2; ++g1)
            CHECK(c.at(g, {g1}) == A.sub(d.at(G.mul(g, g1), {}), d.at(g, {})));
    BasepointedCochain bad(G, A, 1);
    bad.at(0, {1}) = {1};
    CHECK_THROWS_AS(triviality_witness(bad), InputError);
}
