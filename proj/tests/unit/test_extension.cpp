#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cocycle/extension.hpp"

using namespace cocycle;

namespace {

std::shared_ptr<const GAction> trivial(const FiniteGroup& G, int64_t m) {
    return std::make_shared<GAction>(GAction::trivial(G, AbelianGroup::cyclic(m)));
}

// Direct check of the group axioms on a table, independent of verify_group.
bool naive_group(const Table2& t) {
    const int n = int(t.size());
    for (int a = 0; a < n; ++a) {
        if (t[0][a] != a || t[a][0] != a) return false;
        bool inv = false;
        for (int b = 0; b < n; ++b) inv = inv || (t[a][b] == 0 && t[b][a] == 0);
        if (!inv) return false;
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("trivial factor system gives the direct product") {
    auto S = trivial(make_cyclic(3), 2);
    auto E = build_extension(abelian_factor_system(*S, Cochain(S, 2)));
    CHECK(E.E.order() == 6);
    CHECK(E.E.is_abelian());
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int e = E.E.mul(x, y);
            CHECK(E.fiber(e) == (E.fiber(x) + E.fiber(y)) % 2);
            CHECK(E.base(e) == (E.base(x) + E.base(y)) % 3);
        }
}

TEST_CASE("nontrivial cocycle on Z2 by Z2 gives Z4") {
    auto S = trivial(make_cyclic(2), 2);
    Cochain f(S, 2);
    f.set({1, 1}, {1});
    auto E = build_extension(abelian_factor_system(*S, f));
    CHECK(E.E.element_order(E.index(0, 1)) == 4);
    CHECK(section_cocycle(E, {E.section(0), E.section(1)}) == table_of(f));
}

TEST_CASE("violations are named") {
    auto S = trivial(make_cyclic(3), 3);
    Cochain f(S, 2);
    f.set({1, 1}, {1});  // not a cocycle
    auto fs = abelian_factor_system(*S, f);
    auto v = check_factor_system(fs);
    REQUIRE(v.has_value());
    CHECK(v->which == "d_S omega");
    CHECK(v->where.size() == 3);
    CHECK_THROWS_AS(build_extension(fs), InputError);
}

TEST_CASE("sections") {
    auto S = trivial(make_cyclic(2), 2);
    auto E0 = build_extension(abelian_factor_system(*S, Cochain(S, 2)));
    // homomorphic section of the split extension
    auto w = section_cocycle(E0, {0, E0.index(0, 1)});
    CHECK(w == Table2{{0, 0}, {0, 0}});
    CHECK_THROWS_AS(section_cocycle(E0, {0, E0.index(1, 0)}), InputError);

    // perturbed section on Z4 by Z3 with a sign action: delta changes by dc
    auto G = make_cyclic(4);
    AbelianGroup A = AbelianGroup::cyclic(3);
    auto T = std::make_shared<const GAction>(G, A, std::vector<IntMat>{{{1}}, {{-1}}, {{1}}, {{-1}}});
    std::mt19937 rng(2);
    Cochain h(T, 1), c(T, 1);
    for (int g = 1; g < 4; ++g) {
        h.set({g}, {int64_t(rng() % 3)});
        c.set({g}, {int64_t(rng() % 3)});
    }
    Cochain f = differential(h);
    f.set({2, 3}, A.add(f.at({2, 3}), {0}));
    auto E = build_extension(abelian_factor_system(*T, f));
    std::vector<int> sig(4);
    for (int g = 0; g < 4; ++g) sig[g] = E.index(int(A.index(c.at({g}))), g);
    auto w2 = section_cocycle(E, sig);
    CHECK(w2 == table_of(f + differential(c)));
}

TEST_CASE("equivalence of abelian extensions") {
    auto S = trivial(make_cyclic(2), 2);
    Cochain zero(S, 2), f(S, 2);
    f.set({1, 1}, {1});
    auto Z4 = build_extension(abelian_factor_system(*S, f));
    auto V = build_extension(abelian_factor_system(*S, zero));
    auto self = equivalence_test(Z4, Z4);
    REQUIRE(self.has_value());
    CHECK(self->is_zero());
    CHECK_FALSE(equivalence_test(Z4, V).has_value());

    auto T = trivial(make_cyclic(3), 3);
    Cochain h(T, 1);
    h.set({1}, {1});
    h.set({2}, {2});
    Cochain g(T, 2);
    auto E1 = build_extension(abelian_factor_system(*T, g));
    auto E2 = build_extension(abelian_factor_system(*T, g + differential(h)));
    auto c = equivalence_test(E1, E2);
    REQUIRE(c.has_value());
    CHECK(is_cocycle(*c - h));
}

TEST_CASE("abelian structure recovers invariant factors") {
    auto s = abelian_structure(make_product(make_cyclic(2), make_cyclic(4)));
    CHECK(s.A.torsion == Vec{2, 4});
    auto s6 = abelian_structure(make_product(make_cyclic(2), make_cyclic(3)));
    CHECK(s6.A.torsion == Vec{6});
    for (int a = 0; a < 6; ++a) CHECK(s6.element_of(s6.coords[a]) == a);
    CHECK_THROWS_AS(abelian_structure(make_dihedral(3)), InputError);
}

TEST_CASE("factor-system criterion matches the group axioms") {
    std::mt19937_64 rng(77);
    int valid = 0, invalid = 0;
    for (int i = 0; i < 150; ++i) {
        auto s = random_factor_system(rng);
        auto t = extension_table(s.fs);
        bool group = naive_group(t);
        CHECK(group == s.valid);
        CHECK(group == !verify_group(t).has_value());
        (s.valid ? valid : invalid)++;
        if (s.valid) {
            auto E = build_extension(s.fs);
            // q is a homomorphism and n -> (n,1) embeds N
            for (int x = 0; x < E.E.order(); ++x)
                for (int y = 0; y < E.E.order(); ++y)
                    CHECK(E.base(E.E.mul(x, y)) == s.fs.G.mul(E.base(x), E.base(y)));
            for (int a = 0; a < s.fs.N.order(); ++a)
                for (int b = 0; b < s.fs.N.order(); ++b)
                    CHECK(E.E.mul(E.index(a, 0), E.index(b, 0)) == E.index(s.fs.N.mul(a, b), 0));
        }
    }
    CHECK(valid > 20);
    CHECK(invalid > 20);
}

TEST_CASE("equivalence is an equivalence relation on random triples") {
    std::mt19937_64 rng(8);
    auto S = std::make_shared<const GAction>(make_cyclic(4), AbelianGroup::cyclic(4),
                                             std::vector<IntMat>{{{1}}, {{-1}}, {{1}}, {{-1}}});
    auto H2 = cohomology(S, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ExtensionGroup> Es;
        for (int k = 0; k < 3; ++k) {
            Cochain h(S, 1);
            for (int g = 1; g < 4; ++g) h.set({g}, {int64_t(rng() % 4)});
            Cochain f = differential(h);
            if (!H2.generators.empty() && rng() % 2) f = f + H2.generators[0];
            Es.push_back(build_extension(abelian_factor_system(*S, f)));
        }
        for (int a = 0; a < 3; ++a) {
            CHECK(equivalence_test(Es[a], Es[a]).has_value());
            for (int b = 0; b < 3; ++b) {
                bool ab = equivalence_test(Es[a], Es[b]).has_value();
                CHECK(ab == equivalence_test(Es[b], Es[a]).has_value());
                for (int c = 0; c < 3; ++c)
                    if (ab && equivalence_test(Es[b], Es[c]).has_value())
                        CHECK(equivalence_test(Es[a], Es[c]).has_value());
            }
        }
    }
}
