#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "cocycle/lifting.hpp"

using namespace cocycle;

namespace {

std::shared_ptr<const GAction> action(const FiniteGroup& G, const AbelianGroup& A, std::vector<IntMat> mats) {
    return std::make_shared<const GAction>(G, A, std::move(mats));
}

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

// Z4 central over N = Z2 with f = 0.
LiftingInstance central_z2_z4(const Table2& f = {{0, 0}, {0, 0}}) {
    FiniteGroup G = make_cyclic(2);
    auto S = std::make_shared<const GAction>(GAction::trivial(G, AbelianGroup::cyclic(4)));
    return make_lifting_instance(G, {0, 1}, S, f);
}

}  // namespace

TEST_CASE("psi_embed") {
    auto inst = central_z2_z4();
    Cochain zero(inst.SN, 1);
    CHECK(psi_embed(inst, zero).perm == identity_perm(8));

    // homomorphism Z2 -> Z4, 1 -> 2
    Cochain h(inst.SN, 1);
    h.set({1}, {2});
    auto psi = psi_embed(inst, h);
    CHECK(psi.phi_A == identity_perm(4));
    CHECK(psi.phi_N == identity_perm(2));
    for (int a = 0; a < 4; ++a) CHECK(psi.perm[inst.hat.index(a, 1)] == inst.hat.index((a + 2) % 4, 1));

    Cochain bad(inst.SN, 1);
    bad.set({1}, {1});
    CHECK_THROWS_AS(psi_embed(inst, bad), InputError);
}

TEST_CASE("pair_action") {
    FiniteGroup N = make_cyclic(2);
    auto S = std::make_shared<const GAction>(GAction::trivial(N, AbelianGroup::cyclic(4)));
    Cochain f(S, 2);
    f.set({1, 1}, {1});
    Perm idA = identity_perm(4), idN = identity_perm(2), negA = {0, 3, 2, 1};

    auto same = pair_action(*S, f, idA, idN);
    CHECK(same.f.flat() == f.flat());
    CHECK(perms_of(*same.S) == perms_of(*S));

    auto neg = pair_action(*S, f, negA, idN);
    CHECK(neg.f.at({1, 1}) == Vec{3});
    CHECK(is_cocycle(neg.f));
    auto back = pair_action(*neg.S, neg.f, inverse(negA), inverse(idN));
    CHECK(back.f.flat() == f.flat());

    // inversion on both N = Z3 and A = Z3, applied twice
    FiniteGroup N3 = make_cyclic(3);
    auto S3 = std::make_shared<const GAction>(GAction::trivial(N3, AbelianGroup::cyclic(3)));
    std::mt19937_64 rng(5);
    Cochain f3 = random_cocycle(S3, 2, rng);
    auto moved = pair_action(*S3, f3, {0, 2, 1}, {0, 2, 1});
    CHECK(is_cocycle(moved.f));
    auto undo = pair_action(*moved.S, moved.f, {0, 2, 1}, {0, 2, 1});
    CHECK(undo.f.flat() == f3.flat());
}

TEST_CASE("in_image_phi") {
    auto inst = central_z2_z4();
    auto t = in_image_phi(inst, identity_perm(4), identity_perm(2));
    REQUIRE(t.lift);
    CHECK(t.h->is_zero());
    CHECK(t.lift->perm == identity_perm(8));

    // f(1,1) = 2 is fixed by -1 on Z4, so -1 lifts
    auto inst2 = central_z2_z4({{0, 0}, {0, 2}});
    auto t2 = in_image_phi(inst2, {0, 3, 2, 1}, identity_perm(2));
    REQUIRE(t2.lift);
    CHECK(t2.lift->phi_A == Perm{0, 3, 2, 1});
    CHECK(t2.lift->phi_N == identity_perm(2));

    // A = Z2 x Z2, f(1,1) = (1,0); swapping the factors gives f' - f = (1,1),
    // not a coboundary
    FiniteGroup G = make_cyclic(2);
    auto S = std::make_shared<const GAction>(GAction::trivial(G, AbelianGroup(0, {2, 2})));
    auto inst3 = make_lifting_instance(G, {0, 1}, S, Table2{{0, 0}, {0, 1}});
    auto t3 = in_image_phi(inst3, {0, 2, 1, 3}, identity_perm(2));
    CHECK(t3.action_matches);
    CHECK_FALSE(t3.h);
    CHECK_FALSE(t3.lift);

    // N = Z2 x Z2 acting on Z3 through its second factor; swapping the
    // factors of N changes the action
    FiniteGroup G4 = make_product(make_cyclic(2), make_cyclic(2));
    AbelianGroup A3 = AbelianGroup::cyclic(3);
    auto S4 = action(G4, A3, {{{1}}, {{2}}, {{1}}, {{2}}});
    auto inst4 = make_lifting_instance(G4, {0, 1, 2, 3}, S4, Table2(4, std::vector<int>(4, 0)));
    auto t4 = in_image_phi(inst4, identity_perm(3), {0, 2, 1, 3});
    CHECK_FALSE(t4.action_matches);
    CHECK_FALSE(t4.lift);
}

TEST_CASE("in_image_phi lifts project correctly on twisted instances") {
    std::mt19937_64 rng(11);
    int lifted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = random_lifting_instance(rng, 16);
        const AbelianGroup& A = inst.A();
        auto autsA = module_automorphisms(A);
        auto autsN = automorphisms(inst.N.group);
        const IntMat& M = autsA[rng() % autsA.size()];
        Perm phiA(A.order());
        for (int a = 0; a < A.order(); ++a) {
            Vec v = A.element(a), w(A.dim(), 0);
            for (int i = 0; i < A.dim(); ++i)
                for (int j = 0; j < A.dim(); ++j) w[i] += M[i][j] * v[j];
            phiA[a] = int(A.index(A.reduce(w)));
        }
        const Perm& phiN = autsN[rng() % autsN.size()];
        auto t = in_image_phi(inst, phiA, phiN);
        if (!t.lift) continue;
        ++lifted;
        CHECK(t.lift->phi_A == phiA);
        CHECK(t.lift->phi_N == phiN);
    }
    CHECK(lifted > 0);
}

TEST_CASE("kernel of Phi equals image of Psi") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = random_lifting_instance(rng, 16);
        auto auts = fibered_automorphisms(inst.hat);
        Perm idA = identity_perm(inst.A().order()), idN = identity_perm(inst.N.group.order());
        std::set<Perm> kernel;
        for (const auto& a : auts)
            if (a.phi_A == idA && a.phi_N == idN) kernel.insert(a.perm);
        std::set<Perm> image;
        for (const auto& z : enumerate_z1(inst)) image.insert(psi_embed(inst, z).perm);
        CHECK(kernel == image);
    }
}

TEST_CASE("invariance witnesses") {
    auto inst = central_z2_z4();
    auto theta = invariance_witness(inst);
    REQUIRE(theta);
    for (const auto& t : *theta) CHECK(t.is_zero());

    // f = d_N h on N = Z3 in G = S3 acting on Z3 through the sign.
    FiniteGroup G = make_dihedral(3);
    AbelianGroup A = AbelianGroup::cyclic(3);
    std::vector<IntMat> mats;
    for (int g = 0; g < 6; ++g) mats.push_back({{g < 3 ? 1 : 2}});
    auto S = action(G, A, mats);
    Subgroup sub = make_subgroup(G, {0, 1, 2});
    auto SN = std::make_shared<const GAction>(S->restrict_to(sub));
    Cochain h(SN, 1);
    h.set({1}, {1});
    h.set({2}, {0});
    auto inst2 = make_lifting_instance(G, {0, 1, 2}, S, differential(h));
    Witness chosen;
    for (int g = 0; g < 6; ++g) chosen.push_back(act_on_cochain(inst2, g, h) - h);
    CHECK(is_witness(inst2, chosen));
    CHECK(invariance_witness(inst2));

    // G acts trivially on A and by inner automorphisms on N = G; g.f = f.
    FiniteGroup Q = make_quaternion();
    auto SQ = std::make_shared<const GAction>(GAction::trivial(Q, AbelianGroup::cyclic(2)));
    std::mt19937_64 rng(9);
    Cochain fq = random_cocycle(SQ, 2, rng);
    std::vector<int> all(8);
    for (int i = 0; i < 8; ++i) all[i] = i;
    auto inst3 = make_lifting_instance(Q, all, SQ, fq);
    Witness zeros(8, Cochain(inst3.SN, 1));
    bool fixed = true;
    for (int g = 0; g < 8; ++g) fixed = fixed && act_on_cochain(inst3, g, inst3.f) == inst3.f;
    CHECK(is_witness(inst3, zeros) == fixed);
}

TEST_CASE("defect identity and inverse formula") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = random_lifting_instance(rng, 16);
        auto theta = invariance_witness(inst);
        if (!theta) continue;
        // randomize theta by 1-cocycles on N
        auto z1 = enumerate_z1(inst);
        for (int g = 1; g < inst.G.order(); ++g) (*theta)[g] = (*theta)[g] + z1[rng() % z1.size()];
        auto L = lift_homomorphism(inst, *theta);
        bool zero = true;
        for (int g = 0; g < inst.G.order(); ++g) {
            CHECK(compose(L.psi[g].perm, lift_inverse(inst, *theta, g)) == identity_perm(inst.hat.E.order()));
            for (int k = 0; k < inst.G.order(); ++k) {
                Cochain kappa = witness_differential(inst, *theta, g, k);
                CHECK(L.defect[g][k] == kappa);
                CHECK(is_cocycle(kappa));
                zero = zero && kappa.is_zero();
            }
        }
        CHECK(L.homomorphism == zero);
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("obstruction: trivial and split cases") {
    auto inst = central_z2_z4();
    auto ob = lifting_obstruction(inst);
    CHECK(ob.invariant);
    CHECK(ob.class_zero);
    REQUIRE(ob.corrected);
    CHECK(lift_homomorphism(inst, *ob.corrected).homomorphism);
    CHECK(exhaustive_lift_search(inst));
}

TEST_CASE("nonzero obstruction class blocks every lift") {
    auto inst = nonzero_obstruction_instance();
    auto ob = lifting_obstruction(inst);
    CHECK(ob.invariant);
    CHECK_FALSE(ob.class_zero);
    CHECK(ob.h2_invariants == Vec{2, 2, 2});
    CHECK_FALSE(ob.corrected);
    CHECK_FALSE(exhaustive_lift_search(inst));
    // f is the nontrivial class on N
    CHECK_FALSE(cohomology(inst.SN, 2).class_zero(inst.f));
}

TEST_CASE("obstruction agrees with exhaustive search on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        auto inst = random_lifting_instance(rng, 16);
        auto ob = lifting_obstruction(inst);
        auto found = exhaustive_lift_search(inst);
        CHECK((ob.invariant && ob.class_zero) == found.has_value());
        if (ob.corrected) CHECK(lift_homomorphism(inst, *ob.corrected).homomorphism);
    }
}

TEST_CASE("input errors") {
    FiniteGroup G = make_dihedral(3);
    auto S = std::make_shared<const GAction>(GAction::trivial(G, AbelianGroup::cyclic(2)));
    CHECK_THROWS_AS(make_lifting_instance(G, {0, 3}, S, Table2{{0, 0}, {0, 0}}), InputError);
    FiniteGroup Z3 = make_cyclic(3);
    auto S3 = std::make_shared<const GAction>(GAction::trivial(Z3, AbelianGroup::cyclic(3)));
    CHECK_THROWS_AS(make_lifting_instance(Z3, {0, 1, 2}, S3, Table2{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}), InputError);
    auto inst = central_z2_z4();
    Witness bad(2, Cochain(inst.SN, 1));
    bad[1].set({1}, {1});
    CHECK_THROWS_AS(lift_homomorphism(inst, bad), InputError);
}
