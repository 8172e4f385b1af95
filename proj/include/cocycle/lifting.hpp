#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocycle/extension.hpp"

namespace cocycle {

// G with a normal subgroup N, a G-module A and a 2-cocycle f on N with the
// restricted action. The extension A x_(S,f) N stores (a,n) at a + |A| n.
struct LiftingInstance {
    FiniteGroup G;
    Subgroup N;
    std::shared_ptr<const GAction> S;       // G on A
    std::shared_ptr<const GAction> SN;      // N on A
    Cochain f;                              // degree 2 over N
    ExtensionGroup hat;                     // A x_(S,f) N

    const AbelianGroup& A() const { return S->module(); }
    // c_g(n) = g n g^-1 as a permutation of N's indices.
    int conj(int g, int n) const { return N.index_of[G.conj(g, N.elements[n])]; }
};

// Throws InputError if N is not normal, the action is invalid, A is infinite
// or f is not a cocycle.
LiftingInstance make_lifting_instance(const FiniteGroup& G, const std::vector<int>& N,
                                      std::shared_ptr<const GAction> S, const Table2& f_values);
LiftingInstance make_lifting_instance(const FiniteGroup& G, const std::vector<int>& N,
                                      std::shared_ptr<const GAction> S, const Cochain& f);

// Automorphism of the extension preserving A, with its projections.
struct FiberedAutomorphism {
    Perm perm;
    Perm phi_A;         // on A's element indices
    Perm phi_N;         // on N's element indices
};

// Validates perm as an automorphism of hat preserving A.
std::optional<FiberedAutomorphism> fibered(const ExtensionGroup& hat, const Perm& perm);

Perm compose(const Perm& a, const Perm& b);     // a after b
Perm inverse(const Perm& p);

// (a,n) -> (a + f1(n), n); throws InputError unless f1 is a 1-cocycle.
FiberedAutomorphism psi_embed(const LiftingInstance& inst, const Cochain& f1);

struct PairAction {
    std::shared_ptr<const GAction> S;       // c_phiA o S o phiN^-1
    Cochain f;                              // phiA o f o (phiN^-1 x phiN^-1)
};

// phi_A and phi_N are permutations of A's and N's element indices.
PairAction pair_action(const GAction& SN, const Cochain& f, const Perm& phi_A, const Perm& phi_N);

struct ImageTest {
    bool action_matches = false;            // S' == S
    std::optional<Cochain> h;               // f' - f = d_N h
    std::optional<FiberedAutomorphism> lift;
};

ImageTest in_image_phi(const LiftingInstance& inst, const Perm& phi_A, const Perm& phi_N);

// g.f(n,n') = S(g) f(g^-1 n g, g^-1 n' g) and g.h(n) = S(g) h(g^-1 n g).
Cochain act_on_cochain(const LiftingInstance& inst, int g, const Cochain& c);

// theta(g) in C^1(N,A) with d_N theta(g) = g.f - f, theta(1) = 0.
using Witness = std::vector<Cochain>;
std::optional<Witness> invariance_witness(const LiftingInstance& inst);
bool is_witness(const LiftingInstance& inst, const Witness& theta);

// Z^1(N,A) as a G-module under g.h.
struct Z1Module {
    Subquotient structure;
    std::shared_ptr<const GAction> action;  // G on Z^1 coordinates
    const AbelianGroup& group() const { return action->module(); }
    Cochain embed(const LiftingInstance& inst, const Vec& coords) const;
    Vec coords(const Cochain& h) const { return structure.coords(h.flat()); }
};
Z1Module z1_module(const LiftingInstance& inst);

struct LiftedHomomorphism {
    std::vector<FiberedAutomorphism> psi;   // psi(g)(a,n) = (S(g)a + theta(g)(c_g n), c_g n)
    std::vector<std::vector<Cochain>> defect;   // kappa(g,g') with psi(g)psi(g')psi(gg')^-1 = Psi(kappa)
    bool homomorphism = false;
};

// Throws InputError unless theta is an invariance witness.
LiftedHomomorphism lift_homomorphism(const LiftingInstance& inst, const Witness& theta);

// (d theta)(g,g') = g.theta(g') - theta(gg') + theta(g) in C^1(N,A).
Cochain witness_differential(const LiftingInstance& inst, const Witness& theta, int g, int h);

// psi(g)^-1(a,n) = (S(g)^-1 (a - theta(g)(n)), c_g^-1 n)
Perm lift_inverse(const LiftingInstance& inst, const Witness& theta, int g);

struct Obstruction {
    bool invariant = false;
    bool class_zero = false;
    Vec class_coords;                       // class of d theta in H^2(G, Z^1)
    Vec h2_invariants;
    std::optional<Witness> theta;           // witness used
    std::optional<Witness> corrected;       // witness with vanishing defect when the class is zero
};

Obstruction lifting_obstruction(const LiftingInstance& inst);

// All automorphisms of hat preserving A (enumeration; |hat| <= 16 by default).
std::vector<FiberedAutomorphism> fibered_automorphisms(const ExtensionGroup& hat, int max_order = 16);

// Search over homomorphisms G -> Aut(hat, A) projecting to g -> (S(g), c_g).
std::optional<std::vector<Perm>> exhaustive_lift_search(const LiftingInstance& inst, int max_order = 16);

// Random instance with |G| <= 4 and |A| |N| <= max_hat: G from Z2, Z3, Z4,
// Z2 x Z2; A from Z2, Z3, Z4, Z2 x Z2; random action and random cocycle.
LiftingInstance random_lifting_instance(std::mt19937_64& rng, int max_hat = 16);

// Random 2-cocycle: a random coboundary plus random multiples of the
// cohomology generators.
Cochain random_cocycle(std::shared_ptr<const GAction> S, int p, std::mt19937_64& rng);

// G = Z2 x Z2, N = {0, 1} (second factor), A = Z8 on which the first factor
// acts by 3 and N trivially, f(1,1) = 1. The obstruction class is nonzero.
LiftingInstance nonzero_obstruction_instance();

// Every (G, N, A, action, class of f) with G in {Z2, Z3, Z4, Z2 x Z2}, N
// normal, A finite from a fixed pool with |N| |A| <= max_hat, one cocycle per
// class of H^2(N, A).
std::vector<LiftingInstance> small_lifting_instances(int max_hat = 16);

// Every 1-cocycle N -> A by enumeration.
std::vector<Cochain> enumerate_z1(const LiftingInstance& inst);

}  // namespace cocycle
