#pragma once

#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "cocycle/lifting.hpp"

namespace cocycle {

// alpha: Nhat -> G with an action Shat of G on Nhat.
struct CrossedModule {
    FiniteGroup Nhat;
    FiniteGroup G;
    std::vector<int> alpha;         // Nhat index -> G index
    std::vector<Perm> Shat;         // G index -> automorphism of Nhat
};

struct CrossedModuleViolation {
    std::string which;              // "shape", "alpha homomorphism", "Shat automorphism", "Shat homomorphism", "CM1", "CM2"
    std::vector<int> where;
    std::string message;
};

std::optional<CrossedModuleViolation> check_crossed_module(const CrossedModule& cm);

// Validated crossed module with N = im alpha, Z = ker alpha, H = G/N and the
// induced action T of H on Z.
struct CrossedModuleData {
    CrossedModule cm;
    std::vector<int> N;
    Subgroup Z;
    Quotient H;
    AbelianStructure Zab;
    std::shared_ptr<const GAction> T;

    int nhat_of(const Vec& z) const { return Z.elements[Zab.element_of(z)]; }
    const Vec& z_of(int nhat) const { return Zab.coords[Z.index_of[nhat]]; }
    const AbelianGroup& coefficients() const { return Zab.A; }
};

// Throws InputError naming the violated axiom and tuple.
CrossedModuleData validate(const CrossedModule& cm);

// N normal in G, alpha the inclusion, Shat conjugation.
CrossedModule conjugation_crossed_module(const FiniteGroup& G, const std::vector<int>& N);
// K normal in G and C <= Z(K) normal in G: alpha: K -> G/C, Shat(gC) =
// conjugation by g.
CrossedModule quotient_crossed_module(const FiniteGroup& G, const std::vector<int>& K, const std::vector<int>& C);
// Z4 -> Z4, x -> 2x, with Shat trivial, or Shat(g) = (-1)^g when twisted.
CrossedModule doubling_crossed_module(bool twisted = false);

// Section psi: H -> G and lifts chat(x,y) in alpha^-1(psi(x) psi(y) psi(xy)^-1).
struct SectionChoice {
    std::vector<int> section;
    Table2 lifts;
};

SectionChoice canonical_choice(const CrossedModuleData& d);     // least indices
SectionChoice random_choice(const CrossedModuleData& d, std::mt19937_64& rng);

// Omega from Shat(psi(x))(chat(y,z)) chat(x,yz) = chat(x,y) chat(xy,z) Omega(x,y,z).
struct CharacteristicClass {
    Cochain omega;                  // degree 3 on H with values in Z under T
    Vec class_coords;
    Vec h3_invariants;
    bool class_zero = false;
    SectionChoice choice;
};

CharacteristicClass characteristic_class(const CrossedModuleData& d);
CharacteristicClass characteristic_class(const CrossedModuleData& d, const SectionChoice& choice);

// (f, sigma) with f: H x H -> Nhat and sigma: H -> G normalized, alpha f =
// delta_sigma and d_(Shat sigma) f = 1.
struct StructuralCocycle {
    Table2 f;
    std::vector<int> sigma;
    bool operator==(const StructuralCocycle& o) const { return f == o.f && sigma == o.sigma; }
    bool operator<(const StructuralCocycle& o) const { return std::tie(sigma, f) < std::tie(o.sigma, o.f); }
};

std::optional<std::string> check_structural(const CrossedModuleData& d, const StructuralCocycle& s);

// c.(f, sigma) = (c *_(Shat sigma) f, (alpha c) sigma) for normalized c: H -> Nhat.
StructuralCocycle act_on_structural(const CrossedModuleData& d, const std::vector<int>& c, const StructuralCocycle& s);

struct StructuralOrbits {
    std::vector<StructuralCocycle> representatives;     // least member of each orbit
    std::vector<int64_t> orbit_sizes;
    int64_t total = 0;                                  // number of structural cocycles
};

inline constexpr int64_t kDefaultStructuralBound = int64_t(1) << 20;

// Enumerates every structural cocycle and splits them into C^1(H, Nhat)
// orbits. Throws ResourceError when the search space exceeds the bound.
StructuralOrbits structural_cocycles(const CrossedModuleData& d, int64_t bound = kDefaultStructuralBound);

// c with c.a = b, by enumeration of C^1(H, Nhat).
std::optional<std::vector<int>> structural_equivalence(const CrossedModuleData& d, const StructuralCocycle& a,
                                                       const StructuralCocycle& b,
                                                       int64_t bound = kDefaultStructuralBound);

struct CrossedExtension {
    ExtensionGroup ext;             // Nhat x_(f, sigma) H
    std::vector<int> alpha_hat;     // (n, x) -> alpha(n) sigma(x)
};

// Throws InputError when s is not a structural cocycle.
CrossedExtension extension_from_structural(const CrossedModuleData& d, const StructuralCocycle& s);

// (f, sigma) -> (f beta, sigma); throws InputError unless beta is a 2-cocycle
// on H with values in Z under T.
StructuralCocycle h2_action(const CrossedModuleData& d, const Cochain& beta, const StructuralCocycle& s);

// Circle-valued lift data: X acts trivially on phases in Z_m, the labels c
// count powers of one central loop.
struct LiftData {
    FiniteGroup X;
    int64_t m = 1;                                          // phases in (1/m)Z/Z
    Table2 c;                                               // integer labels
    std::vector<std::vector<int64_t>> chat_phase;           // X x X
    std::vector<std::vector<std::vector<int64_t>>> act_phase;   // [x][y][z]
};

struct LiftObstruction {
    Cochain omega;                  // values in Z_m
    bool cocycle = false;
    bool trivial = false;
    std::optional<Cochain> witness; // theta with d theta = omega
    Vec class_coords;
    Vec h3_invariants;
};

// Omega = act_phase + d chat_phase. Throws InputError when c fails
// c(x,y) + c(xy,z) = c(y,z) + c(x,yz) or the tables are not normalized.
LiftObstruction obstruction_from_liftdata(const LiftData& ld);

// Carry cocycle on Z_p: 1 when x + y >= p.
int carry(int p, int x, int y);

// X = Z_p, chat = 0, act_phase(x,(y,z)) = x * phase * carry(y,z) with
// phase = num/den, in the truncation Z_m, m = lcm(p, den).
LiftData cyclic_liftdata(int p, int64_t num, int64_t den);

// Gamma = psi^*(Aut(Ahat, A)) realized as pairs (Psi(z) psihat_theta(g), g)
// with z in Z^1(N, A), element z + |Z^1| g. alpha(a,n) = (conjugation by
// (a,n), n) and Shat(phi, g) = phi.
struct GammaConstruction {
    FiniteGroup Gamma;
    std::vector<Perm> perms;        // element -> automorphism of Ahat
    std::vector<int> base;          // element -> g
    CrossedModule cm;               // Ahat -> Gamma
    bool h1_zero = false;
};

GammaConstruction gamma_construction(const LiftingInstance& inst, const Witness& theta);

}  // namespace cocycle
