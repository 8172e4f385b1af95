#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cocycle/cochain.hpp"

namespace cocycle {

using Perm = std::vector<int>;
using Table2 = std::vector<std::vector<int>>;   // G x G -> element index

// Data (S, omega) for N x_(S,omega) G. N may be nonabelian.
struct FactorSystem {
    FiniteGroup G;
    FiniteGroup N;
    std::vector<Perm> S;        // S[g]: automorphism of N as a permutation
    Table2 omega;               // omega[g][g'] in N, normalized
};

struct FactorSystemViolation {
    std::string which;          // "automorphism", "normalized", "delta_S", "d_S omega"
    std::vector<int> where;
    std::string message;
};

std::optional<FactorSystemViolation> check_factor_system(const FactorSystem& fs);

// (n,g)(n',g') = (n S(g)(n') omega(g,g'), g g'), element (n,g) at n + |N| g.
// No validation; used to test the factor-system criterion against the axioms.
Table2 extension_table(const FactorSystem& fs);

struct ExtensionGroup {
    FactorSystem fs;
    FiniteGroup E;

    int index(int n, int g) const { return n + fs.N.order() * g; }
    int fiber(int e) const { return e % fs.N.order(); }
    int base(int e) const { return e / fs.N.order(); }
    int section(int g) const { return index(0, g); }
};

// Throws InputError naming the violated identity and tuple.
ExtensionGroup build_extension(const FactorSystem& fs);

// delta_sigma(g,g') = sigma(g) sigma(g') sigma(gg')^-1 as fiber elements.
Table2 section_cocycle(const ExtensionGroup& E, const std::vector<int>& sigma);

// Finite abelian A as a FiniteGroup with element i = A.element(i).
FiniteGroup group_of(const AbelianGroup& A);
std::vector<Perm> perms_of(const GAction& S);
GAction action_of(const FiniteGroup& G, const AbelianGroup& A, const std::vector<Perm>& perms);

// Abelian fibers: convert between fiber tables and degree-2 cochains.
Cochain cochain_of(std::shared_ptr<const GAction> S, const Table2& omega);
Table2 table_of(const Cochain& f);
FactorSystem abelian_factor_system(const GAction& S, const Cochain& f);

// Witness c with omega_2 - omega_1 = d c, or none when the extensions are
// inequivalent. Both must share G, an abelian fiber and the induced action.
std::optional<Cochain> equivalence_test(const ExtensionGroup& E1, const ExtensionGroup& E2);

// Random data used by property checks.
struct FactorSystemSample {
    FactorSystem fs;
    bool valid = true;
};

// A valid factor system drawn either from a section of a known group
// extension (nonabelian fibers allowed) or from an abelian cocycle.
FactorSystem random_valid_factor_system(std::mt19937_64& rng, int max_order = 6);
// With probability one half, corrupt one omega entry or one S(g).
FactorSystemSample random_factor_system(std::mt19937_64& rng, int max_order = 6);

// Homomorphism G -> Aut(A) picked at random by generator images.
std::optional<GAction> random_action(const FiniteGroup& G, const AbelianGroup& A, std::mt19937_64& rng,
                                     int attempts = 64);

}  // namespace cocycle
