#pragma once

#include <optional>
#include <random>
#include <string>

#include "cocycle/crossed_module.hpp"

namespace cocycle {

// tau([f]) = characteristic class of the crossed module Ahat -> Gamma, a class
// in H^3(Gamma / alpha(Ahat), A^N) with Gamma / alpha(Ahat) = G/N.
struct TransgressionResult {
    std::string status;             // "ok", "H1 nonzero", "not invariant"
    bool h1_zero = false;
    bool invariant = false;
    std::optional<CharacteristicClass> tau;
    bool tau_zero = false;
    int quotient_order = 0;         // |Gamma / alpha(Ahat)|
};

TransgressionResult transgress(const LiftingInstance& inst);

// F in Z^2(G, A) with F(n, n') = f(n, n') on N; the extension A x_(S,F) G is
// built and Ahat checked to embed as (a, n) -> (a, n).
std::optional<Cochain> prolongation_search(const LiftingInstance& inst);

// Existence of F whose restriction is cohomologous to f on N.
bool prolongation_exists_up_to_coboundary(const LiftingInstance& inst);

// Prolongations F up to F' - F = dc with c vanishing on N; -1 when none exist.
int64_t count_prolongations(const LiftingInstance& inst);

// Action of H = G/N on A^N through the least coset representatives.
std::shared_ptr<const GAction> quotient_action_on_invariants(const LiftingInstance& inst);

// Random instance with |G| <= 8, |A| <= 9, H^1(N, A) = 0 and f invariant.
LiftingInstance random_transgression_instance(std::mt19937_64& rng);

// G = S4, N = A4 and f the nonzero class of H^2(A4, A) = Z2, with A = Z2
// (variant 0), Z4 (1) or Z4 under the sign of the permutation (2).
LiftingInstance alternating_in_symmetric_instance(int variant);

}  // namespace cocycle
