#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocycle/group.hpp"

namespace cocycle {

// Number of normalized p-tuples, (|G|-1)^p.
int64_t normalized_count(int order, int p);

// Lexicographic index of a tuple of non-identity elements, or -1 when some
// entry is the identity.
int64_t tuple_index(const std::vector<int>& args, int order);
std::vector<int> tuple_at(int64_t idx, int order, int p);

// Normalized p-cochain G^p -> A, stored as one A-element per tuple of
// non-identity elements.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::shared_ptr<const GAction> S, int p);

    int degree() const { return p_; }
    const GAction& action() const { return *S_; }
    std::shared_ptr<const GAction> action_ptr() const { return S_; }
    const FiniteGroup& group() const { return S_->group(); }
    const AbelianGroup& module() const { return S_->module(); }
    int64_t size() const { return count_; }

    Vec at(const std::vector<int>& args) const;
    Vec at_index(int64_t idx) const;
    void set(const std::vector<int>& args, const Vec& v);
    void set_index(int64_t idx, const Vec& v);

    // Coordinates as one vector of length size() * dim.
    const Vec& flat() const { return flat_; }
    static Cochain from_flat(std::shared_ptr<const GAction> S, int p, Vec flat);

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    bool is_zero() const { return cocycle::is_zero(flat_); }
    bool operator==(const Cochain& o) const { return p_ == o.p_ && flat_ == o.flat_; }

private:
    std::shared_ptr<const GAction> S_;
    int p_ = 0;
    int64_t count_ = 0;
    Vec flat_;
};

// Coordinate moduli of C^p: A's moduli repeated per tuple.
Vec cochain_moduli(const GAction& S, int p);

// Matrix of d: C^p -> C^{p+1} (rows: target coordinates).
IntMatrix differential_matrix(const GAction& S, int p);

// (df)(g1..g_{p+1}) = g1.f(g2..) + sum_i (-1)^i f(..g_i g_{i+1}..) + (-1)^{p+1} f(g1..gp)
Cochain differential(const Cochain& f);
bool is_cocycle(const Cochain& f);

struct CoboundaryCheck {
    bool cocycle = false;
    std::optional<Cochain> witness;     // h with dh = f
};
CoboundaryCheck is_coboundary(const Cochain& f);

struct CohomologyResult {
    int degree = 0;
    Vec invariant_factors;              // 0 marks a free factor
    std::vector<Cochain> generators;    // empty when produced by the oracle
    Subquotient structure;              // absent for oracle results
    std::shared_ptr<const GAction> action;

    int64_t order() const;              // -1 when infinite
    bool trivial() const { return invariant_factors.empty(); }
    // Coordinates of the class of a cocycle in the generator basis.
    Vec class_of(const Cochain& z) const;
    bool class_zero(const Cochain& z) const { return cocycle::is_zero(class_of(z)); }
    Cochain representative(const Vec& coords) const;
};

inline constexpr int kDefaultMaxDegree = 4;

CohomologyResult cohomology(std::shared_ptr<const GAction> S, int p, int max_degree = kDefaultMaxDegree);

// Independent check by enumeration. Cocycles are found by backtracking over
// the normalized tuples; coboundaries are the image of every (p-1)-cochain.
inline constexpr int64_t kDefaultEnumerationBound = int64_t(1) << 22;
CohomologyResult brute_force_oracle(std::shared_ptr<const GAction> S, int p,
                                    int64_t bound = kDefaultEnumerationBound);

// Invariant factors of a finite abelian group from the number of elements
// killed by q^j for each prime q dividing its order.
Vec invariants_from_torsion_counts(int64_t order, const std::function<int64_t(int64_t)>& killed_by);

// Cochains c(g; g1..gn) with the base point first; no normalization.
struct BasepointedCochain {
    FiniteGroup group;
    AbelianGroup module;
    int degree = 0;
    std::vector<Vec> table;             // index: lexicographic over G^{n+1}

    BasepointedCochain() = default;
    BasepointedCochain(FiniteGroup G, AbelianGroup A, int n);
    int64_t index(int g, const std::vector<int>& args) const;
    const Vec& at(int g, const std::vector<int>& args) const { return table[index(g, args)]; }
    Vec& at(int g, const std::vector<int>& args) { return table[index(g, args)]; }
    bool is_zero() const;
    bool operator==(const BasepointedCochain& o) const { return degree == o.degree && table == o.table; }
};

BasepointedCochain basepointed_delta(const BasepointedCochain& d);

// d(g; g1..g_{n-1}) = c(1; g, g1..g_{n-1}); throws InputError unless delta c = 0.
BasepointedCochain triviality_witness(const BasepointedCochain& c);

}  // namespace cocycle
