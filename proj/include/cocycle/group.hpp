#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocycle/lattice.hpp"

namespace cocycle {

// Malformed user input (bad tables, non-subgroups, mismatched shapes).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite group as a multiplication table; element 0 is the identity.
class FiniteGroup {
public:
    FiniteGroup() = default;
    // Validates the table; throws InputError naming the first violation.
    explicit FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[size_t(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int pow(int a, int64_t k) const;
    int element_order(int a) const;
    bool is_abelian() const;
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<std::vector<int>> table() const;

    // Generating set chosen greedily by element index.
    std::vector<int> generators() const;
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && mul_ == o.mul_; }

private:
    int n_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
};

struct GroupViolation {
    std::string kind;           // "order", "range", "identity", "inverse", "associativity"
    std::vector<int> where;
    std::string message;
};

std::optional<GroupViolation> verify_group(const std::vector<std::vector<int>>& table);

FiniteGroup make_cyclic(int m);
FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup make_dihedral(int n);   // order 2n; element r^i s^j at index i + n*j
FiniteGroup make_quaternion();      // Q8
// S_n on permutations of {0..n-1} in lexicographic order, (ab)(i) = a(b(i)).
FiniteGroup make_symmetric(int n);
// 0 for even, 1 for odd, indexed like make_symmetric(n).
std::vector<int> permutation_parity(int n);

// Subgroup given by a sorted list of elements of an ambient group.
struct Subgroup {
    FiniteGroup group;
    std::vector<int> elements;      // subgroup index -> ambient index (elements[0] == 0)
    std::vector<int> index_of;      // ambient index -> subgroup index or -1
};

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& subset);
bool is_normal(const FiniteGroup& G, const std::vector<int>& subset);
Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> subset);
std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& G);

struct Quotient {
    FiniteGroup H;
    std::vector<int> proj;          // G -> H
    std::vector<int> section;       // H -> G, least index per coset
};

Quotient quotient(const FiniteGroup& G, const std::vector<int>& N);

// Automorphisms of G as permutations (identity first). Brute force over
// generator images; intended for |G| <= 16.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& G);

// Z^rank (+) Z_{m_1} (+) ... ; free coordinates come first.
struct AbelianGroup {
    int rank = 0;
    Vec torsion;

    AbelianGroup() = default;
    AbelianGroup(int r, Vec t);
    static AbelianGroup cyclic(int64_t m) {
        return m == 0 ? AbelianGroup(1, {}) : m == 1 ? AbelianGroup(0, {}) : AbelianGroup(0, {m});
    }
    // Invariant factors with 0 for free summands and 1 dropped.
    static AbelianGroup from_invariants(const Vec& inv);

    int dim() const { return rank + int(torsion.size()); }
    Vec moduli() const;
    bool finite() const { return rank == 0; }
    int64_t order() const;      // finite groups only
    int64_t exponent() const;   // lcm of torsion, finite groups only
    Vec zero() const { return Vec(dim(), 0); }
    Vec reduce(Vec a) const { return cocycle::reduce(std::move(a), moduli()); }
    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec neg(const Vec& a) const;
    Vec scale(int64_t k, const Vec& a) const;
    // Mixed-radix enumeration of a finite group.
    Vec element(int64_t idx) const;
    int64_t index(const Vec& a) const;

    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
};

using IntMat = std::vector<Vec>;    // square, row-major rows

// Invariant-factor structure of an abelian FiniteGroup.
struct AbelianStructure {
    AbelianGroup A;
    std::vector<Vec> coords;            // element index -> coordinates in A
    std::vector<int> element;           // A.index(coords) -> element index
    int element_of(const Vec& v) const { return element[size_t(A.index(A.reduce(v)))]; }
};

// Throws InputError when G is not abelian.
AbelianStructure abelian_structure(const FiniteGroup& G);

// Action S: G -> Aut(A) by integer matrices acting on coordinate columns.
class GAction {
public:
    GAction() = default;
    GAction(FiniteGroup G, AbelianGroup A, std::vector<IntMat> mats);
    static GAction trivial(FiniteGroup G, AbelianGroup A);

    const FiniteGroup& group() const { return G_; }
    const AbelianGroup& module() const { return A_; }
    const IntMat& matrix(int g) const { return mats_[g]; }
    const std::vector<IntMat>& matrices() const { return mats_; }
    Vec apply(int g, const Vec& a) const;
    bool is_trivial() const;
    // Homomorphism, identity and torsion-compatibility checks.
    std::optional<std::string> check() const;
    // Restrict to a subgroup.
    GAction restrict_to(const Subgroup& H) const;
    // Pull back along a homomorphism phi: K -> G.
    GAction pullback(const FiniteGroup& K, const std::vector<int>& phi) const;

private:
    FiniteGroup G_;
    AbelianGroup A_;
    std::vector<IntMat> mats_;
};

// Submodule of A fixed by every element of the given subset of G.
struct FixedSubmodule {
    Subquotient structure;          // coordinates relative to A's coordinates
    AbelianGroup group;
    Vec embed(const Vec& c) const { return structure.lift(c); }
    Vec coords(const Vec& a) const { return structure.coords(a); }
};

FixedSubmodule fixed_submodule(const GAction& S, const std::vector<int>& subset);

// Action of G on the fixed submodule A^N for N normal in G.
GAction fixed_action(const GAction& S, const FixedSubmodule& F);

// Endomorphism matrix of A given images of the standard generators; checked
// for torsion compatibility.
bool respects_torsion(const AbelianGroup& A, const IntMat& M);

// All automorphisms of a finite A as matrices (identity first).
std::vector<IntMat> module_automorphisms(const AbelianGroup& A);

// Every homomorphism G -> Aut(A) for finite A, by generator images.
std::vector<GAction> enumerate_actions(const FiniteGroup& G, const AbelianGroup& A);

IntMat identity_matrix(int d);
IntMat matmul(const IntMat& a, const IntMat& b, const Vec& mod);

}  // namespace cocycle
