#pragma once

// Integer lattices inside Z^n where coordinate j may carry a modulus m_j.
// A lattice with modulus vector m always contains m_j * e_j, so every
// computation can reduce column j mod m_j (m_j == 0 means a free column).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cocycle {

using Vec = std::vector<int64_t>;

// Raised when exact integer arithmetic would leave int64 range or a size
// bound is exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}
    int64_t& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    int64_t operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
    Vec apply(const Vec& x) const;
};

int64_t mod_floor(int64_t x, int64_t m);
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t ext_gcd(int64_t a, int64_t b, int64_t& s, int64_t& t);
Vec reduce(Vec v, const Vec& mod);
bool is_zero(const Vec& v);

// Row-echelon basis. pivots[i] is the leading column of rows[i], strictly
// increasing; pivot entries are positive and divide the column modulus.
struct Echelon {
    std::vector<Vec> rows;
    std::vector<int> pivots;
    Vec mod;

    int ncols() const { return int(mod.size()); }
    // Reduce v against the basis; returns coefficients c with v - sum c_i rows_i
    // equal to the returned remainder.
    Vec reduce_vector(Vec v, Vec* coeffs = nullptr) const;
    bool contains(const Vec& v) const;
    // Exact integer coefficients of v in the row basis (no modular
    // reduction); the rows span the lattice including its relations.
    // Throws std::invalid_argument when v is not in the lattice.
    Vec coefficients(Vec v) const;
    // Coefficients up to the relation lattice: columns stay reduced by their
    // moduli and, when e > 0, coefficients are reduced mod e. Valid wherever
    // only the class modulo a sublattice containing the relations matters.
    Vec reduced_coefficients(Vec v, int64_t e) const;
};

Echelon echelon(std::vector<Vec> rows, const Vec& mod);

// Lattice {x : M x in target relations} in source coordinates.
Echelon kernel_lattice(const IntMatrix& M, const Vec& src_mod, const Vec& tgt_mod);

// Lattice spanned by the columns of M plus target relations.
Echelon image_lattice(const IntMatrix& M, const Vec& tgt_mod);

// Some x with M x == b modulo the target relations.
std::optional<Vec> solve(const IntMatrix& M, const Vec& b, const Vec& src_mod, const Vec& tgt_mod);

// Smith normal form of a small dense matrix. When e > 0 the row lattice is
// assumed to contain e*Z^k and entries are kept reduced mod e.
struct Smith {
    Vec diag;                   // length k (number of columns)
    std::vector<Vec> V;         // k x k column transform
    std::vector<Vec> Vinv;      // its inverse
};
Smith smith_normal_form(std::vector<Vec> rows, int k, int64_t e);

// Structure of L_big / L_small for L_small <= L_big <= Z^n, both containing
// the relation lattice given by mod.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const Echelon& big, const Echelon& small);

    // Orders of the cyclic factors in divisibility order; 0 marks a free factor.
    const Vec& invariants() const { return inv_; }
    const std::vector<Vec>& generators() const { return gens_; }
    int ngens() const { return int(inv_.size()); }
    bool trivial() const { return inv_.empty(); }
    // Coordinates of v (which must lie in L_big) in the generator basis.
    Vec coords(const Vec& v) const;
    Vec lift(const Vec& c) const;
    // Number of elements, or -1 when infinite.
    int64_t order() const;

private:
    Echelon big_;
    Vec inv_;
    std::vector<Vec> gens_;
    std::vector<Vec> V_;        // rows: basis coordinates -> smith coordinates
    std::vector<int> keep_;     // smith coordinates with invariant != 1
    int64_t e_ = 0;
};

}  // namespace cocycle
