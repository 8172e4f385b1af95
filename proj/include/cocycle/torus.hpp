#pragma once

// Exact cocycles on Z^n with values in circle-valued functions on R^n,
// restricted to affine phases x -> exp(2 pi i (a . x + b)).

#include <array>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "cocycle/group.hpp"
#include "cocycle/rational.hpp"

namespace cocycle {

int64_t binomial(int n, int k);

// Totally antisymmetric integer tensor, stored on p < q < r (0-based).
class AntisymTensor3 {
public:
    AntisymTensor3() = default;
    explicit AntisymTensor3(int n);

    // Throws InputError unless values (n^3, index p n^2 + q n + r) are
    // antisymmetric and vanish on repeated indices.
    static AntisymTensor3 from_dense(int n, const Vec& values);
    // Entries S_pqr = v for distinct p, q, r; the other orderings follow by
    // sign. Conflicting entries throw InputError.
    static AntisymTensor3 from_entries(int n, const std::vector<std::tuple<int, int, int, int64_t>>& entries);
    // Tensor with a single 1 at the idx-th increasing triple.
    static AntisymTensor3 basis(int n, int64_t idx);

    int n() const { return n_; }
    int64_t at(int p, int q, int r) const;
    const Vec& packed() const { return packed_; }
    Vec dense() const;

    AntisymTensor3 operator+(const AntisymTensor3& o) const;
    bool operator==(const AntisymTensor3& o) const { return n_ == o.n_ && packed_ == o.packed_; }

private:
    int n_ = 0;
    Vec packed_;    // lexicographic over p < q < r
};

// Lexicographic index of p < q < r among the C(n,3) increasing triples.
int64_t triple_index(int n, int p, int q, int r);
std::array<int, 3> triple_at(int n, int64_t idx);

// x -> exp(2 pi i (coeffs . x + constant)), constant taken mod 1.
struct AffinePhase {
    Vec coeffs;
    Rational constant{0};

    AffinePhase operator+(const AffinePhase& o) const;      // pointwise product of phases
    AffinePhase operator-() const;
    AffinePhase translate(const Vec& z) const;              // x -> phase(x + z)
    bool is_trivial() const { return is_zero(coeffs) && constant.denominator() == 1; }
    bool operator==(const AffinePhase& o) const;            // equal as functions
};

// coeffs_p = sum_{q,r} S_pqr u_q v_r.
AffinePhase cs_cocycle(const AntisymTensor3& S, const Vec& u, const Vec& v);

// Integer polynomial in variables numbered 0, 1, ...; monomials are sorted
// variable lists.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(int64_t c);
    static Polynomial variable(int v);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(int64_t c) const;

    bool is_zero() const { return terms_.empty(); }
    int64_t coefficient(std::vector<int> monomial) const;
    // Terms containing a variable accepted by pred.
    Polynomial terms_with(const std::function<bool(int)>& pred) const;
    const std::map<std::vector<int>, int64_t>& terms() const { return terms_; }

private:
    void add_term(const std::vector<int>& m, int64_t c);
    std::map<std::vector<int>, int64_t> terms_;
};

// Vector of n linear forms; symbolic_block(b, n) is the formal vector whose
// p-th entry is variable b n + p.
using SymVec = std::vector<Polynomial>;
SymVec symbolic_block(int block, int n);
SymVec operator+(const SymVec& a, const SymVec& b);

// Real lift of log c_S / 2 pi i: sum S_pqr x_p u_q v_r.
Polynomial cs_log(const AntisymTensor3& S, const SymVec& x, const SymVec& u, const SymVec& v);

// Base-pointed coboundary for Z^n acting by translation:
// (delta d)(x; g_1..g_k) = sum_{i=1}^{k-1} (-1)^i d(x; .., g_i + g_{i+1}, ..)
//                         + d(x + g_1; g_2..g_k) + (-1)^k d(x; g_1..g_{k-1}).
using SymCochain = std::function<Polynomial(const SymVec& x, const std::vector<SymVec>& args)>;
Polynomial basepointed_delta_symbolic(const SymCochain& d, int n, int k);

struct CocycleIdentityReport {
    bool ok = false;
    Polynomial x_terms;         // must vanish identically
    Polynomial remainder;       // integer polynomial in z, v, w
};

// c(x; z,v) c(x; z+v,w) = c(x; z,v+w) c(x+z; v,w) as an identity in formal
// x in R^n and z, v, w in Z^n.
CocycleIdentityReport verify_cocycle_identity(const AntisymTensor3& S);

// Integer-valued multilinear form on (Z^n)^k stored on basis tuples.
struct MultilinearForm {
    int n = 0;
    int k = 0;
    Vec values;                 // lexicographic over basis index tuples
    int64_t at(const std::vector<int>& idx) const;
    int64_t eval(const std::vector<Vec>& args) const;
};

struct DeltaLogResult {
    MultilinearForm c_prime;    // k = 3
    bool x_cancelled = false;
    bool cocycle = false;       // d c' = 0 over Z, checked symbolically
};

DeltaLogResult delta_log(const AntisymTensor3& S);

// S_pqr = c'(e_p, e_q, e_r) for p < q < r; throws InputError when c' is not
// antisymmetric on basis triples.
AntisymTensor3 tensor_from_form(const MultilinearForm& c);

struct RankCheck {
    int n = 0;
    int64_t rank = 0;           // rank of the tensor module, C(n,3)
    bool injective = false;     // S -> c' injective over Z
    bool recovers = false;      // c' recovers S on every basis tensor
    int64_t h1_rank = 0;        // C(n,2)
    bool h1_cocycles = false;   // every c_T passes the 1-cocycle identity
    bool h1_injective = false;
};

// Throws InputError when n < 3.
RankCheck rank_check(int n);

}  // namespace cocycle
