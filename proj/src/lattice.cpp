#include "cocycle/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace cocycle {

int64_t mod_floor(int64_t x, int64_t m) {
    int64_t r = x % m;
    return r < 0 ? r + m : r;
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in lattice arithmetic");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in lattice arithmetic");
    return r;
}

int64_t ext_gcd(int64_t a, int64_t b, int64_t& s, int64_t& t) {
    // prefer the trivial combination so eliminations leave the pivot alone
    if (a != 0 && b % a == 0) {
        s = a < 0 ? -1 : 1;
        t = 0;
        return a < 0 ? -a : a;
    }
    int64_t old_r = a, r = b, old_s = 1, cs = 0, old_t = 0, ct = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * cs; old_s = cs; cs = tmp;
        tmp = old_t - q * ct; old_t = ct; ct = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    s = old_s;
    t = old_t;
    return old_r;
}

Vec reduce(Vec v, const Vec& mod) {
    for (size_t j = 0; j < v.size(); ++j)
        if (mod[j] > 0) v[j] = mod_floor(v[j], mod[j]);
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

Vec IntMatrix::apply(const Vec& x) const {
    Vec y(rows, 0);
    for (int i = 0; i < rows; ++i) {
        int64_t s = 0;
        for (int j = 0; j < cols; ++j) {
            int64_t v = (*this)(i, j);
            if (v != 0 && x[j] != 0) s = checked_add(s, checked_mul(v, x[j]));
        }
        y[i] = s;
    }
    return y;
}

namespace {

// s*x + t*y entrywise from column `from` on, reduced by the column moduli.
Vec lincomb(const Vec& x, int64_t s, const Vec& y, int64_t t, const Vec& mod, int from) {
    Vec r(x.size(), 0);
    for (size_t j = from; j < x.size(); ++j) {
        if (mod[j] > 0) {
            __int128 v = (__int128)s * x[j] + (__int128)t * y[j];
            v %= mod[j];
            if (v < 0) v += mod[j];
            r[j] = int64_t(v);
        } else {
            r[j] = checked_add(checked_mul(s, x[j]), checked_mul(t, y[j]));
        }
    }
    return r;
}

// Replace (p, r) by a unimodular combination that leaves gcd in p[c] and 0 in r[c].
void combine(Vec& p, Vec& r, int c, const Vec& mod) {
    int64_t a = p[c], b = r[c], s, t;
    int64_t g = ext_gcd(a, b, s, t);
    Vec np = lincomb(p, s, r, t, mod, c);
    Vec nr = lincomb(r, a / g, p, -(b / g), mod, c);
    np[c] = g;
    nr[c] = 0;
    p = std::move(np);
    r = std::move(nr);
}

}  // namespace

Echelon echelon(std::vector<Vec> rows, const Vec& mod) {
    const int n = int(mod.size());
    Echelon out;
    out.mod = mod;
    std::vector<Vec> remaining;
    remaining.reserve(rows.size());
    for (auto& r : rows) {
        r = reduce(std::move(r), mod);
        if (!is_zero(r)) remaining.push_back(std::move(r));
    }
    for (int c = 0; c < n; ++c) {
        std::optional<Vec> pivot;
        std::vector<Vec> next;
        next.reserve(remaining.size());
        for (auto& r : remaining) {
            if (r[c] == 0) { next.push_back(std::move(r)); continue; }
            if (!pivot) { pivot = std::move(r); continue; }
            combine(*pivot, r, c, mod);
            if (!is_zero(r)) next.push_back(std::move(r));
        }
        if (mod[c] > 0) {
            Vec rel(n, 0);
            rel[c] = mod[c];
            if (!pivot) {
                pivot = std::move(rel);
            } else {
                // rel lives outside the reduced range, so combine by hand.
                int64_t a = (*pivot)[c], m = mod[c], s, t;
                int64_t g = ext_gcd(a, m, s, t);
                Vec residual = lincomb(*pivot, m / g, rel, 0, mod, c + 1);
                Vec np = lincomb(*pivot, s, rel, 0, mod, c + 1);
                np[c] = g;
                residual[c] = 0;
                pivot = std::move(np);
                if (!is_zero(residual)) next.push_back(std::move(residual));
            }
        }
        if (pivot) {
            if ((*pivot)[c] < 0)
                for (int j = c; j < n; ++j) (*pivot)[j] = mod[j] > 0 ? mod_floor(-(*pivot)[j], mod[j]) : -(*pivot)[j];
            out.rows.push_back(std::move(*pivot));
            out.pivots.push_back(c);
        }
        remaining = std::move(next);
    }
    return out;
}

Vec Echelon::reduce_vector(Vec v, Vec* coeffs) const {
    v = reduce(std::move(v), mod);
    if (coeffs) coeffs->assign(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        int c = pivots[i];
        int64_t x = v[c];
        if (x == 0) continue;
        int64_t p = rows[i][c];
        int64_t q = x / p;
        if (mod[c] == 0 && x % p != 0 && (x < 0)) q -= 1;  // floor for free columns
        if (q == 0) continue;
        v = lincomb(v, 1, rows[i], -q, mod, 0);
        if (coeffs) (*coeffs)[i] = q;
    }
    return v;
}

bool Echelon::contains(const Vec& v) const { return is_zero(reduce_vector(v)); }

Vec Echelon::coefficients(Vec v) const {
    Vec c(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        int col = pivots[i];
        int64_t x = v[col];
        if (x == 0) continue;
        int64_t p = rows[i][col];
        if (x % p != 0) throw std::invalid_argument("vector outside the lattice");
        int64_t q = x / p;
        for (int j = col; j < ncols(); ++j)
            if (rows[i][j] != 0) v[j] = checked_add(v[j], checked_mul(-q, rows[i][j]));
        c[i] = q;
    }
    if (!is_zero(v)) throw std::invalid_argument("vector outside the lattice");
    return c;
}

Vec Echelon::reduced_coefficients(Vec v, int64_t e) const {
    v = reduce(std::move(v), mod);
    Vec c(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        int col = pivots[i];
        int64_t x = v[col];
        if (x == 0) continue;
        int64_t p = rows[i][col];
        if (x % p != 0) throw std::invalid_argument("vector outside the lattice");
        int64_t q = x / p;
        v = lincomb(v, 1, rows[i], -q, mod, col);
        c[i] = e > 0 ? mod_floor(q, e) : q;
    }
    if (!is_zero(v)) throw std::invalid_argument("vector outside the lattice");
    return c;
}

namespace {

std::vector<Vec> pair_rows(const IntMatrix& M) {
    const int nt = M.rows, ns = M.cols;
    std::vector<Vec> rows;
    rows.reserve(ns);
    for (int j = 0; j < ns; ++j) {
        Vec r(nt + ns, 0);
        for (int i = 0; i < nt; ++i) r[i] = M(i, j);
        r[nt + j] = 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

}  // namespace

Echelon kernel_lattice(const IntMatrix& M, const Vec& src_mod, const Vec& tgt_mod) {
    const int nt = M.rows;
    Echelon full = echelon(pair_rows(M), concat(tgt_mod, src_mod));
    Echelon k;
    k.mod = src_mod;
    for (size_t i = 0; i < full.rows.size(); ++i) {
        if (full.pivots[i] < nt) continue;
        k.rows.emplace_back(full.rows[i].begin() + nt, full.rows[i].end());
        k.pivots.push_back(full.pivots[i] - nt);
    }
    return k;
}

Echelon image_lattice(const IntMatrix& M, const Vec& tgt_mod) {
    std::vector<Vec> rows;
    rows.reserve(M.cols);
    for (int j = 0; j < M.cols; ++j) {
        Vec r(M.rows);
        for (int i = 0; i < M.rows; ++i) r[i] = M(i, j);
        rows.push_back(std::move(r));
    }
    return echelon(std::move(rows), tgt_mod);
}

std::optional<Vec> solve(const IntMatrix& M, const Vec& b, const Vec& src_mod, const Vec& tgt_mod) {
    const int nt = M.rows, ns = M.cols;
    Vec mod = concat(tgt_mod, src_mod);
    Echelon full = echelon(pair_rows(M), mod);
    Vec r = reduce(concat(b, Vec(ns, 0)), mod);
    for (size_t i = 0; i < full.rows.size() && full.pivots[i] < nt; ++i) {
        int c = full.pivots[i];
        int64_t x = r[c];
        if (x == 0) continue;
        int64_t p = full.rows[i][c];
        if (x % p != 0) return std::nullopt;
        r = lincomb(r, 1, full.rows[i], -(x / p), mod, 0);
    }
    for (int i = 0; i < nt; ++i)
        if (r[i] != 0) return std::nullopt;
    Vec x(ns);
    for (int j = 0; j < ns; ++j) x[j] = -r[nt + j];
    return reduce(std::move(x), src_mod);
}

namespace {

int64_t red(int64_t v, int64_t e) { return e > 0 ? mod_floor(v, e) : v; }

int64_t abs_rep(int64_t v, int64_t e) {
    if (e > 0) {
        v = mod_floor(v, e);
        return std::min(v, e - v);
    }
    return v < 0 ? -v : v;
}

}  // namespace

Smith smith_normal_form(std::vector<Vec> A, int k, int64_t e) {
    const int r = int(A.size());
    Smith out;
    out.V.assign(k, Vec(k, 0));
    out.Vinv.assign(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) out.V[i][i] = out.Vinv[i][i] = 1;
    for (auto& row : A)
        for (auto& x : row) x = red(x, e);

    auto row_combine = [&](int p, int q, int col) {
        int64_t a = A[p][col], b = A[q][col], s, t;
        int64_t g = ext_gcd(a, b, s, t);
        for (int j = 0; j < k; ++j) {
            int64_t x = A[p][j], y = A[q][j];
            A[p][j] = red(checked_add(checked_mul(s, x), checked_mul(t, y)), e);
            A[q][j] = red(checked_add(checked_mul(a / g, y), checked_mul(-(b / g), x)), e);
        }
    };
    // Column op on (p, q): new_p = s*p + t*q, new_q = -(b/g)*p + (a/g)*q.
    auto col_combine = [&](int p, int q, int rowi) {
        int64_t a = A[rowi][p], b = A[rowi][q], s, t;
        int64_t g = ext_gcd(a, b, s, t);
        int64_t u = a / g, w = b / g;
        for (int i = 0; i < r; ++i) {
            int64_t x = A[i][p], y = A[i][q];
            A[i][p] = red(checked_add(checked_mul(s, x), checked_mul(t, y)), e);
            A[i][q] = red(checked_add(checked_mul(-w, x), checked_mul(u, y)), e);
        }
        for (int i = 0; i < k; ++i) {
            int64_t x = out.V[i][p], y = out.V[i][q];
            out.V[i][p] = red(checked_add(checked_mul(s, x), checked_mul(t, y)), e);
            out.V[i][q] = red(checked_add(checked_mul(-w, x), checked_mul(u, y)), e);
        }
        // inverse: rows p,q of Vinv transform by [[u, w], [-t, s]]
        for (int j = 0; j < k; ++j) {
            int64_t x = out.Vinv[p][j], y = out.Vinv[q][j];
            out.Vinv[p][j] = red(checked_add(checked_mul(u, x), checked_mul(w, y)), e);
            out.Vinv[q][j] = red(checked_add(checked_mul(-t, x), checked_mul(s, y)), e);
        }
    };
    auto swap_cols = [&](int p, int q) {
        if (p == q) return;
        for (int i = 0; i < r; ++i) std::swap(A[i][p], A[i][q]);
        for (int i = 0; i < k; ++i) std::swap(out.V[i][p], out.V[i][q]);
        std::swap(out.Vinv[p], out.Vinv[q]);
    };

    int t = 0;
    const int lim = std::min(r, k);
    while (t < lim) {
        int bi = -1, bj = -1;
        int64_t best = 0;
        for (int i = t; i < r; ++i)
            for (int j = t; j < k; ++j) {
                int64_t v = abs_rep(A[i][j], e);
                if (v != 0 && (bi < 0 || v < best)) { best = v; bi = i; bj = j; }
            }
        if (bi < 0) break;
        std::swap(A[t], A[bi]);
        swap_cols(t, bj);
        for (;;) {
            for (int i = t + 1; i < r; ++i)
                if (A[i][t] != 0) row_combine(t, i, t);
            bool row_clear = true;
            for (int j = t + 1; j < k; ++j)
                if (A[t][j] != 0) { col_combine(t, j, t); row_clear = false; }
            bool col_clear = true;
            for (int i = t + 1; i < r; ++i)
                if (A[i][t] != 0) col_clear = false;
            if (!(row_clear && col_clear)) continue;
            int64_t d = A[t][t];
            int fix = -1;
            for (int i = t + 1; i < r && fix < 0; ++i)
                for (int j = t + 1; j < k; ++j)
                    if (A[i][j] % d != 0) { fix = i; break; }
            if (fix < 0) break;
            for (int j = 0; j < k; ++j) A[t][j] = red(checked_add(A[t][j], A[fix][j]), e);
        }
        ++t;
    }
    out.diag.assign(k, 0);
    for (int i = 0; i < std::min(r, k); ++i) out.diag[i] = A[i][i] < 0 ? -A[i][i] : A[i][i];
    if (e > 0)
        for (auto& d : out.diag) d = std::gcd(d, e);
    return out;
}

Subquotient::Subquotient(const Echelon& big, const Echelon& small) : big_(big) {
    const int k = int(big.rows.size());
    e_ = 1;
    for (int64_t m : big.mod) {
        if (m == 0) { e_ = 0; break; }
        e_ = std::lcm(e_, m);
    }
    if (big.mod.empty()) e_ = 0;
    std::vector<Vec> C;
    C.reserve(small.rows.size());
    if (e_ > 0) {
        // Reduced coefficients are exact up to coefficient vectors of
        // relations, so that lattice joins the rows.
        for (const auto& row : small.rows) C.push_back(big.reduced_coefficients(row, e_));
        IntMatrix BT(big.ncols(), k);
        for (int i = 0; i < k; ++i)
            for (int col = 0; col < big.ncols(); ++col) BT(col, i) = big.rows[i][col];
        for (auto& r : kernel_lattice(BT, Vec(k, e_), big.mod).rows) C.push_back(std::move(r));
    } else {
        for (const auto& row : small.rows) C.push_back(big.coefficients(row));
    }
    Smith snf = smith_normal_form(std::move(C), k, e_);
    V_ = snf.V;
    for (int i = 0; i < k; ++i) {
        if (snf.diag[i] == 1) continue;
        keep_.push_back(i);
        inv_.push_back(snf.diag[i]);
        Vec g(big.ncols(), 0);
        for (int j = 0; j < k; ++j) {
            int64_t c = snf.Vinv[i][j];
            if (c == 0) continue;
            for (int col = 0; col < big.ncols(); ++col)
                g[col] = checked_add(g[col], checked_mul(c, big.rows[j][col]));
        }
        gens_.push_back(reduce(std::move(g), big.mod));
    }
}

Vec Subquotient::coords(const Vec& v) const {
    Vec c = big_.reduced_coefficients(v, e_);
    const int k = int(c.size());
    Vec out(keep_.size(), 0);
    for (size_t a = 0; a < keep_.size(); ++a) {
        int col = keep_[a];
        int64_t s = 0;
        for (int j = 0; j < k; ++j)
            if (c[j] != 0) s = e_ > 0 ? mod_floor(checked_add(s, checked_mul(c[j], V_[j][col])), e_)
                                      : checked_add(s, checked_mul(c[j], V_[j][col]));
        out[a] = inv_[a] > 0 ? mod_floor(s, inv_[a]) : s;
    }
    return out;
}

Vec Subquotient::lift(const Vec& c) const {
    Vec v(big_.ncols(), 0);
    for (size_t a = 0; a < gens_.size(); ++a) {
        if (c[a] == 0) continue;
        for (int col = 0; col < big_.ncols(); ++col)
            v[col] = checked_add(v[col], checked_mul(c[a], gens_[a][col]));
    }
    return reduce(std::move(v), big_.mod);
}

int64_t Subquotient::order() const {
    int64_t n = 1;
    for (int64_t d : inv_) {
        if (d == 0) return -1;
        n = checked_mul(n, d);
    }
    return n;
}

}  // namespace cocycle
