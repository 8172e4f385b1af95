#include "cocycle/torus.hpp"

#include <algorithm>

namespace cocycle {

int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int64_t triple_index(int n, int p, int q, int r) {
    if (!(0 <= p && p < q && q < r && r < n)) throw InputError("triple must satisfy 0 <= p < q < r < n");
    int64_t idx = 0;
    for (int a = 0; a < p; ++a) idx += binomial(n - a - 1, 2);
    for (int b = p + 1; b < q; ++b) idx += n - b - 1;
    return idx + (r - q - 1);
}

std::array<int, 3> triple_at(int n, int64_t idx) {
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                if (idx-- == 0) return {p, q, r};
    throw InputError("triple index out of range");
}

AntisymTensor3::AntisymTensor3(int n) : n_(n), packed_(size_t(binomial(n, 3)), 0) {
    if (n < 0) throw InputError("tensor dimension must be nonnegative");
}

namespace {

// Sign of the permutation sorting three distinct values.
int sort_sign(std::array<int, 3>& t) {
    int sign = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j + 1 < 3 - i; ++j)
            if (t[j] > t[j + 1]) {
                std::swap(t[j], t[j + 1]);
                sign = -sign;
            }
    return sign;
}

}  // namespace

AntisymTensor3 AntisymTensor3::from_dense(int n, const Vec& values) {
    if (int64_t(values.size()) != int64_t(n) * n * n) throw InputError("dense tensor must have n^3 entries");
    AntisymTensor3 S(n);
    auto at = [&](int p, int q, int r) { return values[(size_t(p) * n + q) * n + r]; };
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r) {
                std::array<int, 3> t{p, q, r};
                if (p == q || q == r || p == r) {
                    if (at(p, q, r) != 0)
                        throw InputError("tensor is nonzero on a repeated index at (" + std::to_string(p) + "," +
                                         std::to_string(q) + "," + std::to_string(r) + ")");
                    continue;
                }
                int sign = sort_sign(t);
                if (at(p, q, r) != sign * at(t[0], t[1], t[2]))
                    throw InputError("tensor is not antisymmetric at (" + std::to_string(p) + "," +
                                     std::to_string(q) + "," + std::to_string(r) + ")");
                if (sign == 1 && p < q && q < r) S.packed_[size_t(triple_index(n, p, q, r))] = at(p, q, r);
            }
    return S;
}

AntisymTensor3 AntisymTensor3::from_entries(int n, const std::vector<std::tuple<int, int, int, int64_t>>& entries) {
    AntisymTensor3 S(n);
    std::vector<bool> seen(S.packed_.size(), false);
    for (const auto& [p, q, r, v] : entries) {
        if (p < 0 || q < 0 || r < 0 || p >= n || q >= n || r >= n) throw InputError("tensor index out of range");
        if (p == q || q == r || p == r) {
            if (v != 0) throw InputError("antisymmetric tensor must vanish on repeated indices");
            continue;
        }
        std::array<int, 3> t{p, q, r};
        int64_t value = sort_sign(t) * v;
        size_t i = size_t(triple_index(n, t[0], t[1], t[2]));
        if (seen[i] && S.packed_[i] != value) throw InputError("conflicting tensor entries");
        seen[i] = true;
        S.packed_[i] = value;
    }
    return S;
}

AntisymTensor3 AntisymTensor3::basis(int n, int64_t idx) {
    AntisymTensor3 S(n);
    if (idx < 0 || idx >= int64_t(S.packed_.size())) throw InputError("basis index out of range");
    S.packed_[size_t(idx)] = 1;
    return S;
}

int64_t AntisymTensor3::at(int p, int q, int r) const {
    if (p == q || q == r || p == r) return 0;
    std::array<int, 3> t{p, q, r};
    int sign = sort_sign(t);
    return sign * packed_[size_t(triple_index(n_, t[0], t[1], t[2]))];
}

Vec AntisymTensor3::dense() const {
    Vec out(size_t(n_) * n_ * n_, 0);
    for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q)
            for (int r = 0; r < n_; ++r) out[(size_t(p) * n_ + q) * n_ + r] = at(p, q, r);
    return out;
}

AntisymTensor3 AntisymTensor3::operator+(const AntisymTensor3& o) const {
    if (n_ != o.n_) throw InputError("tensor dimensions differ");
    AntisymTensor3 S(n_);
    for (size_t i = 0; i < packed_.size(); ++i) S.packed_[i] = checked_add(packed_[i], o.packed_[i]);
    return S;
}

namespace {

Rational frac(Rational r) {
    int64_t fl = r.numerator() / r.denominator();
    if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --fl;
    return r - fl;
}

}  // namespace

AffinePhase AffinePhase::operator+(const AffinePhase& o) const {
    if (coeffs.size() != o.coeffs.size()) throw InputError("phase dimensions differ");
    AffinePhase out{coeffs, frac(constant + o.constant)};
    for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] = checked_add(coeffs[i], o.coeffs[i]);
    return out;
}

AffinePhase AffinePhase::operator-() const {
    AffinePhase out{coeffs, frac(-constant)};
    for (auto& c : out.coeffs) c = -c;
    return out;
}

AffinePhase AffinePhase::translate(const Vec& z) const {
    if (z.size() != coeffs.size()) throw InputError("translation has the wrong dimension");
    int64_t shift = 0;
    for (size_t i = 0; i < z.size(); ++i) shift = checked_add(shift, checked_mul(coeffs[i], z[i]));
    return {coeffs, frac(constant + shift)};
}

bool AffinePhase::operator==(const AffinePhase& o) const {
    return coeffs == o.coeffs && frac(constant) == frac(o.constant);
}

AffinePhase cs_cocycle(const AntisymTensor3& S, const Vec& u, const Vec& v) {
    const int n = S.n();
    if (int(u.size()) != n || int(v.size()) != n) throw InputError("cs_cocycle: dimension mismatch");
    AffinePhase out{Vec(size_t(n), 0), Rational(0)};
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                if (int64_t s = S.at(p, q, r))
                    out.coeffs[p] = checked_add(out.coeffs[p], checked_mul(s, checked_mul(u[q], v[r])));
    return out;
}

Polynomial Polynomial::constant(int64_t c) {
    Polynomial P;
    P.add_term({}, c);
    return P;
}

Polynomial Polynomial::variable(int v) {
    Polynomial P;
    P.add_term({v}, 1);
    return P;
}

void Polynomial::add_term(const std::vector<int>& m, int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial P = *this;
    for (const auto& [m, c] : o.terms_) P.add_term(m, c);
    return P;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(-1); }

Polynomial Polynomial::scaled(int64_t k) const {
    Polynomial P;
    for (const auto& [m, c] : terms_) P.add_term(m, checked_mul(c, k));
    return P;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial P;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            std::vector<int> m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            P.add_term(m, checked_mul(c1, c2));
        }
    return P;
}

int64_t Polynomial::coefficient(std::vector<int> monomial) const {
    std::sort(monomial.begin(), monomial.end());
    auto it = terms_.find(monomial);
    return it == terms_.end() ? 0 : it->second;
}

Polynomial Polynomial::terms_with(const std::function<bool(int)>& pred) const {
    Polynomial P;
    for (const auto& [m, c] : terms_)
        if (std::any_of(m.begin(), m.end(), pred)) P.add_term(m, c);
    return P;
}

SymVec symbolic_block(int block, int n) {
    SymVec v;
    for (int p = 0; p < n; ++p) v.push_back(Polynomial::variable(block * n + p));
    return v;
}

SymVec operator+(const SymVec& a, const SymVec& b) {
    SymVec out;
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
    return out;
}

Polynomial cs_log(const AntisymTensor3& S, const SymVec& x, const SymVec& u, const SymVec& v) {
    const int n = S.n();
    Polynomial out;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                if (int64_t s = S.at(p, q, r)) out = out + (x[p] * u[q] * v[r]).scaled(s);
    return out;
}

Polynomial basepointed_delta_symbolic(const SymCochain& d, int n, int k) {
    SymVec x = symbolic_block(0, n);
    std::vector<SymVec> g;
    for (int i = 1; i <= k; ++i) g.push_back(symbolic_block(i, n));
    Polynomial out;
    for (int i = 0; i + 1 < k; ++i) {
        std::vector<SymVec> merged;
        for (int j = 0; j < k; ++j) {
            if (j == i) merged.push_back(g[j] + g[j + 1]);
            else if (j != i + 1) merged.push_back(g[j]);
        }
        Polynomial term = d(x, merged);
        out = (i % 2 == 0) ? out - term : out + term;
    }
    out = out + d(x + g[0], std::vector<SymVec>(g.begin() + 1, g.end()));
    Polynomial last = d(x, std::vector<SymVec>(g.begin(), g.end() - 1));
    return k % 2 == 0 ? out + last : out - last;
}

CocycleIdentityReport verify_cocycle_identity(const AntisymTensor3& S) {
    const int n = S.n();
    SymVec x = symbolic_block(0, n), z = symbolic_block(1, n), v = symbolic_block(2, n), w = symbolic_block(3, n);
    Polynomial lhs = cs_log(S, x, z, v) + cs_log(S, x, z + v, w);
    Polynomial rhs = cs_log(S, x, z, v + w) + cs_log(S, x + z, v, w);
    Polynomial diff = lhs - rhs;
    CocycleIdentityReport r;
    r.x_terms = diff.terms_with([n](int var) { return var < n; });
    r.remainder = diff - r.x_terms;
    // integer coefficients on integer variables give an integer, so the
    // phase is trivial exactly when x drops out
    r.ok = r.x_terms.is_zero();
    return r;
}

int64_t MultilinearForm::at(const std::vector<int>& idx) const {
    int64_t flat = 0;
    for (int i : idx) flat = flat * n + i;
    return values[size_t(flat)];
}

int64_t MultilinearForm::eval(const std::vector<Vec>& args) const {
    if (int(args.size()) != k) throw InputError("form arity mismatch");
    int64_t total = 0;
    std::vector<int> idx(size_t(k), 0);
    for (size_t flat = 0; flat < values.size(); ++flat) {
        int64_t term = values[flat];
        for (int j = 0; j < k && term != 0; ++j) term = checked_mul(term, args[j][idx[j]]);
        total = checked_add(total, term);
        for (int j = k - 1; j >= 0; --j) {
            if (++idx[j] < n) break;
            idx[j] = 0;
        }
    }
    return total;
}

namespace {

// Reads a polynomial that is multilinear in blocks 1..k into a form.
MultilinearForm form_of(const Polynomial& P, int n, int k) {
    size_t size = 1;
    for (int j = 0; j < k; ++j) size *= size_t(n);
    MultilinearForm f{n, k, Vec(size, 0)};
    for (size_t flat = 0; flat < f.values.size(); ++flat) {
        std::vector<int> mono;
        size_t r = flat;
        std::vector<int> idx(static_cast<size_t>(k));
        for (int j = k - 1; j >= 0; --j) {
            idx[j] = int(r % n);
            r /= n;
        }
        for (int j = 0; j < k; ++j) mono.push_back((j + 1) * n + idx[j]);
        f.values[flat] = P.coefficient(mono);
    }
    return f;
}

Polynomial form_polynomial(const MultilinearForm& f, const std::vector<SymVec>& args) {
    Polynomial out;
    std::vector<int> idx(size_t(f.k), 0);
    for (size_t flat = 0; flat < f.values.size(); ++flat) {
        if (f.values[flat] != 0) {
            Polynomial term = Polynomial::constant(f.values[flat]);
            for (int j = 0; j < f.k; ++j) term = term * args[j][idx[j]];
            out = out + term;
        }
        for (int j = f.k - 1; j >= 0; --j) {
            if (++idx[j] < f.n) break;
            idx[j] = 0;
        }
    }
    return out;
}

// Group coboundary of a Z-valued k-cochain on Z^n with trivial action.
Polynomial trivial_delta(const std::function<Polynomial(const std::vector<SymVec>&)>& c, int n, int k) {
    std::vector<SymVec> g;
    for (int i = 1; i <= k + 1; ++i) g.push_back(symbolic_block(i, n));
    Polynomial out = c(std::vector<SymVec>(g.begin() + 1, g.end()));
    for (int i = 0; i < k; ++i) {
        std::vector<SymVec> merged;
        for (int j = 0; j <= k; ++j) {
            if (j == i) merged.push_back(g[j] + g[j + 1]);
            else if (j != i + 1) merged.push_back(g[j]);
        }
        out = (i % 2 == 0) ? out - c(merged) : out + c(merged);
    }
    Polynomial last = c(std::vector<SymVec>(g.begin(), g.end() - 1));
    return (k + 1) % 2 == 0 ? out + last : out - last;
}

// T_pq x_p u_q summed, T antisymmetric and stored on p < q.
Polynomial ct_log(int n, const Vec& T, const SymVec& x, const SymVec& u) {
    Polynomial out;
    int64_t i = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q, ++i)
            if (T[size_t(i)] != 0) out = out + (x[p] * u[q] - x[q] * u[p]).scaled(T[size_t(i)]);
    return out;
}

bool full_column_rank(const std::vector<Vec>& columns, int64_t& rank) {
    if (columns.empty()) {
        rank = 0;
        return true;
    }
    const int rows = int(columns.front().size()), cols = int(columns.size());
    IntMatrix M(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) M(i, j) = columns[j][i];
    Echelon K = kernel_lattice(M, Vec(size_t(cols), 0), Vec(size_t(rows), 0));
    rank = cols - int64_t(K.rows.size());
    return K.rows.empty();
}

}  // namespace

DeltaLogResult delta_log(const AntisymTensor3& S) {
    const int n = S.n();
    SymCochain d = [&S](const SymVec& x, const std::vector<SymVec>& a) { return cs_log(S, x, a[0], a[1]); };
    Polynomial delta = basepointed_delta_symbolic(d, n, 3);
    DeltaLogResult r;
    r.x_cancelled = delta.terms_with([n](int var) { return var < n; }).is_zero();
    r.c_prime = form_of(delta, n, 3);
    // the form must account for every term of delta
    std::vector<SymVec> args{symbolic_block(1, n), symbolic_block(2, n), symbolic_block(3, n)};
    if (!(form_polynomial(r.c_prime, args) - delta).is_zero()) r.x_cancelled = false;
    const MultilinearForm& c = r.c_prime;
    r.cocycle = trivial_delta([&c](const std::vector<SymVec>& a) { return form_polynomial(c, a); }, n, 3).is_zero();
    return r;
}

AntisymTensor3 tensor_from_form(const MultilinearForm& c) {
    if (c.k != 3) throw InputError("expected a trilinear form");
    return AntisymTensor3::from_dense(c.n, c.values);
}

RankCheck rank_check(int n) {
    if (n < 3) throw InputError("rank_check needs n >= 3");
    RankCheck r;
    r.n = n;
    r.recovers = true;
    std::vector<Vec> images;
    for (int64_t i = 0; i < binomial(n, 3); ++i) {
        AntisymTensor3 e = AntisymTensor3::basis(n, i);
        DeltaLogResult d = delta_log(e);
        r.recovers = r.recovers && d.x_cancelled && d.cocycle && tensor_from_form(d.c_prime) == e;
        images.push_back(d.c_prime.values);
    }
    r.injective = full_column_rank(images, r.rank);

    // 1-cocycles c_T(x; u) = exp(2 pi i T_pq x_p u_q)
    r.h1_cocycles = true;
    std::vector<Vec> h1_images;
    const int64_t pairs = binomial(n, 2);
    for (int64_t i = 0; i < pairs; ++i) {
        Vec T(size_t(pairs), 0);
        T[size_t(i)] = 1;
        SymCochain d = [n, T](const SymVec& x, const std::vector<SymVec>& a) { return ct_log(n, T, x, a[0]); };
        Polynomial delta = basepointed_delta_symbolic(d, n, 2);
        r.h1_cocycles = r.h1_cocycles && delta.terms_with([n](int var) { return var < n; }).is_zero();
        h1_images.push_back(form_of(delta, n, 2).values);
    }
    r.h1_injective = full_column_rank(h1_images, r.h1_rank);
    return r;
}

}  // namespace cocycle
