#include "cocycle/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cocycle {

namespace {

std::string triple_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

std::optional<GroupViolation> verify_group(const std::vector<std::vector<int>>& t) {
    const int n = int(t.size());
    if (n < 1) return GroupViolation{"order", {}, "order must be ≥ 1"};
    for (int a = 0; a < n; ++a) {
        if (int(t[a].size()) != n) return GroupViolation{"range", {a}, "row " + std::to_string(a) + " has wrong length"};
        for (int b = 0; b < n; ++b)
            if (t[a][b] < 0 || t[a][b] >= n)
                return GroupViolation{"range", {a, b}, "entry " + triple_str({a, b}) + " out of range"};
    }
    for (int a = 0; a < n; ++a)
        if (t[0][a] != a || t[a][0] != a)
            return GroupViolation{"identity", {a}, "element 0 is not an identity at " + std::to_string(a)};
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) found = t[a][b] == 0 && t[b][a] == 0;
        if (!found) return GroupViolation{"inverse", {a}, "element " + std::to_string(a) + " has no inverse"};
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    return GroupViolation{"associativity", {a, b, c},
                                          "associativity fails at " + triple_str({a, b, c})};
    return std::nullopt;
}

FiniteGroup::FiniteGroup(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
    if (auto v = verify_group(table)) throw InputError(v->message);
    n_ = int(table.size());
    mul_.resize(size_t(n_) * n_);
    inv_.assign(n_, 0);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            mul_[size_t(a) * n_ + b] = table[a][b];
            if (table[a][b] == 0) inv_[a] = b;
        }
    if (labels.empty())
        for (int a = 0; a < n_; ++a) labels.push_back(std::to_string(a));
    if (int(labels.size()) != n_) throw InputError("label count does not match group order");
    labels_ = std::move(labels);
}

int FiniteGroup::pow(int a, int64_t k) const {
    if (k < 0) { a = inv(a); k = -k; }
    int r = 0;
    for (int64_t i = 0; i < k % element_order(a); ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::vector<char> in(n_, 0);
    std::deque<int> q{0};
    in[0] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int g : gens) {
            int y = mul(x, g);
            if (!in[y]) { in[y] = 1; q.push_back(y); }
        }
    }
    std::vector<int> out;
    for (int a = 0; a < n_; ++a)
        if (in[a]) out.push_back(a);
    return out;
}

std::vector<int> FiniteGroup::generators() const {
    std::vector<int> gens;
    std::vector<char> in(n_, 0);
    in[0] = 1;
    for (int x = 0; x < n_; ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        for (int y : generated_subgroup(gens)) in[y] = 1;
    }
    return gens;
}

FiniteGroup make_cyclic(int m) {
    if (m < 1) throw InputError("order must be ≥ 1");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return FiniteGroup(t);
}

FiniteGroup make_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
        for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
    return FiniteGroup(t, labels);
}

FiniteGroup make_dihedral(int n) {
    if (n < 1) throw InputError("dihedral parameter must be ≥ 1");
    const int N = 2 * n;
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int i = x % n, j = x / n, k = y % n, l = y / n;
            int r = ((i + (j ? -k : k)) % n + n) % n;
            t[x][y] = r + n * ((j + l) % 2);
        }
    return FiniteGroup(t);
}

FiniteGroup make_quaternion() {
    // units 1,i,j,k at 0..3; index + 4 is the negative
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int u = unit[x % 4][y % 4];
            int s = sign[x % 4][y % 4] * (x / 4 ? -1 : 1) * (y / 4 ? -1 : 1);
            t[x][y] = u + (s < 0 ? 4 : 0);
        }
    return FiniteGroup(t, {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
    if (n < 1 || n > 6) throw InputError("symmetric group degree must be in 1..6");
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> all;
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return all;
}

}  // namespace

FiniteGroup make_symmetric(int n) {
    auto perms = permutations_of(n);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = int(i);
    const size_t N = perms.size();
    std::vector<std::vector<int>> t(N, std::vector<int>(N));
    std::vector<int> ab(n);
    for (size_t a = 0; a < N; ++a)
        for (size_t b = 0; b < N; ++b) {
            for (int i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]];
            t[a][b] = index[ab];
        }
    return FiniteGroup(t);
}

std::vector<int> permutation_parity(int n) {
    std::vector<int> out;
    for (const auto& p : permutations_of(n)) {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
        out.push_back(inversions % 2);
    }
    return out;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& subset) {
    if (subset.empty()) return false;
    std::vector<char> in(G.order(), 0);
    for (int x : subset) {
        if (x < 0 || x >= G.order()) return false;
        in[x] = 1;
    }
    if (!in[0]) return false;
    for (int a : subset) {
        if (!in[G.inv(a)]) return false;
        for (int b : subset)
            if (!in[G.mul(a, b)]) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& G, const std::vector<int>& subset) {
    std::vector<char> in(G.order(), 0);
    for (int x : subset) in[x] = 1;
    for (int g = 0; g < G.order(); ++g)
        for (int x : subset)
            if (!in[G.conj(g, x)]) return false;
    return true;
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (!is_subgroup(G, subset)) throw InputError("not a subgroup");
    Subgroup s;
    s.elements = subset;
    s.index_of.assign(G.order(), -1);
    for (size_t i = 0; i < subset.size(); ++i) s.index_of[subset[i]] = int(i);
    const int k = int(subset.size());
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        labels.push_back(G.label(subset[i]));
        for (int j = 0; j < k; ++j) t[i][j] = s.index_of[G.mul(subset[i], subset[j])];
    }
    s.group = FiniteGroup(t, labels);
    return s;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& G) {
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> q;
    std::vector<int> triv{0};
    seen.insert(triv);
    q.push_back(triv);
    while (!q.empty()) {
        auto s = q.front();
        q.pop_front();
        for (int x = 0; x < G.order(); ++x) {
            if (std::binary_search(s.begin(), s.end(), x)) continue;
            auto gens = s;
            gens.push_back(x);
            auto t = G.generated_subgroup(gens);
            if (seen.insert(t).second) q.push_back(t);
        }
    }
    std::vector<std::vector<int>> out;
    for (const auto& s : seen)
        if (is_normal(G, s)) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Quotient quotient(const FiniteGroup& G, const std::vector<int>& N) {
    if (!is_subgroup(G, N)) throw InputError("not a subgroup");
    if (!is_normal(G, N)) throw InputError("not normal");
    Quotient q;
    q.proj.assign(G.order(), -1);
    for (int g = 0; g < G.order(); ++g) {
        if (q.proj[g] >= 0) continue;
        int id = int(q.section.size());
        q.section.push_back(g);
        for (int n : N) q.proj[G.mul(g, n)] = id;
    }
    const int h = int(q.section.size());
    std::vector<std::vector<int>> t(h, std::vector<int>(h));
    std::vector<std::string> labels;
    for (int a = 0; a < h; ++a) {
        labels.push_back(G.label(q.section[a]) + "N");
        for (int b = 0; b < h; ++b) t[a][b] = q.proj[G.mul(q.section[a], q.section[b])];
    }
    q.H = FiniteGroup(t, labels);
    return q;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& G) {
    const int n = G.order();
    auto gens = G.generators();
    std::vector<std::vector<int>> candidates;
    for (int g : gens) {
        std::vector<int> c;
        for (int x = 0; x < n; ++x)
            if (G.element_order(x) == G.element_order(g)) c.push_back(x);
        candidates.push_back(std::move(c));
    }
    std::vector<std::vector<int>> out;
    std::vector<int> img(gens.size());
    auto try_extend = [&]() -> std::optional<std::vector<int>> {
        std::vector<int> phi(n, -1);
        phi[0] = 0;
        std::deque<int> q{0};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (size_t k = 0; k < gens.size(); ++k) {
                int y = G.mul(x, gens[k]), v = G.mul(phi[x], img[k]);
                if (phi[y] < 0) { phi[y] = v; q.push_back(y); }
                else if (phi[y] != v) return std::nullopt;
            }
        }
        std::vector<char> hit(n, 0);
        for (int x = 0; x < n; ++x) {
            if (hit[phi[x]]) return std::nullopt;
            hit[phi[x]] = 1;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (phi[G.mul(a, b)] != G.mul(phi[a], phi[b])) return std::nullopt;
        return phi;
    };
    std::vector<size_t> idx(gens.size(), 0);
    if (gens.empty()) return {std::vector<int>{0}};
    for (;;) {
        for (size_t k = 0; k < gens.size(); ++k) img[k] = candidates[k][idx[k]];
        if (auto phi = try_extend()) out.push_back(std::move(*phi));
        size_t k = 0;
        while (k < gens.size() && ++idx[k] == candidates[k].size()) idx[k++] = 0;
        if (k == gens.size()) break;
    }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    auto it = std::find(out.begin(), out.end(), id);
    std::iter_swap(out.begin(), it);
    return out;
}

AbelianGroup::AbelianGroup(int r, Vec t) : rank(r), torsion(std::move(t)) {
    if (rank < 0) throw InputError("module rank must be nonnegative");
    for (int64_t m : torsion)
        if (m < 2) throw InputError("torsion entries must be ≥ 2");
}

AbelianGroup AbelianGroup::from_invariants(const Vec& inv) {
    AbelianGroup A;
    for (int64_t d : inv) {
        if (d == 0) ++A.rank;
        else if (d > 1) A.torsion.push_back(d);
    }
    return A;
}

Vec AbelianGroup::moduli() const {
    Vec m(rank, 0);
    m.insert(m.end(), torsion.begin(), torsion.end());
    return m;
}

int64_t AbelianGroup::order() const {
    if (!finite()) throw InputError("order of an infinite module");
    int64_t n = 1;
    for (int64_t m : torsion) n = checked_mul(n, m);
    return n;
}

int64_t AbelianGroup::exponent() const {
    int64_t e = 1;
    for (int64_t m : torsion) e = std::lcm(e, m);
    return e;
}

Vec AbelianGroup::add(const Vec& a, const Vec& b) const {
    Vec r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = checked_add(a[i], b[i]);
    return reduce(std::move(r));
}

Vec AbelianGroup::sub(const Vec& a, const Vec& b) const {
    Vec r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = checked_add(a[i], -b[i]);
    return reduce(std::move(r));
}

Vec AbelianGroup::neg(const Vec& a) const {
    Vec r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = -a[i];
    return reduce(std::move(r));
}

Vec AbelianGroup::scale(int64_t k, const Vec& a) const {
    Vec r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = checked_mul(k, a[i]);
    return reduce(std::move(r));
}

Vec AbelianGroup::element(int64_t idx) const {
    Vec a(dim(), 0);
    for (size_t i = 0; i < torsion.size(); ++i) {
        a[rank + i] = idx % torsion[i];
        idx /= torsion[i];
    }
    return a;
}

int64_t AbelianGroup::index(const Vec& a) const {
    int64_t idx = 0;
    for (size_t i = torsion.size(); i-- > 0;) idx = idx * torsion[i] + mod_floor(a[rank + i], torsion[i]);
    return idx;
}

AbelianStructure abelian_structure(const FiniteGroup& G) {
    if (!G.is_abelian()) throw InputError("group is not abelian");
    const int n = G.order();
    // presentation: one generator per element, x_a + x_b = x_ab, x_0 = 0
    std::vector<Vec> rel;
    Vec z(n, 0);
    z[0] = 1;
    rel.push_back(z);
    auto gens = G.generators();
    for (int a = 0; a < n; ++a)
        for (int g : gens) {
            Vec r(n, 0);
            r[a] += 1;
            r[g] += 1;
            r[G.mul(a, g)] -= 1;
            rel.push_back(std::move(r));
        }
    Vec mod(n, 0);
    std::vector<Vec> unit;
    for (int a = 0; a < n; ++a) {
        Vec e(n, 0);
        e[a] = 1;
        unit.push_back(std::move(e));
    }
    Subquotient q(echelon(unit, mod), echelon(rel, mod));
    AbelianStructure s;
    s.A = AbelianGroup::from_invariants(q.invariants());
    if (!s.A.finite() || s.A.order() != n) throw std::logic_error("abelian structure has the wrong order");
    s.element.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        Vec e(n, 0);
        e[a] = 1;
        Vec v = s.A.reduce(q.coords(e));
        s.coords.push_back(v);
        s.element[size_t(s.A.index(v))] = a;
    }
    return s;
}

IntMat identity_matrix(int d) {
    IntMat m(d, Vec(d, 0));
    for (int i = 0; i < d; ++i) m[i][i] = 1;
    return m;
}

IntMat matmul(const IntMat& a, const IntMat& b, const Vec& mod) {
    const int d = int(a.size());
    IntMat c(d, Vec(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int64_t s = 0;
            for (int k = 0; k < d; ++k) s = checked_add(s, checked_mul(a[i][k], b[k][j]));
            c[i][j] = mod[i] > 0 ? mod_floor(s, mod[i]) : s;
        }
    return c;
}

std::vector<GAction> enumerate_actions(const FiniteGroup& G, const AbelianGroup& A) {
    auto auts = module_automorphisms(A);
    auto gens = G.generators();
    std::vector<GAction> out;
    std::vector<size_t> idx(gens.size(), 0);
    for (;;) {
        std::vector<IntMat> mats(G.order());
        std::vector<char> set(G.order(), 0);
        mats[0] = identity_matrix(A.dim());
        set[0] = 1;
        std::deque<int> q{0};
        bool ok = true;
        while (!q.empty() && ok) {
            int x = q.front();
            q.pop_front();
            for (size_t k = 0; k < gens.size(); ++k) {
                int y = G.mul(x, gens[k]);
                IntMat m = matmul(mats[x], auts[idx[k]], A.moduli());
                if (!set[y]) { mats[y] = std::move(m); set[y] = 1; q.push_back(y); }
                else if (mats[y] != m) { ok = false; break; }
            }
        }
        if (ok) {
            GAction S(G, A, mats);
            if (!S.check()) out.push_back(std::move(S));
        }
        size_t k = 0;
        while (k < gens.size() && ++idx[k] == auts.size()) idx[k++] = 0;
        if (k == gens.size()) break;
    }
    return out;
}

namespace {

Vec mat_apply(const IntMat& M, const Vec& a, const AbelianGroup& A) {
    const int d = A.dim();
    Vec r(d, 0);
    for (int i = 0; i < d; ++i) {
        int64_t s = 0;
        for (int j = 0; j < d; ++j)
            if (M[i][j] != 0 && a[j] != 0) s = checked_add(s, checked_mul(M[i][j], a[j]));
        r[i] = s;
    }
    return A.reduce(std::move(r));
}

}  // namespace

bool respects_torsion(const AbelianGroup& A, const IntMat& M) {
    const int d = A.dim();
    if (int(M.size()) != d) return false;
    for (const auto& row : M)
        if (int(row.size()) != d) return false;
    for (size_t t = 0; t < A.torsion.size(); ++t) {
        Vec e(d, 0);
        e[A.rank + t] = A.torsion[t];
        if (!is_zero(mat_apply(M, e, A))) return false;
    }
    return true;
}

std::vector<IntMat> module_automorphisms(const AbelianGroup& A) {
    if (!A.finite()) throw InputError("automorphism enumeration needs a finite module");
    const int d = A.dim();
    const int64_t n = A.order();
    std::vector<std::vector<Vec>> choices(d);
    for (int j = 0; j < d; ++j)
        for (int64_t x = 0; x < n; ++x) {
            Vec v = A.element(x);
            if (is_zero(A.scale(A.torsion[j], v))) choices[j].push_back(v);
        }
    std::vector<IntMat> out;
    std::vector<size_t> idx(d, 0);
    if (d == 0) return {IntMat{}};
    for (;;) {
        IntMat M(d, Vec(d, 0));
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i) M[i][j] = choices[j][idx[j]][i];
        std::vector<char> hit(n, 0);
        bool bij = true;
        for (int64_t x = 0; x < n && bij; ++x) {
            int64_t y = A.index(mat_apply(M, A.element(x), A));
            if (hit[y]) bij = false;
            hit[y] = 1;
        }
        if (bij) out.push_back(M);
        int j = 0;
        while (j < d && ++idx[j] == choices[j].size()) idx[j++] = 0;
        if (j == d) break;
    }
    auto it = std::find(out.begin(), out.end(), identity_matrix(d));
    std::iter_swap(out.begin(), it);
    return out;
}

GAction::GAction(FiniteGroup G, AbelianGroup A, std::vector<IntMat> mats)
    : G_(std::move(G)), A_(std::move(A)), mats_(std::move(mats)) {
    if (int(mats_.size()) != G_.order()) throw InputError("action needs one matrix per group element");
    for (auto& M : mats_) {
        if (!respects_torsion(A_, M)) throw InputError("action matrix does not respect torsion");
        for (int i = 0; i < A_.dim(); ++i)
            if (A_.moduli()[i] > 0)
                for (auto& x : M[i]) x = mod_floor(x, A_.moduli()[i]);
    }
}

GAction GAction::trivial(FiniteGroup G, AbelianGroup A) {
    int d = A.dim();
    std::vector<IntMat> mats(G.order(), identity_matrix(d));
    return GAction(std::move(G), std::move(A), std::move(mats));
}

Vec GAction::apply(int g, const Vec& a) const { return mat_apply(mats_[g], a, A_); }

bool GAction::is_trivial() const {
    IntMat id = identity_matrix(A_.dim());
    auto mod = A_.moduli();
    for (const auto& M : mats_)
        if (matmul(M, id, mod) != matmul(id, id, mod)) return false;
    return true;
}

std::optional<std::string> GAction::check() const {
    const int d = A_.dim();
    std::vector<Vec> basis;
    for (int j = 0; j < d; ++j) {
        Vec e(d, 0);
        e[j] = 1;
        basis.push_back(e);
    }
    for (const auto& e : basis)
        if (apply(0, e) != A_.reduce(e)) return std::string("identity does not act trivially");
    for (int g = 0; g < G_.order(); ++g)
        for (int h = 0; h < G_.order(); ++h)
            for (const auto& e : basis)
                if (apply(G_.mul(g, h), e) != apply(g, apply(h, e)))
                    return "S(gh) != S(g)S(h) at g=" + std::to_string(g) + ", h=" + std::to_string(h);
    return std::nullopt;
}

GAction GAction::restrict_to(const Subgroup& H) const {
    std::vector<IntMat> mats;
    for (int x : H.elements) mats.push_back(mats_[x]);
    return GAction(H.group, A_, std::move(mats));
}

GAction GAction::pullback(const FiniteGroup& K, const std::vector<int>& phi) const {
    std::vector<IntMat> mats;
    for (int k = 0; k < K.order(); ++k) mats.push_back(mats_[phi[k]]);
    return GAction(K, A_, std::move(mats));
}

FixedSubmodule fixed_submodule(const GAction& S, const std::vector<int>& subset) {
    const AbelianGroup& A = S.module();
    const int d = A.dim();
    const int k = int(subset.size());
    IntMatrix M(k * d, d);
    for (int s = 0; s < k; ++s) {
        const IntMat& Mg = S.matrix(subset[s]);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) M(s * d + i, j) = Mg[i][j] - (i == j ? 1 : 0);
    }
    Vec tgt;
    for (int s = 0; s < k; ++s) {
        auto m = A.moduli();
        tgt.insert(tgt.end(), m.begin(), m.end());
    }
    Echelon ker = kernel_lattice(M, A.moduli(), tgt);
    Echelon rel = echelon({}, A.moduli());
    FixedSubmodule F;
    F.structure = Subquotient(ker, rel);
    F.group = AbelianGroup::from_invariants(F.structure.invariants());
    return F;
}

GAction fixed_action(const GAction& S, const FixedSubmodule& F) {
    const int d = F.group.dim();
    std::vector<IntMat> mats;
    for (int g = 0; g < S.group().order(); ++g) {
        IntMat M(d, Vec(d, 0));
        for (int j = 0; j < d; ++j) {
            Vec e(d, 0);
            e[j] = 1;
            Vec img = F.coords(S.apply(g, F.embed(e)));
            for (int i = 0; i < d; ++i) M[i][j] = img[i];
        }
        mats.push_back(std::move(M));
    }
    return GAction(S.group(), F.group, std::move(mats));
}

}  // namespace cocycle
