#include "cocycle/cochain.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace cocycle {

int64_t normalized_count(int order, int p) {
    int64_t n = 1;
    for (int i = 0; i < p; ++i) n = checked_mul(n, order - 1);
    return n;
}

int64_t tuple_index(const std::vector<int>& args, int order) {
    int64_t idx = 0;
    for (int g : args) {
        if (g == 0) return -1;
        idx = idx * (order - 1) + (g - 1);
    }
    return idx;
}

std::vector<int> tuple_at(int64_t idx, int order, int p) {
    std::vector<int> t(p);
    for (int i = p - 1; i >= 0; --i) {
        t[i] = int(idx % (order - 1)) + 1;
        idx /= (order - 1);
    }
    return t;
}

Cochain::Cochain(std::shared_ptr<const GAction> S, int p) : S_(std::move(S)), p_(p) {
    if (p < 0) throw InputError("cochain degree must be nonnegative");
    count_ = normalized_count(S_->group().order(), p);
    flat_.assign(size_t(checked_mul(count_, S_->module().dim())), 0);
}

Vec Cochain::at(const std::vector<int>& args) const {
    int64_t idx = tuple_index(args, group().order());
    if (idx < 0) return module().zero();
    return at_index(idx);
}

Vec Cochain::at_index(int64_t idx) const {
    const int d = module().dim();
    return Vec(flat_.begin() + idx * d, flat_.begin() + (idx + 1) * d);
}

void Cochain::set(const std::vector<int>& args, const Vec& v) {
    if (int(args.size()) != p_) throw InputError("cochain argument count does not match degree");
    int64_t idx = tuple_index(args, group().order());
    if (idx < 0) {
        if (!cocycle::is_zero(module().reduce(v))) throw InputError("cochain must vanish when an argument is the identity");
        return;
    }
    set_index(idx, v);
}

void Cochain::set_index(int64_t idx, const Vec& v) {
    const int d = module().dim();
    Vec r = module().reduce(v);
    std::copy(r.begin(), r.end(), flat_.begin() + idx * d);
}

Cochain Cochain::from_flat(std::shared_ptr<const GAction> S, int p, Vec flat) {
    Cochain c(std::move(S), p);
    if (flat.size() != c.flat_.size()) throw InputError("cochain coordinate vector has wrong length");
    c.flat_ = reduce(std::move(flat), cochain_moduli(*c.S_, p));
    return c;
}

Cochain Cochain::operator+(const Cochain& o) const {
    Cochain c = *this;
    for (size_t i = 0; i < flat_.size(); ++i) c.flat_[i] = checked_add(flat_[i], o.flat_[i]);
    c.flat_ = reduce(std::move(c.flat_), cochain_moduli(*S_, p_));
    return c;
}

Cochain Cochain::operator-(const Cochain& o) const {
    Cochain c = *this;
    for (size_t i = 0; i < flat_.size(); ++i) c.flat_[i] = checked_add(flat_[i], -o.flat_[i]);
    c.flat_ = reduce(std::move(c.flat_), cochain_moduli(*S_, p_));
    return c;
}

Vec cochain_moduli(const GAction& S, int p) {
    Vec m = S.module().moduli();
    Vec out;
    int64_t n = normalized_count(S.group().order(), p);
    out.reserve(size_t(n) * m.size());
    for (int64_t i = 0; i < n; ++i) out.insert(out.end(), m.begin(), m.end());
    return out;
}

namespace {

// One term of the bar differential: coefficient sign, source tuple, and
// whether the first-argument action is applied.
struct Term {
    int64_t src;      // source tuple index, -1 when normalized to zero
    int sign;
    int act;          // group element acting, 0 for none
};

std::vector<Term> bar_terms(const FiniteGroup& G, const std::vector<int>& t) {
    const int q = int(t.size());  // = p + 1
    std::vector<Term> terms;
    const int n = G.order();
    std::vector<int> s(t.begin() + 1, t.end());
    terms.push_back({tuple_index(s, n), 1, t[0]});
    for (int i = 0; i + 1 < q; ++i) {
        std::vector<int> m;
        for (int j = 0; j < q; ++j) {
            if (j == i) { m.push_back(G.mul(t[i], t[i + 1])); ++j; }
            else m.push_back(t[j]);
        }
        terms.push_back({tuple_index(m, n), (i + 1) % 2 ? -1 : 1, 0});
    }
    std::vector<int> last(t.begin(), t.end() - 1);
    terms.push_back({tuple_index(last, n), q % 2 ? -1 : 1, 0});
    return terms;
}

}  // namespace

IntMatrix differential_matrix(const GAction& S, int p) {
    const FiniteGroup& G = S.group();
    const int d = S.module().dim();
    const int n = G.order();
    const int64_t ns = normalized_count(n, p), nt = normalized_count(n, p + 1);
    IntMatrix M(int(checked_mul(nt, d)), int(checked_mul(ns, d)));
    Vec tmod = cochain_moduli(S, p + 1);
    for (int64_t ti = 0; ti < nt; ++ti) {
        auto t = tuple_at(ti, n, p + 1);
        for (const Term& term : bar_terms(G, t)) {
            if (term.src < 0) continue;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    int64_t v = term.act ? S.matrix(term.act)[i][j] : (i == j);
                    if (v == 0) continue;
                    int64_t& e = M(int(ti * d + i), int(term.src * d + j));
                    e = checked_add(e, term.sign * v);
                }
        }
    }
    for (int r = 0; r < M.rows; ++r)
        if (tmod[r] > 0)
            for (int c = 0; c < M.cols; ++c) M(r, c) = mod_floor(M(r, c), tmod[r]);
    return M;
}

Cochain differential(const Cochain& f) {
    const GAction& S = f.action();
    const FiniteGroup& G = S.group();
    const AbelianGroup& A = S.module();
    Cochain out(f.action_ptr(), f.degree() + 1);
    for (int64_t ti = 0; ti < out.size(); ++ti) {
        auto t = tuple_at(ti, G.order(), f.degree() + 1);
        Vec acc = A.zero();
        for (const Term& term : bar_terms(G, t)) {
            if (term.src < 0) continue;
            Vec v = f.at_index(term.src);
            if (term.act) v = S.apply(term.act, v);
            acc = term.sign > 0 ? A.add(acc, v) : A.sub(acc, v);
        }
        out.set_index(ti, acc);
    }
    return out;
}

bool is_cocycle(const Cochain& f) { return differential(f).is_zero(); }

CoboundaryCheck is_coboundary(const Cochain& f) {
    CoboundaryCheck r;
    r.cocycle = is_cocycle(f);
    if (!r.cocycle) return r;
    const int p = f.degree();
    if (p == 0) {
        if (f.is_zero()) r.witness = f;
        return r;
    }
    IntMatrix D = differential_matrix(f.action(), p - 1);
    auto x = solve(D, f.flat(), cochain_moduli(f.action(), p - 1), cochain_moduli(f.action(), p));
    if (x) r.witness = Cochain::from_flat(f.action_ptr(), p - 1, std::move(*x));
    return r;
}

int64_t CohomologyResult::order() const {
    int64_t n = 1;
    for (int64_t d : invariant_factors) {
        if (d == 0) return -1;
        n = checked_mul(n, d);
    }
    return n;
}

Vec CohomologyResult::class_of(const Cochain& z) const {
    if (!action) throw InputError("cohomology result carries no presentation");
    return structure.coords(z.flat());
}

Cochain CohomologyResult::representative(const Vec& coords) const {
    if (!action) throw InputError("cohomology result carries no presentation");
    return Cochain::from_flat(action, degree, structure.lift(coords));
}

CohomologyResult cohomology(std::shared_ptr<const GAction> S, int p, int max_degree) {
    if (p < 0 || p > max_degree)
        throw InputError("degree " + std::to_string(p) + " outside 0.." + std::to_string(max_degree));
    Vec mod = cochain_moduli(*S, p);
    IntMatrix Dp = differential_matrix(*S, p);
    Echelon Z = kernel_lattice(Dp, mod, cochain_moduli(*S, p + 1));
    Echelon B = p == 0 ? echelon({}, mod) : image_lattice(differential_matrix(*S, p - 1), mod);
    CohomologyResult r;
    r.degree = p;
    r.action = S;
    r.structure = Subquotient(Z, B);
    r.invariant_factors = r.structure.invariants();
    for (const auto& g : r.structure.generators()) r.generators.push_back(Cochain::from_flat(S, p, g));
    return r;
}

namespace {

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> ps;
    for (int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            ps.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

int ilog(int64_t x, int64_t q) {
    int k = 0;
    while (x > 1) { x /= q; ++k; }
    return k;
}

}  // namespace

Vec invariants_from_torsion_counts(int64_t order, const std::function<int64_t(int64_t)>& killed_by) {
    // exponents of the cyclic q-parts, largest first, per prime
    std::vector<std::vector<int64_t>> parts;
    for (int64_t q : prime_factors(order)) {
        int a = 0;
        for (int64_t x = order; x % q == 0; x /= q) ++a;
        std::vector<int> s(a + 2, 0);
        int64_t qj = 1;
        for (int j = 0; j <= a + 1; ++j) {
            s[j] = ilog(killed_by(qj), q);
            if (j <= a) qj *= q;
        }
        std::vector<int64_t> powers;
        for (int j = a; j >= 1; --j) {
            int atleast_j = s[j] - s[j - 1];
            int atleast_j1 = j + 1 <= a + 1 ? s[j + 1] - s[j] : 0;
            int64_t qpow = 1;
            for (int i = 0; i < j; ++i) qpow *= q;
            for (int c = 0; c < atleast_j - atleast_j1; ++c) powers.push_back(qpow);
        }
        parts.push_back(powers);
    }
    size_t len = 0;
    for (const auto& p : parts) len = std::max(len, p.size());
    Vec inv(len, 1);
    for (const auto& p : parts)
        for (size_t i = 0; i < p.size(); ++i) inv[i] *= p[i];
    std::reverse(inv.begin(), inv.end());
    return inv;
}

CohomologyResult brute_force_oracle(std::shared_ptr<const GAction> S, int p, int64_t bound) {
    const FiniteGroup& G = S->group();
    const AbelianGroup& A = S->module();
    if (!A.finite()) throw InputError("enumeration oracle needs a finite coefficient module");
    if (p < 0) throw InputError("degree must be nonnegative");
    const int n = G.order();
    const int64_t asz = A.order();
    if (asz > 65535) throw ResourceError("coefficient module too large for enumeration");

    // element-index arithmetic tables
    std::vector<int> add(size_t(asz * asz)), act(size_t(n * asz));
    for (int64_t a = 0; a < asz; ++a) {
        Vec va = A.element(a);
        for (int64_t b = 0; b < asz; ++b) add[a * asz + b] = int(A.index(A.add(va, A.element(b))));
        for (int g = 0; g < n; ++g) act[g * asz + a] = int(A.index(S->apply(g, va)));
    }
    std::vector<int> neg(asz);
    for (int64_t a = 0; a < asz; ++a)
        for (int64_t b = 0; b < asz; ++b)
            if (add[a * asz + b] == 0) neg[a] = int(b);
    using Table = std::vector<uint16_t>;
    auto key_of = [](const Table& t) {
        return std::string(reinterpret_cast<const char*>(t.data()), t.size() * sizeof(uint16_t));
    };

    // value of the bar differential of an index-valued cochain at one tuple
    const int64_t nv = normalized_count(n, p), nc = normalized_count(n, p + 1);
    auto eval_terms = [&](const std::vector<Term>& terms, const auto& val) {
        int acc = 0;
        for (const auto& t : terms) {
            if (t.src < 0) continue;
            int v = val(t.src);
            if (t.act) v = act[t.act * asz + v];
            acc = add[acc * asz + (t.sign > 0 ? v : neg[v])];
        }
        return acc;
    };

    // coboundaries: image of every (p-1)-cochain, enumerated as a mixed-radix
    // counter over the normalized (p-1)-tuples
    std::unordered_set<std::string> B;
    if (p == 0) {
        B.insert(key_of(Table(1, 0)));
    } else {
        const int64_t m = normalized_count(n, p - 1);
        int64_t total = 1;
        for (int64_t i = 0; i < m; ++i) {
            total = checked_mul(total, asz);
            if (total > bound) throw ResourceError("coboundary enumeration exceeds bound");
        }
        std::vector<std::vector<Term>> terms(nv);
        for (int64_t ti = 0; ti < nv; ++ti) terms[ti] = bar_terms(G, tuple_at(ti, n, p));
        std::vector<int64_t> digit(m, 0);
        Table img(nv);
        auto val = [&](int64_t i) { return int(digit[i]); };
        for (int64_t it = 0; it < total; ++it) {
            for (int64_t ti = 0; ti < nv; ++ti) img[ti] = uint16_t(eval_terms(terms[ti], val));
            B.insert(key_of(img));
            for (int64_t i = 0; i < m; ++i) {
                if (++digit[i] < asz) break;
                digit[i] = 0;
            }
        }
    }

    // cocycles by backtracking; each (p+1)-tuple constraint is checked when
    // the last variable it touches is assigned
    std::vector<Table> cocycles;
    if (p == 0) {
        for (int64_t a = 0; a < asz; ++a) {
            bool fixed = true;
            for (int g = 1; g < n && fixed; ++g) fixed = act[g * asz + a] == a;
            if (fixed) cocycles.push_back(Table(1, uint16_t(a)));
        }
    } else {
        std::vector<std::vector<Term>> cons(nc);
        std::vector<std::vector<int64_t>> due(nv);
        for (int64_t ci = 0; ci < nc; ++ci) {
            cons[ci] = bar_terms(G, tuple_at(ci, n, p + 1));
            int64_t last = -1;
            for (const auto& t : cons[ci]) last = std::max(last, t.src);
            if (last >= 0) due[last].push_back(ci);
        }
        Table val(nv, 0);
        auto get = [&](int64_t i) { return int(val[i]); };
        int64_t nodes = 0;
        std::function<void(int64_t)> rec = [&](int64_t i) {
            if (++nodes > bound * 16) throw ResourceError("cocycle enumeration exceeds bound");
            if (i == nv) {
                cocycles.push_back(val);
                return;
            }
            for (int64_t a = 0; a < asz; ++a) {
                val[i] = uint16_t(a);
                bool good = true;
                for (int64_t ci : due[i])
                    if (eval_terms(cons[ci], get) != 0) { good = false; break; }
                if (good) rec(i + 1);
            }
            val[i] = 0;
        };
        rec(0);
    }

    // H = Z/B: coset representatives, then torsion counts
    std::vector<Table> bvecs;
    bvecs.reserve(B.size());
    for (const auto& k : B) {
        Table t(k.size() / sizeof(uint16_t));
        std::copy_n(k.data(), k.size(), reinterpret_cast<char*>(t.data()));
        bvecs.push_back(std::move(t));
    }
    std::unordered_set<std::string> covered;
    std::vector<Table> reps;
    for (const auto& z : cocycles) {
        if (covered.count(key_of(z))) continue;
        reps.push_back(z);
        Table w(z.size());
        for (const auto& b : bvecs) {
            for (size_t i = 0; i < z.size(); ++i) w[i] = uint16_t(add[z[i] * asz + b[i]]);
            covered.insert(key_of(w));
        }
    }
    if (int64_t(reps.size()) * int64_t(B.size()) != int64_t(cocycles.size()))
        throw std::logic_error("coboundaries are not contained in the cocycles");
    auto killed_by = [&](int64_t k) {
        int64_t c = 0;
        for (const auto& z : reps) {
            Table w(z.size(), 0);
            for (size_t i = 0; i < z.size(); ++i)
                for (int64_t j = 0; j < k % asz; ++j) w[i] = uint16_t(add[w[i] * asz + z[i]]);
            c += B.count(key_of(w)) ? 1 : 0;
        }
        return c;
    };
    CohomologyResult r;
    r.degree = p;
    r.invariant_factors = invariants_from_torsion_counts(int64_t(reps.size()), killed_by);
    return r;
}

BasepointedCochain::BasepointedCochain(FiniteGroup G, AbelianGroup A, int n)
    : group(std::move(G)), module(std::move(A)), degree(n) {
    if (n < 0) throw InputError("degree must be nonnegative");
    int64_t sz = 1;
    for (int i = 0; i <= n; ++i) sz = checked_mul(sz, group.order());
    table.assign(size_t(sz), module.zero());
}

int64_t BasepointedCochain::index(int g, const std::vector<int>& args) const {
    int64_t idx = g;
    for (int a : args) idx = idx * group.order() + a;
    return idx;
}

bool BasepointedCochain::is_zero() const {
    return std::all_of(table.begin(), table.end(), [](const Vec& v) { return cocycle::is_zero(v); });
}

BasepointedCochain basepointed_delta(const BasepointedCochain& d) {
    const FiniteGroup& G = d.group;
    const AbelianGroup& A = d.module;
    const int n = d.degree + 1;
    BasepointedCochain out(G, A, n);
    const int ord = G.order();
    std::vector<int> args(n, 0);
    for (int64_t idx = 0; idx < int64_t(out.table.size()); ++idx) {
        int64_t r = idx;
        for (int i = n - 1; i >= 0; --i) { args[i] = int(r % ord); r /= ord; }
        int g = int(r);
        Vec acc = A.zero();
        for (int k = 1; k <= n - 1; ++k) {
            std::vector<int> m;
            for (int j = 0; j < n; ++j) {
                if (j == k - 1) { m.push_back(G.mul(args[j], args[j + 1])); ++j; }
                else m.push_back(args[j]);
            }
            acc = k % 2 ? A.sub(acc, d.at(g, m)) : A.add(acc, d.at(g, m));
        }
        if (n >= 1) {
            std::vector<int> tail(args.begin() + 1, args.end());
            acc = A.add(acc, d.at(G.mul(g, args[0]), tail));
            std::vector<int> head(args.begin(), args.end() - 1);
            acc = n % 2 ? A.sub(acc, d.at(g, head)) : A.add(acc, d.at(g, head));
        }
        out.table[idx] = acc;
    }
    return out;
}

BasepointedCochain triviality_witness(const BasepointedCochain& c) {
    if (c.degree < 1) throw InputError("witness needs degree at least 1");
    if (!basepointed_delta(c).is_zero()) throw InputError("input is not a base-pointed cocycle");
    BasepointedCochain d(c.group, c.module, c.degree - 1);
    const int ord = c.group.order();
    std::vector<int> args(c.degree - 1);
    for (int64_t idx = 0; idx < int64_t(d.table.size()); ++idx) {
        int64_t r = idx;
        for (int i = c.degree - 2; i >= 0; --i) { args[i] = int(r % ord); r /= ord; }
        std::vector<int> full{int(r)};
        full.insert(full.end(), args.begin(), args.end());
        d.table[idx] = c.at(0, full);
    }
    return d;
}

}  // namespace cocycle
