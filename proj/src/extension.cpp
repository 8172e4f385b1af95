#include "cocycle/extension.hpp"

#include <algorithm>
#include <deque>

namespace cocycle {

namespace {

std::string tuple_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

bool is_automorphism(const FiniteGroup& N, const Perm& p) {
    if (int(p.size()) != N.order()) return false;
    std::vector<char> hit(N.order(), 0);
    for (int x : p) {
        if (x < 0 || x >= N.order() || hit[x]) return false;
        hit[x] = 1;
    }
    for (int a = 0; a < N.order(); ++a)
        for (int b = 0; b < N.order(); ++b)
            if (p[N.mul(a, b)] != N.mul(p[a], p[b])) return false;
    return true;
}

}  // namespace

std::optional<FactorSystemViolation> check_factor_system(const FactorSystem& fs) {
    const FiniteGroup& G = fs.G;
    const FiniteGroup& N = fs.N;
    const int ng = G.order();
    if (int(fs.S.size()) != ng || int(fs.omega.size()) != ng)
        return FactorSystemViolation{"shape", {}, "factor system tables do not match the base group"};
    for (int g = 0; g < ng; ++g) {
        if (!is_automorphism(N, fs.S[g]))
            return FactorSystemViolation{"automorphism", {g}, "S(" + std::to_string(g) + ") is not an automorphism"};
        if (int(fs.omega[g].size()) != ng)
            return FactorSystemViolation{"shape", {g}, "omega row has wrong length"};
    }
    for (int n = 0; n < N.order(); ++n)
        if (fs.S[0][n] != n) return FactorSystemViolation{"normalized", {0}, "S(1) is not the identity"};
    for (int g = 0; g < ng; ++g)
        if (fs.omega[0][g] != 0 || fs.omega[g][0] != 0)
            return FactorSystemViolation{"normalized", {g}, "omega is not normalized at " + std::to_string(g)};
    // delta_S(g,g') = C_N(omega(g,g'))
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            int w = fs.omega[g][h], gh = G.mul(g, h);
            for (int n = 0; n < N.order(); ++n) {
                // S(g)S(h)(m) with m = S(gh)^{-1}(n)
                int m = int(std::find(fs.S[gh].begin(), fs.S[gh].end(), n) - fs.S[gh].begin());
                if (fs.S[g][fs.S[h][m]] != N.conj(w, n))
                    return FactorSystemViolation{"delta_S", {g, h},
                                                 "S(g)S(g')S(gg')^-1 != C(omega(g,g')) at " + tuple_str({g, h})};
            }
        }
    // S(g)(omega(g',g'')) omega(g,g'g'') = omega(g,g') omega(gg',g'')
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int k = 0; k < ng; ++k) {
                int lhs = N.mul(fs.S[g][fs.omega[h][k]], fs.omega[g][G.mul(h, k)]);
                int rhs = N.mul(fs.omega[g][h], fs.omega[G.mul(g, h)][k]);
                if (lhs != rhs)
                    return FactorSystemViolation{"d_S omega", {g, h, k}, "d_S omega != 1 at " + tuple_str({g, h, k})};
            }
    return std::nullopt;
}

Table2 extension_table(const FactorSystem& fs) {
    const int nn = fs.N.order(), ng = fs.G.order(), n = nn * ng;
    Table2 t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int a = x % nn, g = x / nn, b = y % nn, h = y / nn;
            int m = fs.N.mul(fs.N.mul(a, fs.S[g][b]), fs.omega[g][h]);
            t[x][y] = m + nn * fs.G.mul(g, h);
        }
    return t;
}

ExtensionGroup build_extension(const FactorSystem& fs) {
    if (auto v = check_factor_system(fs)) throw InputError(v->message);
    ExtensionGroup E;
    E.fs = fs;
    std::vector<std::string> labels;
    for (int g = 0; g < fs.G.order(); ++g)
        for (int n = 0; n < fs.N.order(); ++n) labels.push_back("(" + fs.N.label(n) + "," + fs.G.label(g) + ")");
    E.E = FiniteGroup(extension_table(fs), labels);
    return E;
}

Table2 section_cocycle(const ExtensionGroup& E, const std::vector<int>& sigma) {
    const int ng = E.fs.G.order();
    if (int(sigma.size()) != ng) throw InputError("section has wrong length");
    for (int g = 0; g < ng; ++g)
        if (E.base(sigma[g]) != g) throw InputError("not a section: q(sigma(" + std::to_string(g) + ")) != " + std::to_string(g));
    if (sigma[0] != 0) throw InputError("section is not normalized");
    Table2 w(ng, std::vector<int>(ng));
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            w[g][h] = E.fiber(E.E.mul(E.E.mul(sigma[g], sigma[h]), E.E.inv(sigma[E.fs.G.mul(g, h)])));
    return w;
}

FiniteGroup group_of(const AbelianGroup& A) {
    const int64_t n = A.order();
    Table2 t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int64_t a = 0; a < n; ++a) {
        Vec va = A.element(a);
        std::string l;
        for (size_t i = 0; i < va.size(); ++i) l += (i ? "," : "") + std::to_string(va[i]);
        labels.push_back(va.size() == 1 ? l : "(" + l + ")");
        for (int64_t b = 0; b < n; ++b) t[a][b] = int(A.index(A.add(va, A.element(b))));
    }
    return FiniteGroup(t, labels);
}

std::vector<Perm> perms_of(const GAction& S) {
    const AbelianGroup& A = S.module();
    std::vector<Perm> out;
    for (int g = 0; g < S.group().order(); ++g) {
        Perm p(A.order());
        for (int64_t a = 0; a < A.order(); ++a) p[a] = int(A.index(S.apply(g, A.element(a))));
        out.push_back(std::move(p));
    }
    return out;
}

GAction action_of(const FiniteGroup& G, const AbelianGroup& A, const std::vector<Perm>& perms) {
    const int d = A.dim();
    std::vector<IntMat> mats;
    for (int g = 0; g < G.order(); ++g) {
        IntMat M(d, Vec(d, 0));
        for (int j = 0; j < d; ++j) {
            Vec e(d, 0);
            e[j] = 1;
            Vec img = A.element(perms[g][A.index(e)]);
            for (int i = 0; i < d; ++i) M[i][j] = img[i];
        }
        mats.push_back(std::move(M));
    }
    GAction S(G, A, mats);
    if (perms_of(S) != perms) throw InputError("permutations do not define a linear action");
    return S;
}

Cochain cochain_of(std::shared_ptr<const GAction> S, const Table2& omega) {
    Cochain f(S, 2);
    const AbelianGroup& A = S->module();
    for (int g = 1; g < S->group().order(); ++g)
        for (int h = 1; h < S->group().order(); ++h) f.set({g, h}, A.element(omega[g][h]));
    return f;
}

Table2 table_of(const Cochain& f) {
    const int n = f.group().order();
    Table2 t(n, std::vector<int>(n, 0));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) t[g][h] = int(f.module().index(f.at({g, h})));
    return t;
}

FactorSystem abelian_factor_system(const GAction& S, const Cochain& f) {
    FactorSystem fs;
    fs.G = S.group();
    fs.N = group_of(S.module());
    fs.S = perms_of(S);
    fs.omega = table_of(f);
    return fs;
}

std::optional<Cochain> equivalence_test(const ExtensionGroup& E1, const ExtensionGroup& E2) {
    if (!(E1.fs.G == E2.fs.G)) throw InputError("extensions have different base groups");
    if (!(E1.fs.N == E2.fs.N)) throw InputError("extensions have different fibers");
    if (E1.fs.S != E2.fs.S) throw InputError("extensions induce different actions");
    AbelianStructure st = abelian_structure(E1.fs.N);
    const FiniteGroup& G = E1.fs.G;
    const int d = st.A.dim();
    std::vector<IntMat> mats;
    for (int g = 0; g < G.order(); ++g) {
        IntMat M(d, Vec(d, 0));
        for (int j = 0; j < d; ++j) {
            Vec e(d, 0);
            e[j] = 1;
            Vec img = st.coords[E1.fs.S[g][st.element_of(e)]];
            for (int i = 0; i < d; ++i) M[i][j] = img[i];
        }
        mats.push_back(std::move(M));
    }
    auto S = std::make_shared<const GAction>(G, st.A, mats);
    Cochain f(S, 2);
    for (int g = 1; g < G.order(); ++g)
        for (int h = 1; h < G.order(); ++h)
            f.set({g, h}, st.A.sub(st.coords[E2.fs.omega[g][h]], st.coords[E1.fs.omega[g][h]]));
    return is_coboundary(f).witness;
}

std::optional<GAction> random_action(const FiniteGroup& G, const AbelianGroup& A, std::mt19937_64& rng,
                                     int attempts) {
    auto auts = module_automorphisms(A);
    auto gens = G.generators();
    const int d = A.dim();
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<IntMat> img;
        for (size_t k = 0; k < gens.size(); ++k) img.push_back(auts[rng() % auts.size()]);
        std::vector<IntMat> mats(G.order());
        std::vector<char> set(G.order(), 0);
        mats[0] = identity_matrix(d);
        set[0] = 1;
        std::deque<int> q{0};
        bool ok = true;
        while (!q.empty() && ok) {
            int x = q.front();
            q.pop_front();
            for (size_t k = 0; k < gens.size(); ++k) {
                int y = G.mul(x, gens[k]);
                IntMat m = matmul(mats[x], img[k], A.moduli());
                if (!set[y]) { mats[y] = m; set[y] = 1; q.push_back(y); }
                else if (mats[y] != m) { ok = false; break; }
            }
        }
        if (!ok) continue;
        GAction S(G, A, mats);
        if (!S.check()) return S;
    }
    return std::nullopt;
}

namespace {

FiniteGroup pick_group(std::mt19937_64& rng, const std::vector<FiniteGroup>& pool) { return pool[rng() % pool.size()]; }

FactorSystem from_group_extension(std::mt19937_64& rng, int max_order) {
    static const std::vector<FiniteGroup> pool = {
        make_cyclic(4), make_product(make_cyclic(2), make_cyclic(2)), make_cyclic(6), make_dihedral(3),
        make_cyclic(8), make_product(make_cyclic(2), make_cyclic(4)), make_dihedral(4), make_quaternion(),
        make_cyclic(9), make_product(make_cyclic(3), make_cyclic(3)), make_dihedral(6), make_cyclic(12),
        make_product(make_dihedral(3), make_cyclic(2)), make_product(make_dihedral(3), make_cyclic(3))};
    for (;;) {
        FiniteGroup E = pick_group(rng, pool);
        std::vector<std::vector<int>> cands;
        for (const auto& N : normal_subgroups(E)) {
            int k = int(N.size());
            if (k <= max_order && E.order() / k <= max_order) cands.push_back(N);
        }
        if (cands.empty()) continue;
        const auto& Nel = cands[rng() % cands.size()];
        Subgroup N = make_subgroup(E, Nel);
        Quotient q = quotient(E, Nel);
        const int ng = q.H.order();
        std::vector<int> sigma(ng);
        for (int g = 0; g < ng; ++g)
            sigma[g] = g == 0 ? 0 : E.mul(Nel[rng() % Nel.size()], q.section[g]);
        FactorSystem fs;
        fs.G = q.H;
        fs.N = N.group;
        fs.S.assign(ng, Perm(Nel.size()));
        fs.omega.assign(ng, std::vector<int>(ng));
        for (int g = 0; g < ng; ++g)
            for (size_t n = 0; n < Nel.size(); ++n) fs.S[g][n] = N.index_of[E.conj(sigma[g], Nel[n])];
        for (int g = 0; g < ng; ++g)
            for (int h = 0; h < ng; ++h)
                fs.omega[g][h] = N.index_of[E.mul(E.mul(sigma[g], sigma[h]), E.inv(sigma[q.H.mul(g, h)]))];
        return fs;
    }
}

FactorSystem from_abelian_cocycle(std::mt19937_64& rng, int max_order) {
    static const std::vector<FiniteGroup> gpool = {make_cyclic(1), make_cyclic(2), make_cyclic(3), make_cyclic(4),
                                                   make_cyclic(5), make_cyclic(6),
                                                   make_product(make_cyclic(2), make_cyclic(2)), make_dihedral(3)};
    static const std::vector<AbelianGroup> apool = {AbelianGroup::cyclic(2), AbelianGroup::cyclic(3),
                                                    AbelianGroup::cyclic(4), AbelianGroup::cyclic(5),
                                                    AbelianGroup::cyclic(6), AbelianGroup(0, {2, 2})};
    for (;;) {
        FiniteGroup G = pick_group(rng, gpool);
        AbelianGroup A = apool[rng() % apool.size()];
        if (G.order() > max_order || A.order() > max_order) continue;
        auto act = rng() % 3 == 0 ? std::optional<GAction>(GAction::trivial(G, A)) : random_action(G, A, rng);
        if (!act) continue;
        auto S = std::make_shared<const GAction>(*act);
        Cochain h(S, 1);
        for (int64_t i = 0; i < h.size(); ++i) h.set_index(i, A.element(int64_t(rng() % A.order())));
        Cochain f = differential(h);
        auto H2 = cohomology(S, 2);
        for (const auto& gen : H2.generators) {
            int64_t k = int64_t(rng() % 12);
            for (int64_t i = 0; i < k; ++i) f = f + gen;
        }
        return abelian_factor_system(*S, f);
    }
}

}  // namespace

FactorSystem random_valid_factor_system(std::mt19937_64& rng, int max_order) {
    return rng() % 2 ? from_group_extension(rng, max_order) : from_abelian_cocycle(rng, max_order);
}

FactorSystemSample random_factor_system(std::mt19937_64& rng, int max_order) {
    FactorSystemSample s;
    s.fs = random_valid_factor_system(rng, max_order);
    const int ng = s.fs.G.order(), nn = s.fs.N.order();
    if (rng() % 2 == 0 && ng > 1 && nn > 1) {
        auto auts = automorphisms(s.fs.N);
        if (rng() % 2 == 0 || auts.size() < 2) {
            int g = 1 + int(rng() % (ng - 1)), h = 1 + int(rng() % (ng - 1));
            s.fs.omega[g][h] = (s.fs.omega[g][h] + 1 + int(rng() % (nn - 1))) % nn;
        } else {
            int g = 1 + int(rng() % (ng - 1));
            Perm p;
            do p = auts[rng() % auts.size()];
            while (p == s.fs.S[g]);
            s.fs.S[g] = p;
        }
    }
    s.valid = !check_factor_system(s.fs).has_value();
    return s;
}

}  // namespace cocycle
