#include "cocycle/lifting.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cocycle {

LiftingInstance make_lifting_instance(const FiniteGroup& G, const std::vector<int>& N,
                                      std::shared_ptr<const GAction> S, const Cochain& f) {
    if (!is_subgroup(G, N)) throw InputError("not a subgroup");
    if (!is_normal(G, N)) throw InputError("not normal");
    if (!(S->group() == G)) throw InputError("action is over a different group");
    if (auto err = S->check()) throw InputError(*err);
    if (!S->module().finite()) throw InputError("lifting needs a finite coefficient module");
    LiftingInstance inst;
    inst.G = G;
    inst.N = make_subgroup(G, N);
    inst.S = S;
    inst.SN = std::make_shared<const GAction>(S->restrict_to(inst.N));
    if (f.degree() != 2 || !(f.group() == inst.N.group)) throw InputError("f must be a 2-cochain on N");
    inst.f = Cochain::from_flat(inst.SN, 2, f.flat());
    if (!is_cocycle(inst.f)) throw InputError("f is not a cocycle");
    inst.hat = build_extension(abelian_factor_system(*inst.SN, inst.f));
    return inst;
}

LiftingInstance make_lifting_instance(const FiniteGroup& G, const std::vector<int>& N,
                                      std::shared_ptr<const GAction> S, const Table2& f_values) {
    Subgroup sub = make_subgroup(G, N);
    auto SN = std::make_shared<const GAction>(S->restrict_to(sub));
    return make_lifting_instance(G, N, S, cochain_of(SN, f_values));
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
    return r;
}

std::optional<FiberedAutomorphism> fibered(const ExtensionGroup& hat, const Perm& perm) {
    const FiniteGroup& E = hat.E;
    const int n = E.order();
    if (int(perm.size()) != n) return std::nullopt;
    std::vector<char> hit(n, 0);
    for (int x : perm) {
        if (x < 0 || x >= n || hit[x]) return std::nullopt;
        hit[x] = 1;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (perm[E.mul(x, y)] != E.mul(perm[x], perm[y])) return std::nullopt;
    FiberedAutomorphism f;
    f.perm = perm;
    const int na = hat.fs.N.order(), nn = hat.fs.G.order();
    for (int a = 0; a < na; ++a) {
        int img = perm[hat.index(a, 0)];
        if (hat.base(img) != 0) return std::nullopt;
        f.phi_A.push_back(hat.fiber(img));
    }
    for (int m = 0; m < nn; ++m) f.phi_N.push_back(hat.base(perm[hat.index(0, m)]));
    return f;
}

FiberedAutomorphism psi_embed(const LiftingInstance& inst, const Cochain& f1) {
    if (f1.degree() != 1 || !is_cocycle(f1)) throw InputError("f1 is not a 1-cocycle");
    const AbelianGroup& A = inst.A();
    const ExtensionGroup& hat = inst.hat;
    Perm p(hat.E.order());
    for (int a = 0; a < A.order(); ++a)
        for (int n = 0; n < inst.N.group.order(); ++n)
            p[hat.index(a, n)] = hat.index(int(A.index(A.add(A.element(a), f1.at({n})))), n);
    auto r = fibered(hat, p);
    if (!r) throw std::logic_error("Psi(f1) is not an automorphism");
    return *r;
}

PairAction pair_action(const GAction& SN, const Cochain& f, const Perm& phi_A, const Perm& phi_N) {
    const FiniteGroup& N = SN.group();
    const AbelianGroup& A = SN.module();
    Perm inv_A = inverse(phi_A), inv_N = inverse(phi_N);
    auto P = perms_of(SN);
    std::vector<Perm> Q(N.order());
    for (int n = 0; n < N.order(); ++n) Q[n] = compose(phi_A, compose(P[inv_N[n]], inv_A));
    PairAction r;
    r.S = std::make_shared<const GAction>(action_of(N, A, Q));
    r.f = Cochain(r.S, 2);
    for (int m = 1; m < N.order(); ++m)
        for (int k = 1; k < N.order(); ++k)
            r.f.set({m, k}, A.element(phi_A[A.index(f.at({inv_N[m], inv_N[k]}))]));
    return r;
}

ImageTest in_image_phi(const LiftingInstance& inst, const Perm& phi_A, const Perm& phi_N) {
    ImageTest t;
    PairAction pa = pair_action(*inst.SN, inst.f, phi_A, phi_N);
    t.action_matches = perms_of(*pa.S) == perms_of(*inst.SN);
    if (!t.action_matches) return t;
    Cochain diff = Cochain::from_flat(inst.SN, 2, pa.f.flat()) - inst.f;
    t.h = is_coboundary(diff).witness;
    if (!t.h) return t;
    const AbelianGroup& A = inst.A();
    const ExtensionGroup& hat = inst.hat;
    Perm p(hat.E.order());
    for (int a = 0; a < A.order(); ++a)
        for (int n = 0; n < inst.N.group.order(); ++n) {
            int m = phi_N[n];
            Vec v = A.add(A.element(phi_A[a]), t.h->at({m}));
            p[hat.index(a, n)] = hat.index(int(A.index(v)), m);
        }
    t.lift = fibered(hat, p);
    if (!t.lift) throw std::logic_error("constructed lift is not a fibered automorphism");
    return t;
}

Cochain act_on_cochain(const LiftingInstance& inst, int g, const Cochain& c) {
    const int gi = inst.G.inv(g);
    Cochain out(c.action_ptr(), c.degree());
    for (int64_t i = 0; i < out.size(); ++i) {
        auto t = tuple_at(i, inst.N.group.order(), c.degree());
        std::vector<int> s;
        for (int n : t) s.push_back(inst.conj(gi, n));
        out.set_index(i, inst.S->apply(g, c.at(s)));
    }
    return out;
}

std::optional<Witness> invariance_witness(const LiftingInstance& inst) {
    Witness theta(inst.G.order(), Cochain(inst.SN, 1));
    for (int g = 1; g < inst.G.order(); ++g) {
        auto w = is_coboundary(act_on_cochain(inst, g, inst.f) - inst.f).witness;
        if (!w) return std::nullopt;
        theta[g] = *w;
    }
    return theta;
}

bool is_witness(const LiftingInstance& inst, const Witness& theta) {
    if (int(theta.size()) != inst.G.order() || !theta[0].is_zero()) return false;
    for (int g = 0; g < inst.G.order(); ++g)
        if (!(differential(theta[g]) == act_on_cochain(inst, g, inst.f) - inst.f)) return false;
    return true;
}

Cochain Z1Module::embed(const LiftingInstance& inst, const Vec& c) const {
    return Cochain::from_flat(inst.SN, 1, structure.lift(c));
}

Z1Module z1_module(const LiftingInstance& inst) {
    Vec m1 = cochain_moduli(*inst.SN, 1), m2 = cochain_moduli(*inst.SN, 2);
    Echelon ker = kernel_lattice(differential_matrix(*inst.SN, 1), m1, m2);
    Z1Module Z;
    Z.structure = Subquotient(ker, echelon({}, m1));
    AbelianGroup grp = AbelianGroup::from_invariants(Z.structure.invariants());
    const int d = grp.dim();
    std::vector<IntMat> mats;
    for (int g = 0; g < inst.G.order(); ++g) {
        IntMat M(d, Vec(d, 0));
        for (int j = 0; j < d; ++j) {
            Vec e(d, 0);
            e[j] = 1;
            Cochain h = Cochain::from_flat(inst.SN, 1, Z.structure.lift(e));
            Vec img = Z.structure.coords(act_on_cochain(inst, g, h).flat());
            for (int i = 0; i < d; ++i) M[i][j] = img[i];
        }
        mats.push_back(std::move(M));
    }
    Z.action = std::make_shared<const GAction>(inst.G, grp, mats);
    if (auto err = Z.action->check()) throw std::logic_error("Z1 action: " + *err);
    return Z;
}

Cochain witness_differential(const LiftingInstance& inst, const Witness& theta, int g, int h) {
    return act_on_cochain(inst, g, theta[h]) - theta[inst.G.mul(g, h)] + theta[g];
}

namespace {

Perm lift_perm(const LiftingInstance& inst, const Witness& theta, int g) {
    const AbelianGroup& A = inst.A();
    const ExtensionGroup& hat = inst.hat;
    Perm p(hat.E.order());
    for (int a = 0; a < A.order(); ++a)
        for (int n = 0; n < inst.N.group.order(); ++n) {
            int m = inst.conj(g, n);
            Vec v = A.add(inst.S->apply(g, A.element(a)), theta[g].at({m}));
            p[hat.index(a, n)] = hat.index(int(A.index(v)), m);
        }
    return p;
}

}  // namespace

Perm lift_inverse(const LiftingInstance& inst, const Witness& theta, int g) {
    const AbelianGroup& A = inst.A();
    const ExtensionGroup& hat = inst.hat;
    const int gi = inst.G.inv(g);
    Perm p(hat.E.order());
    for (int a = 0; a < A.order(); ++a)
        for (int n = 0; n < inst.N.group.order(); ++n) {
            Vec v = inst.S->apply(gi, A.sub(A.element(a), theta[g].at({n})));
            p[hat.index(a, n)] = hat.index(int(A.index(v)), inst.conj(gi, n));
        }
    return p;
}

LiftedHomomorphism lift_homomorphism(const LiftingInstance& inst, const Witness& theta) {
    if (!is_witness(inst, theta)) throw InputError("theta is not an invariance witness");
    const int ng = inst.G.order();
    const AbelianGroup& A = inst.A();
    const ExtensionGroup& hat = inst.hat;
    LiftedHomomorphism L;
    for (int g = 0; g < ng; ++g) {
        auto fa = fibered(hat, lift_perm(inst, theta, g));
        if (!fa) throw std::logic_error("lifted map is not a fibered automorphism");
        L.psi.push_back(std::move(*fa));
    }
    L.homomorphism = true;
    L.defect.assign(ng, std::vector<Cochain>(ng));
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h) {
            Perm d = compose(L.psi[g].perm, compose(L.psi[h].perm, inverse(L.psi[inst.G.mul(g, h)].perm)));
            Cochain k(inst.SN, 1);
            for (int n = 1; n < inst.N.group.order(); ++n) k.set({n}, A.element(hat.fiber(d[hat.index(0, n)])));
            // d must be (a,n) -> (a + k(n), n)
            for (int a = 0; a < A.order(); ++a)
                for (int n = 0; n < inst.N.group.order(); ++n) {
                    int expect = hat.index(int(A.index(A.add(A.element(a), k.at({n})))), n);
                    if (d[hat.index(a, n)] != expect) throw std::logic_error("defect is not in the image of Psi");
                }
            if (!k.is_zero()) L.homomorphism = false;
            L.defect[g][h] = std::move(k);
        }
    return L;
}

Obstruction lifting_obstruction(const LiftingInstance& inst) {
    Obstruction ob;
    ob.theta = invariance_witness(inst);
    ob.invariant = ob.theta.has_value();
    if (!ob.invariant) return ob;
    const Witness& theta = *ob.theta;
    Z1Module Z = z1_module(inst);
    Cochain kappa(Z.action, 2);
    const int ng = inst.G.order();
    for (int g = 1; g < ng; ++g)
        for (int h = 1; h < ng; ++h) kappa.set({g, h}, Z.coords(witness_differential(inst, theta, g, h)));
    if (!is_cocycle(kappa)) throw std::logic_error("defect is not a 2-cocycle");
    auto H2 = cohomology(Z.action, 2);
    ob.h2_invariants = H2.invariant_factors;
    ob.class_coords = H2.class_of(kappa);
    ob.class_zero = is_zero(ob.class_coords);
    if (ob.class_zero) {
        auto t = is_coboundary(kappa).witness;
        if (!t) throw std::logic_error("zero class without a primitive");
        Witness corrected(ng);
        for (int g = 0; g < ng; ++g) corrected[g] = theta[g] - Z.embed(inst, t->at({g}));
        ob.corrected = std::move(corrected);
    }
    return ob;
}

std::vector<FiberedAutomorphism> fibered_automorphisms(const ExtensionGroup& hat, int max_order) {
    if (hat.E.order() > max_order) throw ResourceError("extension too large for automorphism enumeration");
    std::vector<FiberedAutomorphism> out;
    for (const auto& p : automorphisms(hat.E))
        if (auto f = fibered(hat, p)) out.push_back(std::move(*f));
    return out;
}

std::optional<std::vector<Perm>> exhaustive_lift_search(const LiftingInstance& inst, int max_order) {
    const FiniteGroup& G = inst.G;
    auto auts = fibered_automorphisms(inst.hat, max_order);
    auto SA = perms_of(*inst.S);
    std::vector<Perm> cN(G.order());
    for (int g = 0; g < G.order(); ++g)
        for (int n = 0; n < inst.N.group.order(); ++n) cN[g].push_back(inst.conj(g, n));
    auto gens = G.generators();
    std::vector<std::vector<const FiberedAutomorphism*>> cand(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        for (const auto& a : auts)
            if (a.phi_A == SA[gens[k]] && a.phi_N == cN[gens[k]]) cand[k].push_back(&a);
        if (cand[k].empty()) return std::nullopt;
    }
    Perm id(inst.hat.E.order());
    for (size_t i = 0; i < id.size(); ++i) id[i] = int(i);
    if (gens.empty()) return std::vector<Perm>{id};
    std::vector<size_t> idx(gens.size(), 0);
    for (;;) {
        std::vector<Perm> psi(G.order());
        std::vector<char> set(G.order(), 0);
        psi[0] = id;
        set[0] = 1;
        std::deque<int> q{0};
        bool ok = true;
        while (!q.empty() && ok) {
            int x = q.front();
            q.pop_front();
            for (size_t k = 0; k < gens.size() && ok; ++k) {
                int y = G.mul(x, gens[k]);
                Perm p = compose(psi[x], cand[k][idx[k]]->perm);
                if (!set[y]) { psi[y] = std::move(p); set[y] = 1; q.push_back(y); }
                else if (psi[y] != p) ok = false;
            }
        }
        if (ok) {
            for (int g = 0; g < G.order() && ok; ++g) {
                auto f = fibered(inst.hat, psi[g]);
                ok = f && f->phi_A == SA[g] && f->phi_N == cN[g];
            }
            if (ok) return psi;
        }
        size_t k = 0;
        while (k < gens.size() && ++idx[k] == cand[k].size()) idx[k++] = 0;
        if (k == gens.size()) break;
    }
    return std::nullopt;
}

std::vector<Cochain> enumerate_z1(const LiftingInstance& inst) {
    const AbelianGroup& A = inst.A();
    const int m = inst.N.group.order() - 1;
    std::vector<Cochain> out;
    std::vector<int64_t> digit(m, 0);
    Cochain h(inst.SN, 1);
    for (;;) {
        if (is_cocycle(h)) out.push_back(h);
        int k = 0;
        while (k < m && ++digit[k] == A.order()) { digit[k] = 0; h.set_index(k, A.zero()); ++k; }
        if (k == m) break;
        h.set_index(k, A.element(digit[k]));
    }
    return out;
}

Cochain random_cocycle(std::shared_ptr<const GAction> S, int p, std::mt19937_64& rng) {
    const AbelianGroup& A = S->module();
    Cochain h(S, p - 1);
    for (int64_t i = 0; i < h.size(); ++i) {
        Vec v(A.dim());
        for (auto& x : v) x = int64_t(rng() % 64) - 32;
        h.set_index(i, v);
    }
    Cochain f = p >= 1 ? differential(h) : Cochain(S, p);
    auto H = cohomology(S, p);
    for (const auto& gen : H.generators) {
        int64_t k = int64_t(rng() % 8);
        for (int64_t i = 0; i < k; ++i) f = f + gen;
    }
    return f;
}

LiftingInstance random_lifting_instance(std::mt19937_64& rng, int max_hat) {
    static const std::vector<FiniteGroup> gpool = {make_cyclic(2), make_cyclic(3), make_cyclic(4),
                                                   make_product(make_cyclic(2), make_cyclic(2))};
    static const std::vector<AbelianGroup> apool = {AbelianGroup::cyclic(2), AbelianGroup::cyclic(3),
                                                    AbelianGroup::cyclic(4), AbelianGroup(0, {2, 2})};
    for (;;) {
        const FiniteGroup& G = gpool[rng() % gpool.size()];
        const AbelianGroup& A = apool[rng() % apool.size()];
        auto normals = normal_subgroups(G);
        const auto& N = normals[rng() % normals.size()];
        if (int64_t(N.size()) * A.order() > max_hat) continue;
        auto act = rng() % 3 == 0 ? std::optional<GAction>(GAction::trivial(G, A)) : random_action(G, A, rng);
        if (!act) continue;
        auto S = std::make_shared<const GAction>(*act);
        Subgroup sub = make_subgroup(G, N);
        auto SN = std::make_shared<const GAction>(S->restrict_to(sub));
        return make_lifting_instance(G, N, S, random_cocycle(SN, 2, rng));
    }
}

LiftingInstance nonzero_obstruction_instance() {
    FiniteGroup G = make_product(make_cyclic(2), make_cyclic(2));
    AbelianGroup A = AbelianGroup::cyclic(8);
    // N = {0, 1}; elements 2 and 3 act by 3
    auto S = std::make_shared<const GAction>(G, A, std::vector<IntMat>{{{1}}, {{1}}, {{3}}, {{3}}});
    return make_lifting_instance(G, {0, 1}, S, Table2{{0, 0}, {0, 1}});
}

std::vector<LiftingInstance> small_lifting_instances(int max_hat) {
    const std::vector<FiniteGroup> groups = {make_cyclic(2), make_cyclic(3), make_cyclic(4),
                                             make_product(make_cyclic(2), make_cyclic(2))};
    const std::vector<AbelianGroup> modules = {
        AbelianGroup::cyclic(2), AbelianGroup::cyclic(3), AbelianGroup::cyclic(4), AbelianGroup(0, {2, 2}),
        AbelianGroup::cyclic(5), AbelianGroup::cyclic(6), AbelianGroup::cyclic(7), AbelianGroup::cyclic(8),
        AbelianGroup(0, {2, 4}), AbelianGroup(0, {2, 2, 2})};
    std::vector<LiftingInstance> out;
    for (const auto& G : groups)
        for (const auto& N : normal_subgroups(G))
            for (const auto& A : modules) {
                if (int64_t(N.size()) * A.order() > max_hat) continue;
                Subgroup sub = make_subgroup(G, N);
                for (auto& act : enumerate_actions(G, A)) {
                    auto S = std::make_shared<const GAction>(std::move(act));
                    auto SN = std::make_shared<const GAction>(S->restrict_to(sub));
                    auto H = cohomology(SN, 2);
                    for (int64_t c = 0; c < H.order(); ++c) {
                        Vec coords;
                        int64_t r = c;
                        for (int64_t d : H.invariant_factors) { coords.push_back(r % d); r /= d; }
                        out.push_back(make_lifting_instance(G, N, S, H.representative(coords)));
                    }
                }
            }
    return out;
}

}  // namespace cocycle
