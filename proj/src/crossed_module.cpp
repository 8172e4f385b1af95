#include "cocycle/crossed_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cocycle {

namespace {

CrossedModuleViolation violation(std::string which, std::vector<int> where, std::string message) {
    return {std::move(which), std::move(where), std::move(message)};
}

std::string tuple_text(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

bool is_perm(const Perm& p, int n) {
    if (int(p.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || hit[x]) return false;
        hit[x] = 1;
    }
    return true;
}

// Mixed-radix counter; returns false after the last state.
bool advance(std::vector<size_t>& idx, const std::vector<size_t>& radix) {
    for (size_t k = 0; k < idx.size(); ++k) {
        if (++idx[k] < radix[k]) return true;
        idx[k] = 0;
    }
    return false;
}

int64_t checked_product(const std::vector<size_t>& radix, int64_t bound) {
    int64_t total = 1;
    for (size_t r : radix) {
        if (r == 0) return 0;
        if (total > bound / int64_t(r)) throw ResourceError("enumeration bound exceeded");
        total *= int64_t(r);
    }
    return total;
}

std::vector<std::vector<int>> preimages(const CrossedModule& cm) {
    std::vector<std::vector<int>> pre(cm.G.order());
    for (int n = 0; n < cm.Nhat.order(); ++n) pre[cm.alpha[n]].push_back(n);
    return pre;
}

std::vector<std::vector<int>> cosets(const CrossedModuleData& d) {
    std::vector<std::vector<int>> out(d.H.H.order());
    for (int g = 0; g < d.cm.G.order(); ++g) out[d.H.proj[g]].push_back(g);
    return out;
}

int delta_sigma(const CrossedModuleData& d, const std::vector<int>& sigma, int x, int y) {
    const FiniteGroup& G = d.cm.G;
    return G.mul(G.mul(sigma[x], sigma[y]), G.inv(sigma[d.H.H.mul(x, y)]));
}

// Shat(sigma(x))(f(y,z)) f(x,yz) == f(x,y) f(xy,z) for all triples.
bool structural_identity(const CrossedModuleData& d, const StructuralCocycle& s, std::vector<int>* where = nullptr) {
    const FiniteGroup& H = d.H.H;
    const FiniteGroup& Nh = d.cm.Nhat;
    const int h = H.order();
    for (int x = 1; x < h; ++x)
        for (int y = 1; y < h; ++y)
            for (int z = 1; z < h; ++z) {
                int lhs = Nh.mul(d.cm.Shat[s.sigma[x]][s.f[y][z]], s.f[x][H.mul(y, z)]);
                int rhs = Nh.mul(s.f[x][y], s.f[H.mul(x, y)][z]);
                if (lhs != rhs) {
                    if (where) *where = {x, y, z};
                    return false;
                }
            }
    return true;
}

}  // namespace

std::optional<CrossedModuleViolation> check_crossed_module(const CrossedModule& cm) {
    const FiniteGroup& Nh = cm.Nhat;
    const FiniteGroup& G = cm.G;
    const int nn = Nh.order(), ng = G.order();
    if (int(cm.alpha.size()) != nn) return violation("shape", {}, "alpha must have one entry per element of Nhat");
    for (int n = 0; n < nn; ++n)
        if (cm.alpha[n] < 0 || cm.alpha[n] >= ng)
            return violation("shape", {n}, "alpha(" + std::to_string(n) + ") out of range");
    if (int(cm.Shat.size()) != ng) return violation("shape", {}, "Shat must have one entry per element of G");
    for (int g = 0; g < ng; ++g)
        if (!is_perm(cm.Shat[g], nn)) return violation("shape", {g}, "Shat(" + std::to_string(g) + ") is not a permutation");
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b)
            if (cm.alpha[Nh.mul(a, b)] != G.mul(cm.alpha[a], cm.alpha[b]))
                return violation("alpha homomorphism", {a, b}, "alpha(ab) != alpha(a) alpha(b) at " + tuple_text({a, b}));
    for (int g = 0; g < ng; ++g)
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                if (cm.Shat[g][Nh.mul(a, b)] != Nh.mul(cm.Shat[g][a], cm.Shat[g][b]))
                    return violation("Shat automorphism", {g, a, b},
                                     "Shat(g) is not multiplicative at " + tuple_text({g, a, b}));
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int a = 0; a < nn; ++a)
                if (cm.Shat[G.mul(g, h)][a] != cm.Shat[g][cm.Shat[h][a]])
                    return violation("Shat homomorphism", {g, h, a},
                                     "Shat(gh) != Shat(g) Shat(h) at " + tuple_text({g, h, a}));
    for (int g = 0; g < ng; ++g)
        for (int n = 0; n < nn; ++n)
            if (cm.alpha[cm.Shat[g][n]] != G.conj(g, cm.alpha[n]))
                return violation("CM1", {g, n}, "alpha(Shat(g) n) != g alpha(n) g^-1 at " + tuple_text({g, n}));
    for (int n = 0; n < nn; ++n)
        for (int m = 0; m < nn; ++m)
            if (cm.Shat[cm.alpha[n]][m] != Nh.conj(n, m))
                return violation("CM2", {n, m}, "Shat(alpha(n)) m != n m n^-1 at " + tuple_text({n, m}));
    return std::nullopt;
}

CrossedModuleData validate(const CrossedModule& cm) {
    if (auto v = check_crossed_module(cm)) throw InputError(v->which + ": " + v->message);
    CrossedModuleData d;
    d.cm = cm;
    std::set<int> image(cm.alpha.begin(), cm.alpha.end());
    d.N.assign(image.begin(), image.end());
    std::vector<int> kernel;
    for (int n = 0; n < cm.Nhat.order(); ++n)
        if (cm.alpha[n] == 0) kernel.push_back(n);
    d.Z = make_subgroup(cm.Nhat, kernel);
    d.H = quotient(cm.G, d.N);
    d.Zab = abelian_structure(d.Z.group);
    const AbelianGroup& A = d.Zab.A;
    std::vector<Perm> perms(d.H.H.order(), Perm(A.order()));
    for (int x = 0; x < d.H.H.order(); ++x)
        for (int i = 0; i < A.order(); ++i) {
            int img = cm.Shat[d.H.section[x]][d.nhat_of(A.element(i))];
            perms[x][i] = int(A.index(d.z_of(img)));
        }
    d.T = std::make_shared<const GAction>(action_of(d.H.H, A, perms));
    if (auto err = d.T->check()) throw std::logic_error("induced action on ker alpha: " + *err);
    return d;
}

CrossedModule conjugation_crossed_module(const FiniteGroup& G, const std::vector<int>& N) {
    if (!is_normal(G, N)) throw InputError("not normal");
    Subgroup sub = make_subgroup(G, N);
    CrossedModule cm;
    cm.Nhat = sub.group;
    cm.G = G;
    cm.alpha = sub.elements;
    for (int g = 0; g < G.order(); ++g) {
        Perm p;
        for (int n : sub.elements) p.push_back(sub.index_of[G.conj(g, n)]);
        cm.Shat.push_back(std::move(p));
    }
    return cm;
}

CrossedModule quotient_crossed_module(const FiniteGroup& G, const std::vector<int>& K, const std::vector<int>& C) {
    if (!is_normal(G, K) || !is_normal(G, C)) throw InputError("not normal");
    Subgroup sub = make_subgroup(G, K);
    for (int c : C) {
        if (sub.index_of[c] < 0) throw InputError("C must lie in K");
        for (int k : K)
            if (G.mul(c, k) != G.mul(k, c)) throw InputError("C must be central in K");
    }
    Quotient Q = quotient(G, C);
    CrossedModule cm;
    cm.Nhat = sub.group;
    cm.G = Q.H;
    for (int k : sub.elements) cm.alpha.push_back(Q.proj[k]);
    for (int x = 0; x < Q.H.order(); ++x) {
        Perm p;
        for (int k : sub.elements) p.push_back(sub.index_of[G.conj(Q.section[x], k)]);
        cm.Shat.push_back(std::move(p));
    }
    return cm;
}

CrossedModule doubling_crossed_module(bool twisted) {
    CrossedModule cm;
    cm.Nhat = make_cyclic(4);
    cm.G = make_cyclic(4);
    cm.alpha = {0, 2, 0, 2};
    for (int g = 0; g < 4; ++g)
        cm.Shat.push_back(twisted && g % 2 ? Perm{0, 3, 2, 1} : Perm{0, 1, 2, 3});
    return cm;
}

SectionChoice canonical_choice(const CrossedModuleData& d) {
    SectionChoice c;
    c.section = d.H.section;
    auto pre = preimages(d.cm);
    const int h = d.H.H.order();
    c.lifts.assign(h, std::vector<int>(h, 0));
    for (int x = 1; x < h; ++x)
        for (int y = 1; y < h; ++y) c.lifts[x][y] = pre[delta_sigma(d, c.section, x, y)].front();
    return c;
}

SectionChoice random_choice(const CrossedModuleData& d, std::mt19937_64& rng) {
    auto cs = cosets(d);
    auto pre = preimages(d.cm);
    const int h = d.H.H.order();
    SectionChoice c;
    c.section.assign(h, 0);
    for (int x = 1; x < h; ++x) c.section[x] = cs[x][rng() % cs[x].size()];
    c.lifts.assign(h, std::vector<int>(h, 0));
    for (int x = 1; x < h; ++x)
        for (int y = 1; y < h; ++y) {
            const auto& p = pre[delta_sigma(d, c.section, x, y)];
            c.lifts[x][y] = p[rng() % p.size()];
        }
    return c;
}

CharacteristicClass characteristic_class(const CrossedModuleData& d) {
    return characteristic_class(d, canonical_choice(d));
}

CharacteristicClass characteristic_class(const CrossedModuleData& d, const SectionChoice& choice) {
    const FiniteGroup& H = d.H.H;
    const FiniteGroup& Nh = d.cm.Nhat;
    const int h = H.order();
    const auto& s = choice.section;
    const auto& L = choice.lifts;
    if (int(s.size()) != h || s[0] != 0) throw InputError("section must be normalized with one entry per coset");
    for (int x = 0; x < h; ++x)
        if (d.H.proj[s[x]] != x) throw InputError("section(" + std::to_string(x) + ") is not in its coset");
    if (int(L.size()) != h) throw InputError("lift table has the wrong shape");
    for (int x = 0; x < h; ++x) {
        if (int(L[x].size()) != h) throw InputError("lift table has the wrong shape");
        for (int y = 0; y < h; ++y) {
            if ((x == 0 || y == 0) && L[x][y] != 0) throw InputError("lifts must be normalized");
            if (d.cm.alpha[L[x][y]] != delta_sigma(d, s, x, y))
                throw InputError("lift at " + tuple_text({x, y}) + " is not over psi(x) psi(y) psi(xy)^-1");
        }
    }
    CharacteristicClass cc;
    cc.choice = choice;
    cc.omega = Cochain(d.T, 3);
    for (int x = 1; x < h; ++x)
        for (int y = 1; y < h; ++y)
            for (int z = 1; z < h; ++z) {
                int lhs = Nh.mul(d.cm.Shat[s[x]][L[y][z]], L[x][H.mul(y, z)]);
                int rhs = Nh.mul(L[x][y], L[H.mul(x, y)][z]);
                int w = Nh.mul(Nh.inv(rhs), lhs);
                if (d.cm.alpha[w] != 0) throw std::logic_error("Omega leaves ker alpha");
                cc.omega.set({x, y, z}, d.z_of(w));
            }
    if (!is_cocycle(cc.omega)) throw std::logic_error("Omega is not a 3-cocycle");
    auto H3 = cohomology(d.T, 3);
    cc.h3_invariants = H3.invariant_factors;
    cc.class_coords = H3.class_of(cc.omega);
    cc.class_zero = is_zero(cc.class_coords);
    return cc;
}

std::optional<std::string> check_structural(const CrossedModuleData& d, const StructuralCocycle& s) {
    const int h = d.H.H.order();
    const int nn = d.cm.Nhat.order();
    if (int(s.sigma.size()) != h || int(s.f.size()) != h) return "structural cocycle has the wrong shape";
    if (s.sigma[0] != 0) return "sigma is not normalized";
    for (int x = 0; x < h; ++x) {
        if (s.sigma[x] < 0 || s.sigma[x] >= d.cm.G.order() || d.H.proj[s.sigma[x]] != x)
            return "sigma(" + std::to_string(x) + ") is not in its coset";
        if (int(s.f[x].size()) != h) return "structural cocycle has the wrong shape";
        for (int y = 0; y < h; ++y) {
            if (s.f[x][y] < 0 || s.f[x][y] >= nn) return "f value out of range";
            if ((x == 0 || y == 0) && s.f[x][y] != 0) return "f is not normalized";
            if (d.cm.alpha[s.f[x][y]] != delta_sigma(d, s.sigma, x, y))
                return "alpha f != delta_sigma at " + tuple_text({x, y});
        }
    }
    std::vector<int> where;
    if (!structural_identity(d, s, &where)) return "d_(Shat sigma) f != 1 at " + tuple_text(where);
    return std::nullopt;
}

StructuralCocycle act_on_structural(const CrossedModuleData& d, const std::vector<int>& c, const StructuralCocycle& s) {
    const FiniteGroup& H = d.H.H;
    const FiniteGroup& Nh = d.cm.Nhat;
    const int h = H.order();
    if (int(c.size()) != h || c[0] != 0) throw InputError("c must be a normalized map H -> Nhat");
    StructuralCocycle r;
    r.sigma.resize(h);
    for (int x = 0; x < h; ++x) r.sigma[x] = d.cm.G.mul(d.cm.alpha[c[x]], s.sigma[x]);
    r.f.assign(h, std::vector<int>(h, 0));
    for (int x = 0; x < h; ++x)
        for (int y = 0; y < h; ++y) {
            int v = Nh.mul(c[x], d.cm.Shat[s.sigma[x]][c[y]]);
            v = Nh.mul(Nh.mul(v, s.f[x][y]), Nh.inv(c[H.mul(x, y)]));
            r.f[x][y] = v;
        }
    return r;
}

namespace {

std::vector<std::vector<int>> all_c1(const CrossedModuleData& d, int64_t bound) {
    const int h = d.H.H.order();
    std::vector<size_t> radix(h - 1, size_t(d.cm.Nhat.order()));
    checked_product(radix, bound);
    std::vector<std::vector<int>> out;
    std::vector<size_t> idx(h - 1, 0);
    do {
        std::vector<int> c(h, 0);
        for (int x = 1; x < h; ++x) c[x] = int(idx[x - 1]);
        out.push_back(std::move(c));
    } while (advance(idx, radix));
    return out;
}

}  // namespace

StructuralOrbits structural_cocycles(const CrossedModuleData& d, int64_t bound) {
    const FiniteGroup& H = d.H.H;
    const int h = H.order();
    auto cs = cosets(d);
    auto pre = preimages(d.cm);
    const size_t zsize = d.Z.elements.size();

    std::vector<size_t> sradix;
    for (int x = 1; x < h; ++x) sradix.push_back(cs[x].size());
    std::vector<size_t> fradix(size_t(h - 1) * size_t(h - 1), zsize);
    int64_t space = checked_product(sradix, bound);
    int64_t fspace = checked_product(fradix, bound);
    if (space > bound / std::max<int64_t>(fspace, 1)) throw ResourceError("enumeration bound exceeded");

    std::set<StructuralCocycle> found;
    std::vector<size_t> si(sradix.size(), 0);
    do {
        StructuralCocycle s;
        s.sigma.assign(h, 0);
        for (int x = 1; x < h; ++x) s.sigma[x] = cs[x][si[x - 1]];
        s.f.assign(h, std::vector<int>(h, 0));
        std::vector<const std::vector<int>*> fib;
        for (int x = 1; x < h; ++x)
            for (int y = 1; y < h; ++y) fib.push_back(&pre[delta_sigma(d, s.sigma, x, y)]);
        std::vector<size_t> fi(fib.size(), 0);
        do {
            size_t k = 0;
            for (int x = 1; x < h; ++x)
                for (int y = 1; y < h; ++y, ++k) s.f[x][y] = (*fib[k])[fi[k]];
            if (structural_identity(d, s)) found.insert(s);
        } while (advance(fi, fradix));
    } while (advance(si, sradix));

    StructuralOrbits out;
    out.total = int64_t(found.size());
    if (found.empty()) return out;
    auto c1 = all_c1(d, bound);
    std::set<StructuralCocycle> seen;
    for (const auto& s : found) {
        if (seen.count(s)) continue;
        std::set<StructuralCocycle> orbit;
        for (const auto& c : c1) orbit.insert(act_on_structural(d, c, s));
        for (const auto& t : orbit) {
            if (!found.count(t)) throw std::logic_error("C^1 action left the structural cocycles");
            seen.insert(t);
        }
        out.representatives.push_back(*orbit.begin());
        out.orbit_sizes.push_back(int64_t(orbit.size()));
    }
    return out;
}

std::optional<std::vector<int>> structural_equivalence(const CrossedModuleData& d, const StructuralCocycle& a,
                                                       const StructuralCocycle& b, int64_t bound) {
    for (const auto& c : all_c1(d, bound))
        if (act_on_structural(d, c, a) == b) return c;
    return std::nullopt;
}

CrossedExtension extension_from_structural(const CrossedModuleData& d, const StructuralCocycle& s) {
    if (auto err = check_structural(d, s)) throw InputError(*err);
    FactorSystem fs;
    fs.G = d.H.H;
    fs.N = d.cm.Nhat;
    for (int x = 0; x < d.H.H.order(); ++x) fs.S.push_back(d.cm.Shat[s.sigma[x]]);
    fs.omega = s.f;
    CrossedExtension ce{build_extension(fs), {}};
    const FiniteGroup& E = ce.ext.E;
    const FiniteGroup& G = d.cm.G;
    for (int e = 0; e < E.order(); ++e)
        ce.alpha_hat.push_back(G.mul(d.cm.alpha[ce.ext.fiber(e)], s.sigma[ce.ext.base(e)]));
    std::vector<char> hit(G.order(), 0);
    int kernel = 0;
    for (int e = 0; e < E.order(); ++e) {
        hit[ce.alpha_hat[e]] = 1;
        if (ce.alpha_hat[e] == 0) ++kernel;
        for (int f = 0; f < E.order(); ++f)
            if (ce.alpha_hat[E.mul(e, f)] != G.mul(ce.alpha_hat[e], ce.alpha_hat[f]))
                throw std::logic_error("alpha_hat is not a homomorphism");
        for (int n = 0; n < d.cm.Nhat.order(); ++n) {
            int c = E.conj(e, ce.ext.index(n, 0));
            if (ce.ext.base(c) != 0 || ce.ext.fiber(c) != d.cm.Shat[ce.alpha_hat[e]][n])
                throw std::logic_error("Shat alpha_hat differs from conjugation");
        }
    }
    if (std::count(hit.begin(), hit.end(), 1) != G.order()) throw std::logic_error("alpha_hat is not onto");
    if (kernel != int(d.Z.elements.size())) throw std::logic_error("ker alpha_hat differs from ker alpha");
    return ce;
}

StructuralCocycle h2_action(const CrossedModuleData& d, const Cochain& beta, const StructuralCocycle& s) {
    if (beta.degree() != 2 || !(beta.group() == d.H.H) || !(beta.module() == d.coefficients()) ||
        perms_of(beta.action()) != perms_of(*d.T))
        throw InputError("beta must be a 2-cochain on H with values in ker alpha");
    if (!is_cocycle(beta)) throw InputError("beta is not a cocycle");
    StructuralCocycle r = s;
    const int h = d.H.H.order();
    for (int x = 1; x < h; ++x)
        for (int y = 1; y < h; ++y) r.f[x][y] = d.cm.Nhat.mul(s.f[x][y], d.nhat_of(beta.at({x, y})));
    return r;
}

int carry(int p, int x, int y) { return x + y >= p ? 1 : 0; }

LiftData cyclic_liftdata(int p, int64_t num, int64_t den) {
    if (p < 1 || den < 1) throw InputError("cyclic lift data needs p >= 1 and a positive denominator");
    num = mod_floor(num, den);
    int64_t g = std::gcd(num, den);
    if (g > 0) { num /= g; den /= g; }
    LiftData ld;
    ld.X = make_cyclic(p);
    ld.m = std::lcm(int64_t(p), den);
    const int64_t phase = num * (ld.m / den);
    ld.c.assign(p, std::vector<int>(p, 0));
    ld.chat_phase.assign(p, std::vector<int64_t>(p, 0));
    ld.act_phase.assign(p, std::vector<std::vector<int64_t>>(p, std::vector<int64_t>(p, 0)));
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
            ld.c[x][y] = carry(p, x, y);
            for (int z = 0; z < p; ++z) ld.act_phase[x][y][z] = mod_floor(int64_t(x) * phase * carry(p, y, z), ld.m);
        }
    return ld;
}

LiftObstruction obstruction_from_liftdata(const LiftData& ld) {
    const FiniteGroup& X = ld.X;
    const int n = X.order();
    if (ld.m < 1) throw InputError("truncation must be positive");
    if (int(ld.c.size()) != n || int(ld.chat_phase.size()) != n || int(ld.act_phase.size()) != n)
        throw InputError("lift data tables have the wrong shape");
    for (int x = 0; x < n; ++x) {
        if (int(ld.c[x].size()) != n || int(ld.chat_phase[x].size()) != n || int(ld.act_phase[x].size()) != n)
            throw InputError("lift data tables have the wrong shape");
        for (int y = 0; y < n; ++y) {
            if (int(ld.act_phase[x][y].size()) != n) throw InputError("lift data tables have the wrong shape");
            if ((x == 0 || y == 0) && (ld.c[x][y] != 0 || mod_floor(ld.chat_phase[x][y], ld.m) != 0))
                throw InputError("lift data is not normalized at " + tuple_text({x, y}));
            for (int z = 0; z < n; ++z)
                if ((x == 0 || y == 0 || z == 0) && mod_floor(ld.act_phase[x][y][z], ld.m) != 0)
                    throw InputError("action phase is not normalized at " + tuple_text({x, y, z}));
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (ld.c[x][y] + ld.c[X.mul(x, y)][z] != ld.c[y][z] + ld.c[x][X.mul(y, z)])
                    throw InputError("labels fail the cocycle property at " + tuple_text({x, y, z}));
    auto S = std::make_shared<const GAction>(GAction::trivial(X, AbelianGroup::cyclic(ld.m)));
    LiftObstruction ob;
    ob.omega = Cochain(S, 3);
    const auto& ch = ld.chat_phase;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            for (int z = 1; z < n; ++z) {
                int64_t v = ld.act_phase[x][y][z] + ch[y][z] - ch[X.mul(x, y)][z] + ch[x][X.mul(y, z)] - ch[x][y];
                ob.omega.set({x, y, z}, S->module().reduce(Vec(S->module().dim(), v)));
            }
    ob.cocycle = is_cocycle(ob.omega);
    if (!ob.cocycle) return ob;
    auto H3 = cohomology(S, 3);
    ob.h3_invariants = H3.invariant_factors;
    ob.class_coords = H3.class_of(ob.omega);
    ob.witness = is_coboundary(ob.omega).witness;
    ob.trivial = ob.witness.has_value();
    return ob;
}

GammaConstruction gamma_construction(const LiftingInstance& inst, const Witness& theta) {
    const ExtensionGroup& hat = inst.hat;
    Z1Module z1 = z1_module(inst);
    const AbelianGroup& Zg = z1.group();
    const int nz = int(Zg.order());
    const int ng = inst.G.order();
    LiftedHomomorphism L = lift_homomorphism(inst, theta);

    GammaConstruction gc;
    gc.h1_zero = cohomology(inst.SN, 1).trivial();
    std::map<std::pair<Perm, int>, int> index;
    for (int g = 0; g < ng; ++g)
        for (int zi = 0; zi < nz; ++zi) {
            Perm p = compose(psi_embed(inst, z1.embed(inst, Zg.element(zi))).perm, L.psi[g].perm);
            index.emplace(std::make_pair(p, g), int(gc.perms.size()));
            gc.perms.push_back(std::move(p));
            gc.base.push_back(g);
        }
    const int n = int(gc.perms.size());
    if (int(index.size()) != n) throw std::logic_error("Gamma elements are not distinct");
    auto lookup = [&](const Perm& p, int g) {
        auto it = index.find({p, g});
        if (it == index.end()) throw std::logic_error("Gamma is not closed");
        return it->second;
    };
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = lookup(compose(gc.perms[i], gc.perms[j]), inst.G.mul(gc.base[i], gc.base[j]));
    gc.Gamma = FiniteGroup(table);

    gc.cm.Nhat = hat.E;
    gc.cm.G = gc.Gamma;
    for (int e = 0; e < hat.E.order(); ++e) {
        Perm c(hat.E.order());
        for (int x = 0; x < hat.E.order(); ++x) c[x] = hat.E.conj(e, x);
        gc.cm.alpha.push_back(lookup(c, inst.N.elements[hat.base(e)]));
    }
    gc.cm.Shat = gc.perms;
    return gc;
}

}  // namespace cocycle
