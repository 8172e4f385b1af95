#include "cocycle/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "cocycle/loop.hpp"
#include "cocycle/torus.hpp"
#include "cocycle/transgression.hpp"

namespace cocycle {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Checker {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        pass_ = false;
        if (failures_.size() < 12) failures_.push_back(what);
    }
    bool pass() const { return pass_; }
    int64_t checks() const { return checks_; }
    void finish(CriterionReport& r) {
        r.pass = pass_;
        r.failures = failures_;
        r.details["checks"] = checks_;
    }

private:
    bool pass_ = true;
    int64_t checks_ = 0;
    std::vector<std::string> failures_;
};

std::string vec_string(const Vec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

// ---- 1: SU(n)/Z_p table ----------------------------------------------------

void su_quotient_table(CriterionReport& rep, Checker& c) {
    const std::pair<int, int> table[] = {{2, 2}, {3, 3}, {4, 2}, {4, 4}, {6, 2}, {6, 3}, {6, 6}};
    Json rows = Json::array();
    for (auto [n, p] : table) {
        auto r = su_quotient_phase(n, p, 1);
        int expected = (n % 2 == 1 || (n / p) % 2 == 0) ? 1 : -1;
        c.require(r.sign == expected, "sign for (n,p) = (" + std::to_string(n) + "," + std::to_string(p) + ")");
        rows.push_back({{"n", n}, {"p", p}, {"phase", rational_string(r.phase)}, {"sign", r.sign},
                        {"expected_sign", expected}});
    }
    rep.details["table"] = rows;

    auto r = su_quotient_phase(2, 2, 1);
    auto ob = su_quotient_obstruction(r);
    Rational omega111(ob.omega.at({1, 1, 1}).at(0), r.liftdata.m);
    c.require(omega111 == Rational(1, 2), "Omega(1,1,1) = 1/2 for (2,2,1)");
    c.require(ob.cocycle, "Omega is a 3-cocycle for (2,2,1)");
    c.require(!ob.witness && !ob.trivial, "coboundary solve fails for (2,2,1)");
    rep.details["omega_111"] = rational_string(omega111);
    rep.details["truncation"] = r.liftdata.m;
    rep.details["omega_nontrivial"] = !ob.trivial;
}

// ---- 2: torus gerbes ---------------------------------------------------------

AntisymTensor3 random_tensor(int n, std::mt19937_64& rng) {
    std::vector<std::tuple<int, int, int, int64_t>> entries;
    for (int64_t i = 0; i < binomial(n, 3); ++i) {
        auto t = triple_at(n, i);
        entries.emplace_back(t[0], t[1], t[2], int64_t(rng() % 11) - 5);
    }
    return AntisymTensor3::from_entries(n, entries);
}

Vec random_vec(int n, std::mt19937_64& rng) {
    Vec v(static_cast<size_t>(n));
    for (auto& x : v) x = int64_t(rng() % 13) - 6;
    return v;
}

// sum over all ordered (p,q,r) of S_pqr w_p u_q v_r from the dense tensor
int64_t trilinear(const AntisymTensor3& S, const Vec& u, const Vec& v, const Vec& w) {
    Vec d = S.dense();
    const int n = S.n();
    int64_t total = 0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r) total += d[(size_t(p) * n + q) * n + r] * w[p] * u[q] * v[r];
    return total;
}

void torus_gerbes(CriterionReport& rep, Checker& c, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Json ranks = Json::array();
    for (int n = 3; n <= 6; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        // The identity is linear in S, so the basis tensors cover every S.
        for (int64_t i = 0; i < binomial(n, 3); ++i)
            c.require(verify_cocycle_identity(AntisymTensor3::basis(n, i)).ok, "cocycle identity, basis tensor, " + tag);
        for (int trial = 0; trial < 5; ++trial) {
            auto S = random_tensor(n, rng);
            auto id = verify_cocycle_identity(S);
            c.require(id.ok && id.x_terms.is_zero(), "cocycle identity, random tensor, " + tag);
            auto d = delta_log(S);
            c.require(d.x_cancelled && d.cocycle, "delta log cancels x and is a cocycle, " + tag);
            for (int k = 0; k < 4; ++k) {
                Vec u = random_vec(n, rng), v = random_vec(n, rng), w = random_vec(n, rng);
                c.require(d.c_prime.eval({u, v, w}) == trilinear(S, u, v, w), "c' matches the trilinear sum, " + tag);
            }
            c.require(tensor_from_form(d.c_prime) == S, "composite recovers S, " + tag);
        }
        auto r = rank_check(n);
        const int64_t choose3 = int64_t(n) * (n - 1) * (n - 2) / 6, choose2 = int64_t(n) * (n - 1) / 2;
        c.require(r.rank == choose3 && r.injective && r.recovers, "rank C(n,3), " + tag);
        c.require(r.h1_rank == choose2 && r.h1_cocycles && r.h1_injective, "H1 family rank C(n,2), " + tag);
        ranks.push_back({{"n", n}, {"rank", r.rank}, {"h1_rank", r.h1_rank}});
    }
    rep.details["ranks"] = ranks;
}

// ---- 3: cohomology oracle -----------------------------------------------------

void cohomology_oracle(CriterionReport& rep, Checker& c) {
    const std::vector<std::pair<std::string, FiniteGroup>> groups = {
        {"Z2", make_cyclic(2)}, {"Z3", make_cyclic(3)}, {"Z4", make_cyclic(4)},
        {"Z2xZ2", make_product(make_cyclic(2), make_cyclic(2))}};
    Json cases = Json::array();
    int nontrivial = 0, compared = 0;
    for (const auto& [gname, G] : groups)
        for (int64_t m : {2, 3, 4}) {
            auto actions = enumerate_actions(G, AbelianGroup::cyclic(m));
            for (size_t a = 0; a < actions.size(); ++a) {
                auto S = std::make_shared<const GAction>(actions[a]);
                const bool trivial = S->is_trivial();
                nontrivial += !trivial;
                Json degrees = Json::array();
                for (int p = 0; p <= 3; ++p) {
                    Vec lattice = cohomology(S, p).invariant_factors;
                    Vec oracle = brute_force_oracle(S, p).invariant_factors;
                    ++compared;
                    const std::string tag = gname + " on Z" + std::to_string(m) + " action " +
                                            std::to_string(a) + " degree " + std::to_string(p);
                    c.require(lattice == oracle, tag + ": " + vec_string(lattice) + " vs " + vec_string(oracle));
                    if (trivial && p >= 1 && gname == "Z" + std::to_string(m))
                        c.require(lattice == Vec{m}, "H^" + std::to_string(p) + "(Z_m; Z_m) = Z_m for m = " +
                                                         std::to_string(m));
                    degrees.push_back(lattice);
                }
                cases.push_back({{"group", gname}, {"module", "Z" + std::to_string(m)}, {"trivial_action", trivial},
                                 {"invariant_factors", degrees}});
            }
        }
    c.require(nontrivial > 0, "at least one nontrivial action");
    rep.details["cases"] = cases;
    rep.details["comparisons"] = compared;
    rep.details["nontrivial_actions"] = nontrivial;
}

// ---- 4: extension algebra ------------------------------------------------------

void extension_algebra(CriterionReport& rep, Checker& c, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int valid = 0, invalid = 0;
    for (int i = 0; i < 240; ++i) {
        auto s = random_factor_system(rng, 6);
        const bool invariants = !check_factor_system(s.fs).has_value();
        const bool axioms = !verify_group(extension_table(s.fs)).has_value();
        bool built = false;
        try {
            auto E = build_extension(s.fs);
            built = !verify_group(E.E.table()).has_value();
        } catch (const InputError&) {
        }
        const std::string tag = "factor system " + std::to_string(i);
        c.require(invariants == axioms, tag + ": invariants and group axioms disagree");
        c.require(built == invariants, tag + ": build_extension disagrees with the invariants");
        c.require(invariants == s.valid, tag + ": generator label");
        (invariants ? valid : invalid)++;
    }
    c.require(valid > 0 && invalid > 0, "both valid and invalid factor systems drawn");
    rep.details["factor_systems"] = {{"valid", valid}, {"invalid", invalid}};

    const std::vector<FiniteGroup> groups = {make_cyclic(2), make_cyclic(3), make_cyclic(4),
                                             make_product(make_cyclic(2), make_cyclic(2)), make_dihedral(3)};
    int lemma = 0;
    for (int i = 0; i < 120; ++i) {
        const FiniteGroup& G = groups[rng() % groups.size()];
        AbelianGroup A = AbelianGroup::cyclic(int64_t(2 + rng() % 4));
        int n = int(1 + rng() % 2);
        BasepointedCochain d(G, A, n - 1);
        for (auto& v : d.table) v = A.reduce({int64_t(rng() % 97)});
        BasepointedCochain cyc = basepointed_delta(d);
        c.require(basepointed_delta(cyc).is_zero(), "random base-pointed cochain is a cocycle");
        c.require(basepointed_delta(triviality_witness(cyc)) == cyc, "delta(witness(c)) = c");
        ++lemma;
    }
    rep.details["basepointed_cocycles"] = lemma;
}

// ---- 5: transgression -------------------------------------------------------------

void transgression_suite(CriterionReport& rep, Checker& c, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::string, LiftingInstance>> instances;
    // Trivial N is drawn often and says little; keep drawing until 24 have |N| > 1.
    int proper = 0;
    for (int i = 0; proper < 24; ++i) {
        auto inst = random_transgression_instance(rng);
        proper += inst.N.group.order() > 1;
        instances.emplace_back("random " + std::to_string(i), std::move(inst));
    }
    const char* named[] = {"A4 < S4, Z2", "A4 < S4, Z4", "A4 < S4, Z4 sign"};
    for (int v = 0; v < 3; ++v) instances.emplace_back(named[v], alternating_in_symmetric_instance(v));

    int divergences = 0, with_prolongation = 0, tau_nonzero = 0, nonzero_f = 0;
    Json rows = Json::array();
    for (const auto& [name, inst] : instances) {
        auto t = transgress(inst);
        c.require(t.status == "ok" && t.h1_zero, name + ": H1(N,A) = 0 and f invariant");
        auto F = prolongation_search(inst);
        const bool found = F.has_value();
        if (t.tau_zero != found) ++divergences;
        c.require(t.tau_zero == found, name + ": tau = 0 iff a prolongation exists");
        c.require(prolongation_exists_up_to_coboundary(inst) == found, name + ": both prolongation readings agree");
        int64_t count = -1, h2 = -1;
        if (found) {
            ++with_prolongation;
            count = count_prolongations(inst);
            h2 = cohomology(quotient_action_on_invariants(inst), 2).order();
            c.require(count == h2, name + ": count_prolongations = |H2(H, A^N)|");
        }
        tau_nonzero += !t.tau_zero;
        const bool f_nonzero = !cohomology(inst.SN, 2).class_zero(inst.f);
        nonzero_f += f_nonzero;
        rows.push_back({{"instance", name}, {"G", inst.G.order()}, {"N", inst.N.group.order()},
                        {"A", inst.A().order()}, {"f_class_nonzero", f_nonzero}, {"tau_zero", t.tau_zero},
                        {"prolongation", found}, {"count", count}, {"h2_order", h2}});
    }
    rep.details["instances"] = rows;
    rep.details["divergences"] = divergences;
    rep.details["with_prolongation"] = with_prolongation;
    rep.details["tau_nonzero"] = tau_nonzero;
    rep.details["f_class_nonzero"] = nonzero_f;
    rep.details["nontrivial_N"] = proper;
}

// ---- 6: crossed modules -------------------------------------------------------------

std::vector<Cochain> h2_representatives(const CrossedModuleData& d) {
    auto H2 = cohomology(d.T, 2);
    std::vector<Cochain> out;
    for (int64_t k = 0; k < H2.order(); ++k) {
        Vec coords;
        int64_t r = k;
        for (int64_t f : H2.invariant_factors) {
            coords.push_back(r % f);
            r /= f;
        }
        out.push_back(H2.representative(coords));
    }
    return out;
}

int orbit_of(const CrossedModuleData& d, const StructuralOrbits& orb, const StructuralCocycle& s) {
    for (size_t i = 0; i < orb.representatives.size(); ++i)
        if (structural_equivalence(d, orb.representatives[i], s)) return int(i);
    return -1;
}

void crossed_modules(CriterionReport& rep, Checker& c) {
    const std::vector<std::pair<std::string, CrossedModule>> examples = {
        {"conjugation S3 > Z3", conjugation_crossed_module(make_dihedral(3), {0, 1, 2})},
        {"conjugation D4 > Z4", conjugation_crossed_module(make_dihedral(4), {0, 1, 2, 3})},
        {"conjugation Q8 > Z4", conjugation_crossed_module(make_quaternion(), {0, 1, 4, 5})},
        {"doubling Z4 -> Z4", doubling_crossed_module(false)}};
    Json rows = Json::array();
    for (const auto& [name, cm] : examples) {
        auto d = validate(cm);
        auto cc = characteristic_class(d);
        auto orb = structural_cocycles(d);
        auto reps = h2_representatives(d);
        c.require(cc.class_zero, name + ": characteristic class vanishes");
        c.require(orb.representatives.size() == reps.size(), name + ": orbit count equals |H2(H,Z)_T|");
        // beta -> beta.s must hit every orbit exactly once, from every start.
        bool free_transitive = !orb.representatives.empty();
        for (const auto& s : orb.representatives) {
            std::set<int> hit;
            for (const auto& beta : reps) hit.insert(orbit_of(d, orb, h2_action(d, beta, s)));
            free_transitive = free_transitive && hit.size() == reps.size() && !hit.count(-1);
        }
        c.require(free_transitive, name + ": H2 action is free and transitive");
        rows.push_back({{"crossed_module", name}, {"orbits", orb.representatives.size()},
                        {"h2_order", reps.size()}, {"structural_cocycles", orb.total},
                        {"free_transitive", free_transitive}});
    }
    // Nonzero characteristic class: no structural cocycle at all.
    auto twisted = validate(doubling_crossed_module(true));
    auto tcc = characteristic_class(twisted);
    auto torb = structural_cocycles(twisted);
    c.require(!tcc.class_zero && torb.representatives.empty(), "twisted doubling: nonzero class, no extension");
    rows.push_back({{"crossed_module", "twisted doubling Z4 -> Z4"}, {"orbits", torb.representatives.size()},
                    {"class_zero", tcc.class_zero}});
    rep.details["crossed_modules"] = rows;
}

// ---- 7: lifting ---------------------------------------------------------------------

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[size_t(i)] = i;
    return p;
}

void lifting_suite(CriterionReport& rep, Checker& c, uint64_t seed) {
    auto instances = small_lifting_instances(16);
    instances.push_back(nonzero_obstruction_instance());
    int kernel_checked = 0, lifts = 0, obstructed = 0;
    for (size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        const std::string tag = "instance " + std::to_string(i);
        if (inst.hat.E.order() <= 16) {
            auto auts = fibered_automorphisms(inst.hat);
            Perm idA = identity_perm(int(inst.A().order())), idN = identity_perm(inst.N.group.order());
            std::set<Perm> kernel, image;
            for (const auto& a : auts)
                if (a.phi_A == idA && a.phi_N == idN) kernel.insert(a.perm);
            for (const auto& z : enumerate_z1(inst)) image.insert(psi_embed(inst, z).perm);
            c.require(kernel == image, tag + ": ker Phi = im Psi");
            ++kernel_checked;
        }
        if (inst.G.order() <= 4) {
            auto ob = lifting_obstruction(inst);
            auto found = exhaustive_lift_search(inst);
            c.require((ob.invariant && ob.class_zero) == found.has_value(), tag + ": obstruction vs exhaustive search");
            found ? ++lifts : ++obstructed;
        }
    }
    rep.details["instances"] = instances.size();
    rep.details["kernel_image_checked"] = kernel_checked;
    rep.details["liftable"] = lifts;
    rep.details["not_liftable"] = obstructed;

    // psi(g) psi(g') psi(gg')^-1 = Psi(kappa(g,g')) on randomized witnesses
    std::mt19937_64 rng(seed);
    int witnesses = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = random_lifting_instance(rng, 16);
        auto theta = invariance_witness(inst);
        if (!theta) continue;
        auto z1 = enumerate_z1(inst);
        for (int g = 1; g < inst.G.order(); ++g) (*theta)[size_t(g)] = (*theta)[size_t(g)] + z1[rng() % z1.size()];
        auto L = lift_homomorphism(inst, *theta);
        bool all_zero = true;
        for (int g = 0; g < inst.G.order(); ++g)
            for (int h = 0; h < inst.G.order(); ++h) {
                Cochain kappa = witness_differential(inst, *theta, g, h);
                Perm lhs = compose(compose(L.psi[size_t(g)].perm, L.psi[size_t(h)].perm),
                                   inverse(L.psi[size_t(inst.G.mul(g, h))].perm));
                c.require(is_cocycle(kappa), "kappa is a 1-cocycle");
                c.require(lhs == psi_embed(inst, kappa).perm, "defect identity");
                c.require(L.defect[size_t(g)][size_t(h)] == kappa, "reported defect equals d theta");
                all_zero = all_zero && kappa.is_zero();
            }
        c.require(L.homomorphism == all_zero, "lift is a homomorphism iff the defect vanishes");
        ++witnesses;
    }
    c.require(witnesses >= 10, "enough randomized witnesses");
    rep.details["randomized_witnesses"] = witnesses;
}

// ---- 8: loop numerics -------------------------------------------------------------------

constexpr double kSubRunLimit = 30.0;

void timed(CriterionReport& rep, Checker& c, const std::string& name, const std::function<Json()>& body) {
    auto t0 = Clock::now();
    Json j = body();
    double s = seconds_since(t0);
    j["seconds"] = s;
    c.require(s < kSubRunLimit, name + " took " + std::to_string(s) + " s");
    rep.details[name] = j;
}

void loop_numerics(CriterionReport& rep, Checker& c, uint64_t seed) {
    timed(rep, c, "gamma_cocycle", [&] {
        std::mt19937_64 rng(seed);
        double worst = 0;
        for (int n : {2, 3}) {
            auto a = sample_disc(n, random_disc_field(n, rng, 3, false, 1.5), 128, 128);
            auto b = sample_disc(n, random_disc_field(n, rng, 3, false, 1.5), 128, 128);
            auto e = sample_disc(n, random_disc_field(n, rng, 3, true, 1.5), 128, 128);
            worst = std::max({worst, verify_gamma_cocycle(a, b, e).residual, verify_gamma_cocycle(e, a, b).residual});
        }
        c.require(worst <= 1e-8, "gamma cocycle residual " + std::to_string(worst));
        return Json{{"grid", "128x128"}, {"max_residual", worst}, {"tolerance", 1e-8}};
    });
    timed(rep, c, "phi_homomorphism", [&] {
        std::mt19937_64 rng(seed + 1);
        double worst = 0, min_gamma = 1e300;
        int pairs = 0;
        for (int i = 0; i < 20; ++i) {
            int n = i < 14 ? 2 : 3;
            auto a = random_disc_field(n, rng, 2, true, 2.0), b = random_disc_field(n, rng, 2, true, 2.0);
            auto r = phi_homomorphism_check(n, a, b, 24, 24, 24);
            worst = std::max(worst, r.residual);
            min_gamma = std::min(min_gamma, std::abs(r.gamma));
            ++pairs;
        }
        c.require(worst <= 1e-6, "C(g1 g2) - C(g1) - C(g2) - gamma off an integer by " + std::to_string(worst));
        return Json{{"pairs", pairs}, {"grid", "24x24x24"}, {"max_distance_to_integer", worst},
                    {"min_abs_gamma", min_gamma}, {"tolerance", 1e-6}};
    });
    timed(rep, c, "s3_winding", [&] {
        double w = winding_s3(standard_s3_map(24, 24, 48));
        double bubble = wzw_term(degree_one_bubble(24, 24, 24));
        c.require(std::abs(w - 1.0) <= 1e-6, "S3 winding " + std::to_string(w));
        c.require(std::abs(bubble - 1.0) <= 1e-6, "degree-one bubble " + std::to_string(bubble));
        return Json{{"winding", w}, {"bubble", bubble}, {"tolerance", 1e-6}};
    });
    timed(rep, c, "jacobi", [&] {
        std::mt19937_64 cal(seed + 2);
        double fitted = calibrate_jacobi_constant(cal, 20, 2, 32);
        c.require(std::abs(fitted - kJacobiBoundaryConstant) <= 1e-6, "calibrated constant " + std::to_string(fitted));
        std::mt19937_64 rng(seed + 3);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            int n = i % 2 ? 3 : 2;
            auto p = random_based_path(n, 32, rng), q = random_based_path(n, 32, rng), r = random_based_path(n, 32, rng);
            worst = std::max(worst, jacobi_defect(p, q, r).residual);
        }
        c.require(worst <= 1e-6, "Jacobi residual " + std::to_string(worst));
        return Json{{"fitted_constant", fitted}, {"frozen_constant", kJacobiBoundaryConstant},
                    {"max_residual", worst}, {"tolerance", 1e-6}};
    });
    timed(rep, c, "lambda", [&] {
        std::mt19937_64 rng(seed + 4);
        double worst = 0;
        for (int i = 0; i < 6; ++i) {
            int n = 2 + i % 2;
            auto g = random_group_loop(n, 256, rng);
            auto z = random_loop_algebra(n, 256, rng), e = random_loop_algebra(n, 256, rng);
            worst = std::max(worst, lambda_check(g, z, e).residual);
        }
        c.require(worst <= 1e-8, "lambda residual " + std::to_string(worst));
        return Json{{"samples", 256}, {"max_residual", worst}, {"tolerance", 1e-8}};
    });
}

// ---- 9: Hilbert-Schmidt mode sum -----------------------------------------------------------

void hs_mode_sum(CriterionReport& rep, Checker& c, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Json rows = Json::array();
    double worst = 0;
    for (auto [n, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 1}})
        for (int trial = 0; trial < 3; ++trial) {
            auto f = random_twisted_loop(n, q, 256, rng, 4, 0.8);
            auto h32 = hs_offdiag_norm(f, 32), h64 = hs_offdiag_norm(f, 64);
            double drift = std::abs(h64.ratio - h32.ratio) / h64.ratio;
            worst = std::max(worst, drift);
            c.require(h64.norm2 > 0 && drift <= 0.02, "ratio drift " + std::to_string(drift) + " for n=" +
                                                          std::to_string(n) + ", q=" + std::to_string(q));
            rows.push_back({{"n", n}, {"q", q}, {"ratio_32", h32.ratio}, {"ratio_64", h64.ratio}, {"drift", drift}});
        }
    for (int n : {2, 3}) {
        Mat g = expm_su(random_su_algebra(n, rng));
        auto constant = sample_group_loop(n, 64, [&g](double) { return g; });
        auto h = hs_offdiag_norm(constant, 32);
        c.require(h.norm2 == 0.0 && h.mode_sum == 0.0, "constant loop gives exactly 0, n=" + std::to_string(n));
    }
    rep.details["loops"] = rows;
    rep.details["max_drift"] = worst;
    rep.details["tolerance"] = 0.02;
}

struct CriterionDef {
    const char* title;
    double time_limit;      // seconds, 0 when none
    std::function<void(CriterionReport&, Checker&, uint64_t)> run;
};

const CriterionDef& criterion_def(int id) {
    static const CriterionDef table[kCriterionCount] = {
        {"SU(n)/Z_p obstruction table", 1.0, [](auto& r, auto& c, uint64_t) { su_quotient_table(r, c); }},
        {"torus gerbes", 5.0, [](auto& r, auto& c, uint64_t s) { torus_gerbes(r, c, s); }},
        {"cohomology oracle equivalence", 60.0, [](auto& r, auto& c, uint64_t) { cohomology_oracle(r, c); }},
        {"extension algebra", 0.0, [](auto& r, auto& c, uint64_t s) { extension_algebra(r, c, s); }},
        {"transgression biconditional", 300.0, [](auto& r, auto& c, uint64_t s) { transgression_suite(r, c, s); }},
        {"crossed-module classification", 60.0, [](auto& r, auto& c, uint64_t) { crossed_modules(r, c); }},
        {"lifting theory", 0.0, [](auto& r, auto& c, uint64_t s) { lifting_suite(r, c, s); }},
        {"loop numerics", 0.0, [](auto& r, auto& c, uint64_t s) { loop_numerics(r, c, s); }},
        {"Hilbert-Schmidt mode sum", 0.0, [](auto& r, auto& c, uint64_t s) { hs_mode_sum(r, c, s); }},
    };
    return table[id - 1];
}

}  // namespace

Json CriterionReport::to_json() const {
    return Json{{"id", id}, {"title", title}, {"pass", pass}, {"seconds", seconds}, {"details", details},
                {"failures", failures}};
}

CriterionReport run_criterion(int id, const SuiteOptions& opts) {
    if (id < 1 || id > kCriterionCount) throw InputError("criterion ids run from 1 to " + std::to_string(kCriterionCount));
    const CriterionDef& def = criterion_def(id);
    CriterionReport rep;
    rep.id = id;
    rep.title = def.title;
    Checker c;
    auto t0 = Clock::now();
    try {
        def.run(rep, c, opts.seed);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    rep.seconds = seconds_since(t0);
    if (def.time_limit > 0) {
        c.require(rep.seconds < def.time_limit, "took " + std::to_string(rep.seconds) + " s, limit " +
                                                     std::to_string(def.time_limit) + " s");
        rep.details["time_limit_seconds"] = def.time_limit;
    }
    c.finish(rep);
    return rep;
}

std::vector<CriterionReport> run_suite(const std::vector<int>& ids, const SuiteOptions& opts) {
    for (int id : ids)
        if (id < 1 || id > kCriterionCount)
            throw InputError("criterion ids run from 1 to " + std::to_string(kCriterionCount));
    std::vector<CriterionReport> out;
    for (int id : ids) out.push_back(run_criterion(id, opts));
    return out;
}

std::string summary_line(const CriterionReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s  %d  %s  (%.2f s)", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
    return buf;
}

}  // namespace cocycle
