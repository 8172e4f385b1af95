// cocycle-forge: JSON reports for group cohomology, extensions, lifting,
// crossed modules, transgression, torus gerbes and loop-group numerics.
//
// Exit codes: 0 success, 1 mathematical negative (a failed check or a
// nonzero class under --expect-trivial), 2 input error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "cocycle/io.hpp"
#include "cocycle/loop.hpp"
#include "cocycle/suite.hpp"
#include "cocycle/torus.hpp"
#include "cocycle/transgression.hpp"

using namespace cocycle;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

// Options shared by the commands that build a lifting instance.
struct InstanceArgs {
    std::string group, normal, coeff, action, cocycle, example;
    bool random = false;
};

struct Outcome {
    Json results = Json::object();
    bool negative = false;
    RunManifest manifest;
};

void log(const std::string& msg) { std::cerr << "cocycle-forge: " << msg << "\n"; }

Json vec_json(const Vec& v) { return Json(v); }

std::shared_ptr<const GAction> action_for(const FiniteGroup& G, const std::string& coeff, const std::string& action) {
    return parse_action(G, parse_module(coeff), action);
}

// Cochain on N given by keys in ambient element indices.
Cochain cochain_on_subgroup(const Subgroup& N, std::shared_ptr<const GAction> SN, int p, const Json& j) {
    Json local = Json::object();
    if (!j.is_null()) {
        if (!j.is_object()) throw InputError("cocycle must be an object mapping \"g1,g2\" to values");
        for (const auto& [key, value] : j.items()) {
            std::string translated;
            size_t start = 0;
            for (;;) {
                size_t comma = key.find(',', start);
                std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                int g = 0;
                try {
                    g = std::stoi(part);
                } catch (const std::exception&) {
                    throw InputError("cocycle key '" + key + "' is not a list of element indices");
                }
                if (g < 0 || g >= int(N.index_of.size()) || N.index_of[size_t(g)] < 0)
                    throw InputError("cocycle key '" + key + "' leaves the normal subgroup");
                translated += (translated.empty() ? "" : ",") + std::to_string(N.index_of[size_t(g)]);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            local[translated] = value;
        }
    }
    return cochain_from_json(SN, p, local);
}

LiftingInstance instance_from(const InstanceArgs& a, uint64_t seed, bool transgression_generator) {
    if (a.example == "nonzero-obstruction") return nonzero_obstruction_instance();
    if (a.example.rfind("a4-s4", 0) == 0) {
        int variant = a.example == "a4-s4" ? 0 : a.example == "a4-s4:z4" ? 1 : a.example == "a4-s4:z4-sign" ? 2 : -1;
        if (variant < 0) throw InputError("unknown example '" + a.example + "'");
        return alternating_in_symmetric_instance(variant);
    }
    if (!a.example.empty()) throw InputError("unknown example '" + a.example + "'");
    if (a.random) {
        std::mt19937_64 rng(seed);
        return transgression_generator ? random_transgression_instance(rng) : random_lifting_instance(rng, 16);
    }
    if (a.group.empty() || a.coeff.empty()) throw InputError("--group and --coeff are required without --example or --random");
    FiniteGroup G = parse_group(a.group);
    std::vector<int> N = parse_index_list(a.normal);
    if (N.empty()) throw InputError("--normal must list the elements of N");
    auto S = action_for(G, a.coeff, a.action);
    Subgroup sub = make_subgroup(G, N);
    auto SN = std::make_shared<const GAction>(S->restrict_to(sub));
    Json cj = a.cocycle.empty() ? Json() : read_json_argument(a.cocycle);
    return make_lifting_instance(G, sub.elements, S, cochain_on_subgroup(sub, SN, 2, cj));
}

void add_instance_options(CLI::App* sub, InstanceArgs& a, const std::string& examples) {
    sub->add_option("--group", a.group, "ambient group G");
    sub->add_option("--normal", a.normal, "elements of the normal subgroup N, e.g. 0,2");
    sub->add_option("--coeff", a.coeff, "coefficient module A, e.g. torsion:4");
    sub->add_option("--action", a.action, "action of G on A (JSON); trivial when omitted");
    sub->add_option("--cocycle", a.cocycle, "2-cocycle f on N as {\"n1,n2\": value} in G's indices");
    sub->add_option("--example", a.example, "named instance: " + examples);
    sub->add_flag("--random", a.random, "draw a random instance from --seed");
}

// f keyed by G's element indices, matching the --cocycle input form.
Json f_in_ambient_indices(const LiftingInstance& inst) {
    Json out = Json::object();
    const int order = inst.N.group.order();
    for (int64_t i = 0; i < inst.f.size(); ++i) {
        Vec v = inst.f.at_index(i);
        if (is_zero(v)) continue;
        auto args = tuple_at(i, order, 2);
        out[std::to_string(inst.N.elements[size_t(args[0])]) + "," + std::to_string(inst.N.elements[size_t(args[1])])] = v;
    }
    return out;
}

Json instance_summary(const LiftingInstance& inst) {
    return Json{{"G_order", inst.G.order()},
                {"N", inst.N.elements},
                {"A_invariants", vec_json(inst.A().torsion)},
                {"A_rank", inst.A().rank},
                {"f", f_in_ambient_indices(inst)}};
}

// ---- commands ---------------------------------------------------------------

struct CohomologyArgs {
    std::string group, coeff, action;
    int degree = 0;
    bool oracle = false, generators = false, expect_trivial = false;
};

Outcome run_cohomology(const CohomologyArgs& a, bool details) {
    Outcome out;
    auto S = action_for(parse_group(a.group), a.coeff, a.action);
    auto H = cohomology(S, a.degree);
    out.results["invariant_factors"] = vec_json(H.invariant_factors);
    if (details) {
        out.results["degree"] = a.degree;
        out.results["order"] = H.order() < 0 ? Json() : Json(H.order());
    }
    if (a.generators) {
        Json gens = Json::array();
        for (const auto& g : H.generators) gens.push_back(cochain_to_json(g));
        out.results["generators"] = gens;
    }
    if (a.oracle) {
        auto O = brute_force_oracle(S, a.degree);
        out.results["oracle_invariant_factors"] = vec_json(O.invariant_factors);
        out.results["oracle_agrees"] = O.invariant_factors == H.invariant_factors;
        out.negative = O.invariant_factors != H.invariant_factors;
    }
    if (a.expect_trivial && !H.trivial()) out.negative = true;
    return out;
}

struct ExtensionArgs {
    std::string group, fiber, action, cocycle;
    bool random = false;
    int max_order = 6;
};

Outcome run_extension(const ExtensionArgs& a, uint64_t seed, bool details) {
    Outcome out;
    if (a.random) {
        std::mt19937_64 rng(seed);
        auto s = random_factor_system(rng, a.max_order);
        bool invariants = !check_factor_system(s.fs).has_value();
        bool axioms = !verify_group(extension_table(s.fs)).has_value();
        out.results = Json{{"G_order", s.fs.G.order()}, {"N_order", s.fs.N.order()}, {"invariants_hold", invariants},
                           {"group_axioms_hold", axioms}, {"agree", invariants == axioms}};
        if (details) out.results["omega"] = table_to_json(s.fs.omega);
        out.negative = invariants != axioms;
        return out;
    }
    if (a.group.empty() || a.fiber.empty()) throw InputError("--group and --fiber are required without --random");
    FiniteGroup G = parse_group(a.group);
    auto S = action_for(G, a.fiber, a.action);
    Cochain f = cochain_from_json(S, 2, a.cocycle.empty() ? Json() : read_json_argument(a.cocycle));
    auto fs = abelian_factor_system(*S, f);
    if (auto v = check_factor_system(fs)) {
        out.results = Json{{"valid", false}, {"violation", {{"which", v->which}, {"where", v->where}, {"message", v->message}}}};
        out.negative = true;
        return out;
    }
    auto E = build_extension(fs);
    auto H2 = cohomology(S, 2);
    Vec cls = H2.class_of(f);
    out.results = Json{{"valid", true}, {"order", E.E.order()}, {"abelian", E.E.is_abelian()},
                       {"class_coords", vec_json(cls)}, {"h2_invariants", vec_json(H2.invariant_factors)},
                       {"split", is_zero(cls)}};
    if (E.E.is_abelian()) out.results["invariant_factors"] = vec_json(abelian_structure(E.E).A.torsion);
    if (details) out.results["table"] = E.E.table();
    return out;
}

struct LiftArgs {
    InstanceArgs inst;
    bool exhaustive = false, expect_trivial = false;
};

Outcome run_lift(const LiftArgs& a, uint64_t seed, bool details) {
    Outcome out;
    auto inst = instance_from(a.inst, seed, false);
    auto ob = lifting_obstruction(inst);
    bool liftable = ob.invariant && ob.class_zero;
    out.results = Json{{"invariant", ob.invariant}, {"class_zero", ob.class_zero}, {"liftable", liftable},
                       {"h2_invariants", vec_json(ob.h2_invariants)}, {"class_coords", vec_json(ob.class_coords)}};
    if (a.exhaustive) {
        bool found = exhaustive_lift_search(inst).has_value();
        out.results["exhaustive_lift_found"] = found;
        out.results["agrees_with_search"] = found == liftable;
        if (found != liftable) out.negative = true;
    }
    if (details) out.results["instance"] = instance_summary(inst);
    if (a.expect_trivial && !liftable) out.negative = true;
    return out;
}

struct CrossedArgs {
    std::string kind = "conjugation", group, normal, center;
    bool orbits = false, expect_trivial = false;
};

CrossedModule crossed_from(const CrossedArgs& a) {
    if (a.kind == "doubling") return doubling_crossed_module(false);
    if (a.kind == "doubling-twisted") return doubling_crossed_module(true);
    if (a.group.empty()) throw InputError("--group is required for kind " + a.kind);
    FiniteGroup G = parse_group(a.group);
    auto N = parse_index_list(a.normal);
    if (a.kind == "conjugation") return conjugation_crossed_module(G, N);
    if (a.kind == "quotient") return quotient_crossed_module(G, N, parse_index_list(a.center));
    throw InputError("unknown crossed-module kind '" + a.kind + "'");
}

Outcome run_crossed(const CrossedArgs& a, bool details) {
    Outcome out;
    auto d = validate(crossed_from(a));
    auto cc = characteristic_class(d);
    out.results = Json{{"valid", true},
                       {"image_order", d.N.size()},
                       {"kernel_invariants", vec_json(d.coefficients().torsion)},
                       {"quotient_order", d.H.H.order()},
                       {"class_zero", cc.class_zero},
                       {"h3_invariants", vec_json(cc.h3_invariants)},
                       {"class_coords", vec_json(cc.class_coords)}};
    if (details) out.results["omega"] = cochain_to_json(cc.omega);
    if (a.orbits) {
        auto orb = structural_cocycles(d);
        auto H2 = cohomology(d.T, 2);
        out.results["orbits"] = orb.representatives.size();
        out.results["structural_cocycles"] = orb.total;
        out.results["h2_order"] = H2.order();
        // beta -> beta.s should hit every orbit exactly once from every start
        bool free_transitive = !orb.representatives.empty();
        for (const auto& s : orb.representatives) {
            std::set<int> hit;
            for (int64_t k = 0; k < H2.order(); ++k) {
                Vec coords;
                int64_t r = k;
                for (int64_t f : H2.invariant_factors) {
                    coords.push_back(r % f);
                    r /= f;
                }
                auto moved = h2_action(d, H2.representative(coords), s);
                int which = -1;
                for (size_t i = 0; i < orb.representatives.size() && which < 0; ++i)
                    if (structural_equivalence(d, orb.representatives[i], moved)) which = int(i);
                hit.insert(which);
            }
            free_transitive = free_transitive && int64_t(hit.size()) == H2.order() && !hit.count(-1);
        }
        out.results["free_transitive"] = orb.representatives.empty() ? Json() : Json(free_transitive);
        if (!orb.representatives.empty() && !free_transitive) out.negative = true;
    }
    if (a.expect_trivial && !cc.class_zero) out.negative = true;
    return out;
}

struct TransgressArgs {
    InstanceArgs inst;
    bool expect_trivial = false;
};

Outcome run_transgress(const TransgressArgs& a, uint64_t seed, bool details) {
    Outcome out;
    auto inst = instance_from(a.inst, seed, true);
    auto t = transgress(inst);
    out.results = Json{{"status", t.status}, {"h1_zero", t.h1_zero}, {"invariant", t.invariant},
                       {"quotient_order", t.quotient_order}};
    if (t.status != "ok") {
        out.negative = true;
        return out;
    }
    out.results["tau_zero"] = t.tau_zero;
    out.results["h3_invariants"] = vec_json(t.tau->h3_invariants);
    out.results["class_coords"] = vec_json(t.tau->class_coords);
    bool found = prolongation_search(inst).has_value();
    out.results["prolongation_found"] = found;
    out.results["prolongation_up_to_coboundary"] = prolongation_exists_up_to_coboundary(inst);
    out.results["biconditional_holds"] = found == t.tau_zero;
    if (found) {
        out.results["count_prolongations"] = count_prolongations(inst);
        out.results["h2_quotient_order"] = cohomology(quotient_action_on_invariants(inst), 2).order();
    }
    if (details) out.results["instance"] = instance_summary(inst);
    if (found != t.tau_zero) out.negative = true;
    if (a.expect_trivial && !t.tau_zero) out.negative = true;
    return out;
}

struct TorusArgs {
    int n = 3;
    std::vector<std::string> tensor;
};

// "p,q,r=v" entries, 1-based, separated by ';' or given as repeated flags.
AntisymTensor3 tensor_from_args(int n, const std::vector<std::string>& groups) {
    std::vector<std::tuple<int, int, int, int64_t>> entries;
    for (const auto& group : groups) {
        std::stringstream all(group);
        std::string item;
        while (std::getline(all, item, ';')) {
            if (item.empty()) continue;
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InputError("tensor entry '" + item + "' needs the form p,q,r=v");
            auto idx = parse_index_list(item.substr(0, eq));
            if (idx.size() != 3) throw InputError("tensor entry '" + item + "' needs three indices");
            for (int i : idx)
                if (i < 1 || i > n) throw InputError("tensor indices run from 1 to " + std::to_string(n));
            int64_t v = 0;
            try {
                v = std::stoll(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw InputError("tensor entry '" + item + "' has a non-integer value");
            }
            entries.emplace_back(idx[0] - 1, idx[1] - 1, idx[2] - 1, v);
        }
    }
    return AntisymTensor3::from_entries(n, entries);
}

Outcome run_torus(const TorusArgs& a, bool details) {
    Outcome out;
    if (a.n < 3 || a.n > 12) throw InputError("--n must be in 3..12");
    auto S = tensor_from_args(a.n, a.tensor);
    auto id = verify_cocycle_identity(S);
    auto dl = delta_log(S);
    bool recovers = tensor_from_form(dl.c_prime) == S;
    auto rc = rank_check(a.n);
    bool ok = id.ok && dl.x_cancelled && dl.cocycle && recovers;
    out.results = Json{{"cocycle_ok", ok}, {"rank", rc.rank}};
    if (details) {
        Json cp = Json::object();
        for (int64_t i = 0; i < binomial(a.n, 3); ++i) {
            auto t = triple_at(a.n, i);
            int64_t v = dl.c_prime.at({t[0], t[1], t[2]});
            if (v) cp[std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1)] = v;
        }
        out.results["c_prime"] = cp;
        out.results["recovers_tensor"] = recovers;
        out.results["h1_rank"] = rc.h1_rank;
        out.results["rank_injective"] = rc.injective;
    }
    out.negative = !ok;
    return out;
}

struct SuArgs {
    int n = 2, p = 2, k = 1;
    bool expect_trivial = false;
};

// Above this p the cohomology solve (cost ~p^4) is replaced by the phase.
constexpr int kObstructionSolveMaxP = 8;

Outcome run_su_quotient(const SuArgs& a, bool details) {
    Outcome out;
    auto r = su_quotient_phase(a.n, a.p, a.k);
    bool nontrivial = r.phase != Rational(0);
    std::string method = "phase";
    std::optional<LiftObstruction> ob;
    if (a.p <= kObstructionSolveMaxP) {
        ob = su_quotient_obstruction(r);
        nontrivial = !ob->trivial;
        method = "cohomology";
    }
    out.results = Json{{"phase", rational_string(r.phase)}, {"sign", r.sign}, {"omega_nontrivial", nontrivial}};
    if (details) {
        out.results["n"] = a.n;
        out.results["p"] = a.p;
        out.results["k"] = a.k;
        out.results["rule_applies"] = r.rule_applies;
        out.results["rule_sign"] = r.rule_sign;
        out.results["method"] = method;
        out.results["truncation"] = r.liftdata.m;
        if (ob) {
            out.results["omega_111"] = rational_string(Rational(ob->omega.at({1, 1, 1}).at(0), r.liftdata.m));
            out.results["h3_invariants"] = vec_json(ob->h3_invariants);
            out.results["class_coords"] = vec_json(ob->class_coords);
        }
    }
    if (a.expect_trivial && nontrivial) out.negative = true;
    return out;
}

struct LoopArgs {
    std::string check;
    int n = 2, p = 2, k = 1, grid = 0, cutoff = 32;
    double tol = -1;
};

Outcome run_loop(const LoopArgs& a, uint64_t seed, bool details) {
    Outcome out;
    std::mt19937_64 rng(seed);
    auto grid_or = [&](int dflt) { return a.grid > 0 ? a.grid : dflt; };
    auto tol_or = [&](double dflt) { return a.tol > 0 ? a.tol : dflt; };
    const int n = a.n;
    if (a.check != "su-quotient" && (n < 2 || n > 8)) throw InputError("--n must be in 2..8");
    double measured = 0, tolerance = 0;
    int grid = 0;
    if (a.check == "gamma") {
        grid = grid_or(128);
        tolerance = tol_or(1e-8);
        auto f1 = sample_disc(n, random_disc_field(n, rng, 3, false, 1.5), grid, grid);
        auto f2 = sample_disc(n, random_disc_field(n, rng, 3, false, 1.5), grid, grid);
        auto f3 = sample_disc(n, random_disc_field(n, rng, 3, true, 1.5), grid, grid);
        auto r = verify_gamma_cocycle(f1, f2, f3);
        measured = r.residual;
        out.results = Json{{"gamma_12", gamma_disc(f1, f2)}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}};
    } else if (a.check == "phi") {
        grid = grid_or(24);
        tolerance = tol_or(1e-6);
        auto g1 = random_disc_field(n, rng, 2, true, 2.0), g2 = random_disc_field(n, rng, 2, true, 2.0);
        auto r = phi_homomorphism_check(n, g1, g2, grid, grid, grid);
        measured = r.residual;
        out.results = Json{{"c12", r.c12}, {"c1", r.c1},         {"c2", r.c2},
                           {"gamma", r.gamma}, {"defect", r.defect}, {"residual", r.residual}};
    } else if (a.check == "wzw") {
        grid = grid_or(24);
        tolerance = tol_or(1e-6);
        double bubble = wzw_term(degree_one_bubble(grid, grid, grid));
        auto cmp = compare_extensions(random_disc_field(2, rng, 2, true, 2.0), grid, grid, grid);
        measured = std::max(std::abs(bubble - 1.0), cmp.distance_to_integer);
        out.results = Json{{"bubble", bubble}, {"c", cmp.c}, {"c_other", cmp.c_other},
                           {"difference", cmp.difference}, {"residual", measured}};
    } else if (a.check == "winding") {
        grid = grid_or(24);
        tolerance = tol_or(1e-6);
        double w = winding_s3(standard_s3_map(grid, grid, 2 * grid));
        measured = std::abs(w - 1.0);
        out.results = Json{{"winding", w}, {"residual", measured}};
    } else if (a.check == "jacobi") {
        grid = grid_or(32);
        tolerance = tol_or(1e-6);
        auto z = random_based_path(n, grid, rng), e = random_based_path(n, grid, rng), x = random_based_path(n, grid, rng);
        auto j = jacobi_defect(z, e, x);
        measured = j.residual;
        out.results = Json{{"defect", j.defect}, {"boundary_term", j.boundary_term}, {"residual", j.residual},
                           {"constant", kJacobiBoundaryConstant}};
    } else if (a.check == "lambda") {
        grid = grid_or(256);
        tolerance = tol_or(1e-8);
        auto g = random_group_loop(n, grid, rng);
        auto z = random_loop_algebra(n, grid, rng), e = random_loop_algebra(n, grid, rng);
        auto l = lambda_check(g, z, e);
        measured = l.residual;
        out.results = Json{{"lhs", l.lhs}, {"lambda", l.lambda}, {"residual", l.residual},
                           {"literal_residual", l.literal_residual}};
    } else if (a.check == "hs") {
        const int M = a.cutoff;
        grid = grid_or(std::max(256, 4 * M));
        tolerance = tol_or(0.02);
        if (a.k < 0) throw InputError("--k must be non-negative for hs");
        auto f = random_twisted_loop(n, a.k % n, grid, rng, 4, 0.8);
        auto lo = hs_offdiag_norm(f, M), hi = hs_offdiag_norm(f, 2 * M);
        measured = hi.ratio > 0 ? std::abs(hi.ratio - lo.ratio) / hi.ratio : 0.0;
        out.results = Json{{"norm2", hi.norm2}, {"mode_sum", hi.mode_sum}, {"ratio", hi.ratio},
                           {"ratio_half_cutoff", lo.ratio}, {"drift", measured}};
    } else if (a.check == "su-quotient") {
        auto o = run_su_quotient(SuArgs{a.n, a.p, a.k, false}, details);
        o.manifest.tolerances = Json::object();
        return o;
    } else {
        throw InputError("unknown loop check '" + a.check + "'");
    }
    out.results["pass"] = measured <= tolerance;
    out.negative = !(measured <= tolerance);
    out.manifest.tolerances = Json{{"residual", tolerance}};
    out.manifest.grid = Json{{"size", grid}};
    return out;
}

struct SuiteArgs {
    std::string criteria;
};

Outcome run_suite_command(const SuiteArgs& a, uint64_t seed) {
    Outcome out;
    std::vector<int> ids = parse_index_list(a.criteria);
    if (ids.empty())
        for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
    SuiteOptions opts;
    opts.seed = seed;
    Json reports = Json::array();
    bool all = true;
    for (int id : ids) {
        auto r = run_criterion(id, opts);
        log(summary_line(r));
        for (const auto& f : r.failures) log("  " + f);
        all = all && r.pass;
        reports.push_back(r.to_json());
    }
    out.results = Json{{"criteria", reports}, {"all_pass", all}};
    out.negative = !all;
    return out;
}

// ---- configuration and manifests ------------------------------------------------

// Rebuilds argv with values from --config FILE: a JSON object of flag values,
// or a run manifest ({"command":..., "inputs":{...}}). Flags given on the
// command line win.
std::vector<std::string> expand_config(int argc, char** argv, const std::set<std::string>& commands) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + long(i), args.begin() + long(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + long(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file " + path);
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError(std::string("malformed config file: ") + e.what());
    }
    if (!cfg.is_object()) throw InputError("config file must hold a JSON object");
    Json inputs = cfg.contains("inputs") ? cfg["inputs"] : cfg;
    bool has_command = false;
    for (const auto& a : args) has_command = has_command || commands.count(a);
    if (!has_command) {
        if (!cfg.contains("command") || !cfg["command"].is_string())
            throw InputError("config file names no command and none was given");
        args.insert(args.begin(), cfg["command"].get<std::string>());
    }
    std::set<std::string> given;
    for (const auto& a : args)
        if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
    if (cfg.contains("seed") && !given.count("seed")) {
        args.push_back("--seed");
        args.push_back(cfg["seed"].dump());
        given.insert("seed");
    }
    for (const auto& [key, value] : inputs.items()) {
        if (given.count(key)) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back("--" + key);
        } else if (value.is_array()) {
            for (const auto& v : value) {
                args.push_back("--" + key);
                args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            }
        } else {
            args.push_back("--" + key);
            args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    return args;
}

Json recorded_inputs(const CLI::App* sub) {
    Json inputs = Json::object();
    for (const CLI::Option* o : sub->get_options()) {
        if (o == sub->get_help_ptr()) continue;
        const std::string& name = o->get_single_name();
        if (o->get_type_size_max() == 0) {
            if (o->count() > 0) inputs[name] = true;
            continue;
        }
        if (o->count() > 0) {
            auto r = o->results();
            if (o->get_items_expected_max() > 1)
                inputs[name] = r;
            else
                inputs[name] = r.back();
        } else if (!o->get_default_str().empty()) {
            inputs[name] = o->get_default_str();
        }
    }
    return inputs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical cocycle computations with JSON reports", "cocycle-forge"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kToolVersion);

    std::string manifest_path;
    int threads = 0;
    uint64_t seed = 1;
    bool details = false, pretty = false;
    app.add_option("--manifest", manifest_path, "write a run manifest (JSON) to this file");
    app.add_option("--threads", threads, "worker threads (overrides COCYCLE_FORGE_THREADS)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for random instances")->capture_default_str();
    app.add_flag("--details", details, "add secondary fields to the report");
    app.add_flag("--pretty", pretty, "indent the JSON report");
    std::string config_path;    // consumed by expand_config before parsing
    app.add_option("--config", config_path, "JSON file of flag values, or a run manifest to replay");

    CohomologyArgs coh;
    auto* c_coh = app.add_subcommand("cohomology", "H^p(G, A) by Smith normal form");
    c_coh->add_option("--group", coh.group, "group, e.g. cyclic:4 or cyclic:2xcyclic:2")->required();
    c_coh->add_option("--coeff", coh.coeff, "module, e.g. torsion:2 or free:1")->required();
    c_coh->add_option("--action", coh.action, "action of G on A (JSON); trivial when omitted");
    c_coh->add_option("--degree", coh.degree, "degree p")->required()->check(CLI::Range(0, kDefaultMaxDegree));
    c_coh->add_flag("--oracle", coh.oracle, "compare with brute-force enumeration");
    c_coh->add_flag("--generators", coh.generators, "list representative cocycles");
    c_coh->add_flag("--expect-trivial", coh.expect_trivial, "exit 1 when the group is nonzero");

    ExtensionArgs ext;
    auto* c_ext = app.add_subcommand("extension", "build A x_(S,f) G from a factor system");
    c_ext->add_option("--group", ext.group, "base group G");
    c_ext->add_option("--fiber", ext.fiber, "abelian fiber A");
    c_ext->add_option("--action", ext.action, "action of G on A (JSON)");
    c_ext->add_option("--cocycle", ext.cocycle, "2-cochain {\"g1,g2\": value}; zero when omitted");
    c_ext->add_flag("--random", ext.random, "check the factor-system criterion on a random system");
    c_ext->add_option("--max-order", ext.max_order, "order bound for --random")->check(CLI::Range(2, 6));

    LiftArgs lift;
    auto* c_lift = app.add_subcommand("lift", "obstruction to lifting G -> Aut to the extension of N");
    add_instance_options(c_lift, lift.inst, "nonzero-obstruction");
    c_lift->add_flag("--exhaustive", lift.exhaustive, "also search all lifts (|hat| <= 16)");
    c_lift->add_flag("--expect-trivial", lift.expect_trivial, "exit 1 when no lift exists");

    CrossedArgs cm;
    auto* c_cm = app.add_subcommand("crossed-module", "characteristic class and structural cocycles");
    c_cm->add_option("--kind", cm.kind, "conjugation, quotient, doubling or doubling-twisted")->capture_default_str();
    c_cm->add_option("--group", cm.group, "group G");
    c_cm->add_option("--normal", cm.normal, "normal subgroup (conjugation) or K (quotient)");
    c_cm->add_option("--center", cm.center, "central subgroup C for kind quotient");
    c_cm->add_flag("--orbits", cm.orbits, "enumerate structural cocycles and test the H2 action");
    c_cm->add_flag("--expect-trivial", cm.expect_trivial, "exit 1 when the class is nonzero");

    TransgressArgs tr;
    auto* c_tr = app.add_subcommand("transgress", "transgression tau and prolongations");
    add_instance_options(c_tr, tr.inst, "a4-s4, a4-s4:z4, a4-s4:z4-sign");
    c_tr->add_flag("--expect-trivial", tr.expect_trivial, "exit 1 when tau is nonzero");

    TorusArgs tor;
    auto* c_tor = app.add_subcommand("torus", "cocycles on Z^n from antisymmetric tensors");
    c_tor->add_option("--n", tor.n, "rank n")->required();
    c_tor->add_option("--tensor", tor.tensor, "entries p,q,r=v (1-based), ';'-separated or repeated");

    LoopArgs lp;
    auto* c_loop = app.add_subcommand("loop", "loop-group numerics");
    c_loop->add_option("check,--check", lp.check, "gamma, phi, wzw, winding, jacobi, lambda, hs or su-quotient")
        ->required()
        ->check(CLI::IsMember({"gamma", "phi", "wzw", "winding", "jacobi", "lambda", "hs", "su-quotient"}));
    c_loop->add_option("--n", lp.n, "rank of SU(n)")->capture_default_str();
    c_loop->add_option("--p", lp.p, "p for su-quotient")->capture_default_str();
    c_loop->add_option("--k", lp.k, "level k (su-quotient) or twist q (hs)")->capture_default_str();
    c_loop->add_option("--grid", lp.grid, "grid size; per-check default when 0")->capture_default_str();
    c_loop->add_option("--cutoff", lp.cutoff, "mode cutoff M for hs (compared with 2M)")->capture_default_str();
    c_loop->add_option("--tol", lp.tol, "tolerance; per-check default when omitted");

    SuArgs su;
    auto* c_su = app.add_subcommand("su-quotient", "phase of the SU(n)/Z_p lift at level k");
    c_su->add_option("--n", su.n, "n")->required();
    c_su->add_option("--p", su.p, "p, dividing n")->required();
    c_su->add_option("--k", su.k, "level k >= 1")->required();
    c_su->add_flag("--expect-trivial", su.expect_trivial, "exit 1 when Omega is nontrivial");

    SuiteArgs st;
    auto* c_suite = app.add_subcommand("suite", "acceptance criteria, PASS/FAIL lines on stderr");
    c_suite->add_option("--criteria", st.criteria, "comma-separated ids; all when omitted");

    std::set<std::string> commands;
    for (const auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) commands.insert(sub->get_name());

    auto emit_error = [&](const std::string& msg) {
        log("error: " + msg);
        std::cout << Json{{"error", msg}}.dump() << std::endl;
        return kExitInput;
    };

    std::vector<std::string> args;
    try {
        args = expand_config(argc, argv, commands);
    } catch (const InputError& e) {
        return emit_error(e.what());
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error(e.what());
    }

    if (threads > 0) setenv("COCYCLE_FORGE_THREADS", std::to_string(threads).c_str(), 1);

    Outcome out;
    const CLI::App* chosen = app.get_subcommands().front();
    try {
        const std::string name = chosen->get_name();
        if (name == "cohomology") out = run_cohomology(coh, details);
        else if (name == "extension") out = run_extension(ext, seed, details);
        else if (name == "lift") out = run_lift(lift, seed, details);
        else if (name == "crossed-module") out = run_crossed(cm, details);
        else if (name == "transgress") out = run_transgress(tr, seed, details);
        else if (name == "torus") out = run_torus(tor, details);
        else if (name == "loop") out = run_loop(lp, seed, details);
        else if (name == "su-quotient") out = run_su_quotient(su, details);
        else out = run_suite_command(st, seed);
    } catch (const InputError& e) {
        return emit_error(e.what());
    } catch (const ResourceError& e) {
        return emit_error(std::string("resource limit: ") + e.what());
    }

    std::cout << (pretty ? out.results.dump(2) : out.results.dump()) << std::endl;

    if (!manifest_path.empty()) {
        RunManifest& m = out.manifest;
        m.command = chosen->get_name();
        m.inputs = recorded_inputs(chosen);
        if (details) m.inputs["details"] = true;
        m.seed = seed;
        m.digest = results_digest(out.results);
        std::ofstream mf(manifest_path);
        if (!mf) return emit_error("cannot write manifest " + manifest_path);
        mf << m.to_json().dump(2) << "\n";
        log("manifest written to " + manifest_path);
    }
    return out.negative ? kExitNegative : 0;
}
