#include "cocycle/transgression.hpp"

namespace cocycle {

TransgressionResult transgress(const LiftingInstance& inst) {
    TransgressionResult r;
    r.h1_zero = cohomology(inst.SN, 1).trivial();
    if (!r.h1_zero) {
        r.status = "H1 nonzero";
        return r;
    }
    auto theta = invariance_witness(inst);
    r.invariant = theta.has_value();
    if (!r.invariant) {
        r.status = "not invariant";
        return r;
    }
    GammaConstruction gc = gamma_construction(inst, *theta);
    CrossedModuleData d = validate(gc.cm);
    r.quotient_order = d.H.H.order();
    r.tau = characteristic_class(d);
    r.tau_zero = r.tau->class_zero;
    r.status = "ok";
    return r;
}

namespace {

// Restriction C^2(G, A) -> C^2(N, A).
IntMatrix restriction_matrix(const LiftingInstance& inst) {
    const int dim = inst.A().dim();
    const int ng = inst.G.order(), nn = inst.N.group.order();
    IntMatrix R(int(normalized_count(nn, 2)) * dim, int(normalized_count(ng, 2)) * dim);
    for (int a = 1; a < nn; ++a)
        for (int b = 1; b < nn; ++b) {
            int64_t i = tuple_index({a, b}, nn);
            int64_t j = tuple_index({inst.N.elements[a], inst.N.elements[b]}, ng);
            for (int k = 0; k < dim; ++k) R(int(i * dim + k), int(j * dim + k)) = 1;
        }
    return R;
}

// Rows of top over rows of bottom; bottom gets extra leading zero columns
// when it is narrower.
IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
    IntMatrix M(top.rows + bottom.rows, std::max(top.cols, bottom.cols));
    for (int i = 0; i < top.rows; ++i)
        for (int j = 0; j < top.cols; ++j) M(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows; ++i)
        for (int j = 0; j < bottom.cols; ++j) M(top.rows + i, j) = bottom(i, j);
    return M;
}

Vec concat(Vec a, const Vec& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

std::optional<Cochain> prolongation_search(const LiftingInstance& inst) {
    const GAction& S = *inst.S;
    IntMatrix d2 = differential_matrix(S, 2);
    IntMatrix R = restriction_matrix(inst);
    IntMatrix M = stack(d2, R);
    Vec src = cochain_moduli(S, 2);
    Vec tgt = concat(cochain_moduli(S, 3), cochain_moduli(*inst.SN, 2));
    Vec b = concat(Vec(size_t(d2.rows), 0), inst.f.flat());
    auto x = solve(M, b, src, tgt);
    if (!x) return std::nullopt;
    Cochain F = Cochain::from_flat(inst.S, 2, reduce(*x, src));
    if (!is_cocycle(F)) throw std::logic_error("prolongation is not a cocycle");
    ExtensionGroup big = build_extension(abelian_factor_system(S, F));
    const ExtensionGroup& hat = inst.hat;
    auto embed = [&](int e) { return big.index(hat.fiber(e), inst.N.elements[hat.base(e)]); };
    for (int u = 0; u < hat.E.order(); ++u)
        for (int v = 0; v < hat.E.order(); ++v)
            if (embed(hat.E.mul(u, v)) != big.E.mul(embed(u), embed(v)))
                throw std::logic_error("Ahat does not embed in the prolongation");
    return F;
}

bool prolongation_exists_up_to_coboundary(const LiftingInstance& inst) {
    const GAction& S = *inst.S;
    IntMatrix d2 = differential_matrix(S, 2);
    IntMatrix R = restriction_matrix(inst);
    IntMatrix dN = differential_matrix(*inst.SN, 1);
    // unknowns (F, h): d F = 0 and R F - d_N h = f
    IntMatrix M(d2.rows + R.rows, d2.cols + dN.cols);
    for (int i = 0; i < d2.rows; ++i)
        for (int j = 0; j < d2.cols; ++j) M(i, j) = d2(i, j);
    for (int i = 0; i < R.rows; ++i) {
        for (int j = 0; j < R.cols; ++j) M(d2.rows + i, j) = R(i, j);
        for (int j = 0; j < dN.cols; ++j) M(d2.rows + i, d2.cols + j) = -dN(i, j);
    }
    Vec src = concat(cochain_moduli(S, 2), cochain_moduli(*inst.SN, 1));
    Vec tgt = concat(cochain_moduli(S, 3), cochain_moduli(*inst.SN, 2));
    return solve(M, concat(Vec(size_t(d2.rows), 0), inst.f.flat()), src, tgt).has_value();
}

int64_t count_prolongations(const LiftingInstance& inst) {
    if (!prolongation_search(inst)) return -1;
    const GAction& S = *inst.S;
    const int dim = inst.A().dim();
    Vec m2 = cochain_moduli(S, 2);
    IntMatrix M = stack(differential_matrix(S, 2), restriction_matrix(inst));
    Echelon K = kernel_lattice(M, m2, concat(cochain_moduli(S, 3), cochain_moduli(*inst.SN, 2)));
    // coboundaries of 1-cochains vanishing on N
    IntMatrix d1 = differential_matrix(S, 1);
    std::vector<int> cols;
    for (int g = 1; g < inst.G.order(); ++g)
        if (inst.N.index_of[g] < 0)
            for (int k = 0; k < dim; ++k) cols.push_back((g - 1) * dim + k);
    IntMatrix D(d1.rows, int(cols.size()));
    for (int i = 0; i < d1.rows; ++i)
        for (size_t j = 0; j < cols.size(); ++j) D(i, int(j)) = d1(i, cols[j]);
    Echelon B = image_lattice(D, m2);
    return Subquotient(K, B).order();
}

std::shared_ptr<const GAction> quotient_action_on_invariants(const LiftingInstance& inst) {
    FixedSubmodule F = fixed_submodule(*inst.S, inst.N.elements);
    GAction onF = fixed_action(*inst.S, F);
    Quotient Q = quotient(inst.G, inst.N.elements);
    std::vector<IntMat> mats;
    for (int x = 0; x < Q.H.order(); ++x) mats.push_back(onF.matrix(Q.section[x]));
    auto T = std::make_shared<const GAction>(Q.H, onF.module(), mats);
    if (auto err = T->check()) throw std::logic_error("action of G/N on A^N: " + *err);
    return T;
}

LiftingInstance random_transgression_instance(std::mt19937_64& rng) {
    static const std::vector<FiniteGroup> groups = {
        make_cyclic(2), make_cyclic(3), make_cyclic(4), make_cyclic(6), make_cyclic(8),
        make_product(make_cyclic(2), make_cyclic(2)), make_product(make_cyclic(4), make_cyclic(2)),
        make_product(make_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)),
        make_dihedral(3), make_dihedral(4), make_quaternion()};
    static const std::vector<AbelianGroup> modules = {
        AbelianGroup::cyclic(2), AbelianGroup::cyclic(3), AbelianGroup::cyclic(4), AbelianGroup::cyclic(5),
        AbelianGroup::cyclic(6), AbelianGroup::cyclic(7), AbelianGroup::cyclic(8), AbelianGroup::cyclic(9),
        AbelianGroup(0, {2, 2}), AbelianGroup(0, {3, 3}), AbelianGroup(0, {2, 4})};
    for (;;) {
        const FiniteGroup& G = groups[rng() % groups.size()];
        const AbelianGroup& A = modules[rng() % modules.size()];
        auto normals = normal_subgroups(G);
        const auto& N = normals[rng() % normals.size()];
        auto act = rng() % 3 == 0 ? std::optional<GAction>(GAction::trivial(G, A)) : random_action(G, A, rng);
        if (!act) continue;
        auto S = std::make_shared<const GAction>(*act);
        Subgroup sub = make_subgroup(G, N);
        auto SN = std::make_shared<const GAction>(S->restrict_to(sub));
        if (!cohomology(SN, 1).trivial()) continue;
        auto inst = make_lifting_instance(G, N, S, random_cocycle(SN, 2, rng));
        if (!invariance_witness(inst)) continue;
        return inst;
    }
}

LiftingInstance alternating_in_symmetric_instance(int variant) {
    if (variant < 0 || variant > 2) throw InputError("A4 < S4 variant must be 0, 1 or 2");
    FiniteGroup S4 = make_symmetric(4);
    auto parity = permutation_parity(4);
    std::vector<int> even;
    for (int g = 0; g < S4.order(); ++g)
        if (!parity[g]) even.push_back(g);
    AbelianGroup A = AbelianGroup::cyclic(variant == 0 ? 2 : 4);
    std::vector<IntMat> mats;
    for (int g = 0; g < S4.order(); ++g) mats.push_back({{variant == 2 && parity[g] ? -1 : 1}});
    auto S = std::make_shared<const GAction>(S4, A, mats);
    auto SN = std::make_shared<const GAction>(S->restrict_to(make_subgroup(S4, even)));
    auto H2 = cohomology(SN, 2);
    if (H2.invariant_factors != Vec{2}) throw InputError("H^2(A4, A) is not Z2 for this variant");
    return make_lifting_instance(S4, even, S, H2.representative({1}));
}

}  // namespace cocycle
