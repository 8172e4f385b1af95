#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "cocycle/loop.hpp"
#include "cocycle/parallel.hpp"

using namespace cocycle;

namespace {

constexpr double kPi = std::numbers::pi;

AlgebraField zero_field(int n) {
    return [n](const std::vector<double>& c) {
        return AlgebraJet{Mat::Zero(n, n), std::vector<Mat>(c.size(), Mat::Zero(n, n))};
    };
}

AlgebraField negated(const AlgebraField& f) {
    return [f](const std::vector<double>& c) {
        AlgebraJet j = f(c);
        j.X = -j.X;
        for (auto& d : j.d) d = -d;
        return j;
    };
}

// Off-diagonal Hilbert-Schmidt norm squared of the truncated multiplication
// operator, with matrix elements integrated directly on the samples.
double dense_offdiag_norm2(const SampledLoop& f, int M) {
    const int K = int(f.K());
    double theta = std::arg(f.twist(0, 0)) / (2 * kPi);
    if (theta < 0) theta += 1.0;
    double total = 0;
    for (int m = -M; m < M; ++m)
        for (int mp = -M; mp < M; ++mp) {
            if ((m >= 0) == (mp >= 0)) continue;
            Mat block = Mat::Zero(f.n, f.n);
            for (int j = 0; j < K; ++j) {
                double t = 2 * kPi * j / K;
                block += std::polar(1.0, (m - mp - theta) * t) * f.values[size_t(j)];
            }
            total += (block / double(K)).squaredNorm();
        }
    return total;
}

// Omega evaluated on the 3-cycle sum_a [1|a|1], which generates H_3(Z_p, Z);
// a 3-class with trivial coefficients vanishes iff this value does.
int64_t fundamental_cycle_value(const Cochain& omega, int p) {
    int64_t m = omega.module().torsion.at(0), total = 0;
    for (int a = 0; a < p; ++a) total += omega.at({1, a, 1}).at(0);
    return total % m;
}

}  // namespace

TEST_CASE("exponential jets match finite differences") {
    std::mt19937_64 rng(1);
    for (int n : {2, 3, 4}) {
        Mat X = random_su_algebra(n, rng, 1.5);
        Mat dX = random_su_algebra(n, rng);
        ExpJet j = exp_jet(X, {dX});
        CHECK(is_special_unitary(j.g, 1e-12));
        const double h = 1e-5;
        Mat fd = (expm_su(X + h * dX) - expm_su(X - h * dX)) / (2 * h);
        CHECK((j.g * j.left[0] - fd).norm() < 1e-8);
        CHECK(is_su_algebra(j.left[0], 1e-12));
    }
    // repeated eigenvalues take the commuting branch
    Mat Z = Mat::Zero(2, 2);
    Mat d = su2_basis()[0];
    CHECK((exp_jet(Z, {d}).left[0] - d).norm() < 1e-15);
}

TEST_CASE("invariant form on su(2)") {
    auto B = su2_basis();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(inner(B[size_t(a)], B[size_t(b)]) == doctest::Approx(a == b ? 2.0 : 0.0));
    CHECK((bracket(B[0], B[1]) + 2.0 * B[2]).norm() < 1e-15);
}

TEST_CASE("Lie algebra cocycle omega") {
    auto B = su2_basis();
    const Mat X = B[0] + 0.5 * B[2], Y = B[0] - B[1];
    auto zeta = sample_loop_algebra(2, 64, [&](double t) -> Mat { return X * std::sin(t); });
    auto eta = sample_loop_algebra(2, 64, [&](double t) -> Mat { return Y * std::cos(t); });
    CHECK(lie_cocycle_omega(zeta, eta) == doctest::Approx(-kPi * inner(X, Y)).epsilon(1e-13));
    CHECK(std::abs(lie_cocycle_omega(zeta, zeta)) < 1e-13);
    auto constant = sample_loop_algebra(2, 64, [&](double) -> Mat { return Y; });
    CHECK(std::abs(lie_cocycle_omega(zeta, constant)) < 1e-13);

    std::mt19937_64 rng(2);
    auto a = random_loop_algebra(3, 64, rng), b = random_loop_algebra(3, 64, rng);
    CHECK(lie_cocycle_omega(a, b) == doctest::Approx(-lie_cocycle_omega(b, a)).epsilon(1e-12));
    CHECK(lie_cocycle_omega(a, b, 2.5) == doctest::Approx(2.5 * lie_cocycle_omega(a, b)));

    auto short_loop = random_loop_algebra(3, 32, rng);
    CHECK_THROWS_AS(lie_cocycle_omega(a, short_loop), InputError);
    CHECK_THROWS_AS(sample_based_path(2, 8, [&](double) { return AlgebraJet{X, {Mat::Zero(2, 2)}}; }), InputError);
}

TEST_CASE("lambda identity on loops") {
    std::mt19937_64 rng(3);
    auto zeta = random_loop_algebra(2, 64, rng), eta = random_loop_algebra(2, 64, rng);
    auto one = sample_group_loop(2, 64, [](double) -> Mat { return Mat::Identity(2, 2); });
    CHECK(lambda_check(one, zeta, eta).residual < 1e-14);

    for (int n : {2, 3}) {
        std::mt19937_64 r(10 + n);
        auto g = random_group_loop(n, 256, r);
        auto z = random_loop_algebra(n, 256, r), e = random_loop_algebra(n, 256, r);
        auto l = lambda_check(g, z, e);
        CHECK(l.residual <= 1e-8);
        // the bracket taken as [zeta, eta] misses by twice lambda
        CHECK(l.literal_residual == doctest::Approx(2 * std::abs(l.lambda)).epsilon(1e-6));
        CHECK(std::abs(l.lambda) > 1e-3);
    }

    // residual falls at least fourfold per doubling until the floor
    double previous = -1;
    for (int K : {16, 32, 64, 128, 256}) {
        std::mt19937_64 r(7);
        auto g = random_group_loop(2, K, r);
        auto z = random_loop_algebra(2, K, r), e = random_loop_algebra(2, K, r);
        double res = lambda_check(g, z, e).residual;
        if (previous > 1e-12) CHECK(res * 4 <= previous);
        previous = res;
    }

    std::mt19937_64 r(4);
    auto twisted = random_twisted_loop(2, 1, 64, r);
    CHECK_THROWS_AS(lambda_value(twisted, zeta), InputError);
}

TEST_CASE("sampled loops are validated") {
    CHECK_THROWS_AS(sample_group_loop(2, 16, [](double) -> Mat { return 2.0 * Mat::Identity(2, 2); }), InputError);
    auto B = su2_basis();
    // ends at exp(i sigma_z / 2), not central
    CHECK_THROWS_AS(sample_group_loop(2, 16, [&](double t) { return expm_su(t / (4 * kPi) * B[2]); }), InputError);
    std::mt19937_64 rng(5);
    auto f = random_twisted_loop(3, 1, 32, rng);
    CHECK((f.twist - central_twist(3, 1)).norm() < 1e-12);
}

TEST_CASE("gamma on discs") {
    std::mt19937_64 rng(6);
    auto f = sample_disc(2, random_disc_field(2, rng, 2, false, 1.2), 64, 64);
    auto h = sample_disc(2, random_disc_field(2, rng, 2, false, 1.2), 64, 64);
    auto one = sample_disc(2, zero_field(2), 64, 64);
    CHECK(gamma_disc(f, one) == 0.0);
    CHECK(std::abs(gamma_disc(f, h)) > 1e-3);

    double direct = gamma_disc(f, f.inverse());
    double via_identity = gamma_disc(h, f) + gamma_disc(h * f, f.inverse());
    CHECK(std::abs(direct - via_identity) <= 1e-8);

    for (int n : {2, 3}) {
        auto a = sample_disc(n, random_disc_field(n, rng, 3, false, 1.5), 128, 128);
        auto b = sample_disc(n, random_disc_field(n, rng, 3, false, 1.5), 128, 128);
        auto c = sample_disc(n, random_disc_field(n, rng, 3, true, 1.5), 128, 128);
        CHECK(verify_gamma_cocycle(a, b, c).residual <= 1e-8);
        CHECK(verify_gamma_cocycle(c, a, b).residual <= 1e-8);
    }

    auto coarse = sample_disc(2, random_disc_field(2, rng), 32, 32);
    CHECK_THROWS_AS(gamma_disc(f, coarse), InputError);

    // the quadrature converges as the grid is refined
    std::mt19937_64 r(8);
    auto F1 = random_disc_field(2, r, 2, false, 1.2), F2 = random_disc_field(2, r, 2, false, 1.2);
    double g16 = gamma_disc(sample_disc(2, F1, 16, 16), sample_disc(2, F2, 16, 16));
    double g32 = gamma_disc(sample_disc(2, F1, 32, 32), sample_disc(2, F2, 32, 32));
    double g64 = gamma_disc(sample_disc(2, F1, 64, 64), sample_disc(2, F2, 64, 64));
    CHECK(std::abs(g64 - g32) * 4 <= std::max(std::abs(g32 - g16), 1e-13));
    CHECK(std::abs(g64 - g32) < 1e-10);
}

TEST_CASE("WZW term and S3 winding") {
    CHECK(wzw_term(radial_extension(2, zero_field(2), 8, 8, 8)) == 0.0);
    CHECK(winding_s3(standard_s3_map(24, 24, 48)) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(winding_s3(standard_s3_map(24, 24, 48)) - 1.0) <= 1e-6);
    CHECK(std::abs(wzw_term(degree_one_bubble(24, 24, 24)) - 1.0) <= 1e-6);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 3; ++trial) {
        auto cmp = compare_extensions(random_disc_field(2, rng, 2, true, 2.0), 24, 24, 24);
        CHECK(cmp.distance_to_integer <= 1e-6);
        CHECK(std::lround(cmp.difference) == 1);
    }

    auto open = random_disc_field(2, rng, 2, false);
    CHECK_THROWS_AS(wzw_term(radial_extension(2, open, 8, 8, 8)), InputError);
}

TEST_CASE("C is a homomorphism up to gamma") {
    std::mt19937_64 rng(10);
    auto g1 = random_disc_field(2, rng, 2, true, 2.0);
    auto trivial = phi_homomorphism_check(2, g1, zero_field(2), 16, 16, 16);
    CHECK(trivial.defect == 0.0);
    CHECK(trivial.gamma == 0.0);

    for (int n : {2, 3}) {
        for (int trial = 0; trial < 3; ++trial) {
            auto a = random_disc_field(n, rng, 2, true, 2.0), b = random_disc_field(n, rng, 2, true, 2.0);
            auto r = phi_homomorphism_check(n, a, b, 24, 24, 24);
            CHECK(r.residual <= 1e-6);
            CHECK(std::abs(r.gamma) > 1e-4);
        }
    }

    auto inv = phi_homomorphism_check(2, g1, negated(g1), 24, 24, 24);
    CHECK(std::abs(inv.c12) < 1e-12);
    CHECK(inv.residual <= 1e-6);

    CHECK_THROWS_AS(phi_homomorphism_check(2, g1, random_disc_field(2, rng, 2, false), 8, 8, 8), InputError);
}

TEST_CASE("Jacobi anomaly on based paths") {
    std::mt19937_64 rng(11);
    auto z = random_loop_algebra(2, 64, rng), e = random_loop_algebra(2, 64, rng), x = random_loop_algebra(2, 64, rng);
    CHECK(std::abs(loop_jacobi_defect(z, e, x)) <= 1e-10);
    CHECK_THROWS_AS(jacobi_defect(z, e, x), InputError);

    auto B = su2_basis();
    auto linear = [](const Mat& M) {
        return sample_based_path(2, 16, [M](double t) { return AlgebraJet{t * M, {M}}; });
    };
    auto tX = linear(B[0]), tY = linear(B[1]), tZ = linear(B[2]);
    auto j = jacobi_defect(tX, tY, tZ);
    CHECK(j.residual <= 1e-8);
    CHECK(std::abs(j.boundary_term) > 1.0);

    auto s = jacobi_defect(scaled(tX, 3.0), tY, tZ);
    CHECK(s.defect == doctest::Approx(3.0 * j.defect));
    CHECK(s.boundary_term == doctest::Approx(3.0 * j.boundary_term));

    for (int n : {2, 3}) {
        auto p = random_based_path(n, 32, rng), q = random_based_path(n, 32, rng), r = random_based_path(n, 32, rng);
        CHECK(jacobi_defect(p, q, r, 0.7).residual <= 1e-8);
    }

    std::mt19937_64 cal(12);
    CHECK(std::abs(calibrate_jacobi_constant(cal, 20, 2, 32) - kJacobiBoundaryConstant) <= 1e-8);
}

TEST_CASE("SU(n)/Z_p phase") {
    auto a = su_quotient_phase(2, 2, 1);
    CHECK(a.phase == Rational(1, 2));
    CHECK(a.sign == -1);
    auto ob = su_quotient_obstruction(a);
    CHECK_FALSE(ob.trivial);
    CHECK(ob.omega.at({1, 1, 1}) == Vec{1});
    CHECK(ob.omega.module().torsion == Vec{2});

    CHECK(su_quotient_phase(3, 3, 1).phase == Rational(0));
    CHECK(su_quotient_phase(3, 3, 1).sign == 1);
    CHECK(su_quotient_phase(4, 2, 1).sign == 1);
    CHECK(su_quotient_phase(6, 2, 1).phase == Rational(1, 2));
    CHECK(su_quotient_phase(6, 2, 1).sign == -1);

    for (int n = 2; n <= 12; ++n)
        for (int p = 2; p <= n; ++p) {
            if (n % p) continue;
            for (int k = 1; k <= 4; ++k) {
                auto r = su_quotient_phase(n, p, k);
                if (r.rule_applies) CHECK(r.sign == r.rule_sign);
                if (k % 2 == 0) CHECK(r.sign == 1);
                if (p <= 6) {
                    auto o = su_quotient_obstruction(r);
                    CHECK(o.cocycle);
                    CHECK(o.trivial == (r.sign == 1));
                    CHECK(o.trivial == (fundamental_cycle_value(o.omega, p) == 0));
                }
            }
        }

    CHECK_THROWS_AS(su_quotient_phase(4, 3, 1), InputError);
    CHECK_THROWS_AS(su_quotient_phase(4, 2, 0), InputError);
    CHECK_THROWS_AS(su_quotient_phase(4, 1, 1), InputError);
}

TEST_CASE("Hilbert-Schmidt norm of the off-diagonal blocks") {
    auto constant = sample_group_loop(2, 64, [](double) -> Mat {
        Mat g(2, 2);
        g << 0, 1, -1, 0;
        return g;
    });
    auto c = hs_offdiag_norm(constant, 16);
    CHECK(c.norm2 == 0.0);
    CHECK(c.mode_sum == 0.0);

    auto single = sample_group_loop(2, 64, [](double t) -> Mat {
        Mat g = Mat::Zero(2, 2);
        g(0, 0) = std::polar(1.0, t);
        g(1, 1) = std::polar(1.0, -t);
        return g;
    });
    auto s = hs_offdiag_norm(single, 8);
    CHECK(s.norm2 == doctest::Approx(2.0));
    CHECK(s.mode_sum == doctest::Approx(2.0));

    std::mt19937_64 rng(13);
    auto small = random_twisted_loop(2, 1, 64, rng, 3, 0.8);
    CHECK(hs_offdiag_norm(small, 8).norm2 == doctest::Approx(dense_offdiag_norm2(small, 8)).epsilon(1e-10));

    for (auto [n, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
        auto f = random_twisted_loop(n, q, 256, rng, 4, 0.8);
        auto h32 = hs_offdiag_norm(f, 32), h64 = hs_offdiag_norm(f, 64);
        CHECK(h64.norm2 > 0);
        CHECK(std::abs(h64.ratio - h32.ratio) <= 0.02 * h64.ratio);
    }
    CHECK_THROWS_AS(hs_offdiag_norm(small, 33), InputError);
}

TEST_CASE("results do not depend on the thread count") {
    std::mt19937_64 rng(14);
    auto F1 = random_disc_field(3, rng, 2, false, 1.0), F2 = random_disc_field(3, rng, 2, false, 1.0);
    setenv("COCYCLE_FORGE_THREADS", "1", 1);
    double one = gamma_disc(sample_disc(3, F1, 48, 48), sample_disc(3, F2, 48, 48));
    setenv("COCYCLE_FORGE_THREADS", "4", 1);
    CHECK(thread_count() == 4);
    double four = gamma_disc(sample_disc(3, F1, 48, 48), sample_disc(3, F2, 48, 48));
    unsetenv("COCYCLE_FORGE_THREADS");
    CHECK(one == four);

    std::vector<double> v(1000);
    for (size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / double(i + 1);
    double seq = 0;
    for (double x : v) seq += x;
    CHECK(pairwise_sum(v) == doctest::Approx(seq).epsilon(1e-14));
}
