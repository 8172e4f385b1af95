#pragma once

// Loop-group cocycles on SU(n) by quadrature. Maps are built in generator
// form g = exp(X) so Maurer-Cartan forms come out analytically and the only
// error is quadrature: trapezoid in periodic directions, Gauss-Legendre
// elsewhere.

#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "cocycle/crossed_module.hpp"
#include "cocycle/rational.hpp"

namespace cocycle {

using Mat = Eigen::MatrixXcd;

// Normalization of the invariant form: <X,Y> = -tr(XY), so the longest root
// of su(n) has length squared 2. Fixed by the degree-1 winding test.
inline constexpr double kThetaSquared = 2.0;

// c in the Jacobi boundary term c <zeta(2pi), [eta(2pi), xi(2pi)]>, frozen
// from calibrate_jacobi_constant.
inline constexpr double kJacobiBoundaryConstant = 1.0;

double inner(const Mat& X, const Mat& Y);
Mat bracket(const Mat& X, const Mat& Y);
Mat expm_su(const Mat& X);
bool is_su_algebra(const Mat& X, double tol = 1e-10);
bool is_special_unitary(const Mat& g, double tol = 1e-10);
Mat random_su_algebra(int n, std::mt19937_64& rng, double scale = 1.0);
// i sigma_x, i sigma_y, i sigma_z
std::vector<Mat> su2_basis();

// g = exp(X) and g^-1 dg along each direction in dX.
struct ExpJet {
    Mat g;
    std::vector<Mat> left;
};
ExpJet exp_jet(const Mat& X, const std::vector<Mat>& dX);

// su(n)-valued field and its partial derivatives at a point.
struct AlgebraJet {
    Mat X;
    std::vector<Mat> d;
};
using AlgebraField = std::function<AlgebraJet(const std::vector<double>&)>;

struct Grid1 {
    std::vector<double> nodes;
    std::vector<double> weights;
    bool periodic = false;
    bool operator==(const Grid1& o) const { return nodes == o.nodes && periodic == o.periodic; }
};
Grid1 gauss_legendre(int count, double a, double b);
Grid1 periodic_grid(int count);     // nodes 2 pi k / count

// Group-valued map on a tensor grid (last axis fastest) with its left forms
// g^-1 d_i g and right forms d_i g g^-1.
struct GridMap {
    int n = 0;
    std::vector<Grid1> axes;
    std::vector<Mat> g;
    std::vector<std::vector<Mat>> left;
    std::vector<std::vector<Mat>> right;

    size_t size() const { return g.size(); }
    double weight(size_t idx) const;
    GridMap operator*(const GridMap& o) const;
    GridMap inverse() const;
};
GridMap sample_field(int n, const std::vector<Grid1>& axes, const AlgebraField& X);

// ---- Lie algebra paths and loops ------------------------------------------

// Periodic paths sit on the uniform grid with derivatives by Fourier
// differentiation; based paths (zeta(0) = 0) on Gauss-Legendre nodes over
// [0, 2 pi] with analytic derivatives.
struct LieAlgebraPath {
    int n = 0;
    bool periodic = true;
    Grid1 grid;
    std::vector<Mat> values;
    std::vector<Mat> derivs;
    Mat end_value;                  // value at t = 2 pi

    size_t size() const { return values.size(); }
};

LieAlgebraPath sample_loop_algebra(int n, int K, const std::function<Mat(double)>& f);
// f returns the value and its t-derivative in d[0]. Throws InputError when
// f(0) != 0.
LieAlgebraPath sample_based_path(int n, int K, const std::function<AlgebraJet(double)>& f);
LieAlgebraPath random_loop_algebra(int n, int K, std::mt19937_64& rng, int modes = 3);
LieAlgebraPath random_based_path(int n, int K, std::mt19937_64& rng, int modes = 3);
LieAlgebraPath bracket(const LieAlgebraPath& a, const LieAlgebraPath& b);
LieAlgebraPath scaled(const LieAlgebraPath& a, double s);

// c * int_0^{2 pi} <zeta, eta'> dt. Throws InputError on grid mismatch.
double lie_cocycle_omega(const LieAlgebraPath& zeta, const LieAlgebraPath& eta, double c = 1.0);

struct SampledLoop {
    int n = 0;
    std::vector<Mat> values;        // at t_k = 2 pi k / K
    Mat twist;                      // f(2 pi) f(0)^-1, central

    size_t K() const { return values.size(); }
};

// e^{2 pi i q / n} I
Mat central_twist(int n, int q);
// Throws InputError when a value is not in SU(n) or the twist is not central.
SampledLoop sample_group_loop(int n, int K, const std::function<Mat(double)>& f);
// exp(X(t)) with X a periodic trigonometric polynomial, X(0) = 0.
SampledLoop random_group_loop(int n, int K, std::mt19937_64& rng, int modes = 3, double scale = 0.5);
// exp(t D) exp(X(t)) with exp(2 pi D) = central_twist(n, q).
SampledLoop random_twisted_loop(int n, int q, int K, std::mt19937_64& rng, int modes = 3, double scale = 0.5);

// g zeta g^-1, differentiated spectrally.
LieAlgebraPath adjoint(const SampledLoop& g, const LieAlgebraPath& zeta);
// lambda(g)(mu) = int <g^-1 g', mu> dt
double lambda_value(const SampledLoop& g, const LieAlgebraPath& mu);

struct LambdaCheck {
    double lhs = 0;                 // omega(g.zeta, g.eta) - omega(zeta, eta)
    double lambda = 0;              // lambda(g)([eta, zeta])
    double residual = 0;            // |lhs - lambda(g)([eta, zeta])|
    double literal_residual = 0;    // |lhs - lambda(g)([zeta, eta])|
};
LambdaCheck lambda_check(const SampledLoop& g, const LieAlgebraPath& zeta, const LieAlgebraPath& eta);

// ---- discs and balls ------------------------------------------------------

// Disc maps over (r, phi) with r Gauss-Legendre on [0,1], phi periodic.
struct SampledDiscMap {
    GridMap map;
    std::vector<Mat> boundary;      // r = 1 on the phi grid
    bool boundary_trivial = false;

    SampledDiscMap operator*(const SampledDiscMap& o) const;
    SampledDiscMap inverse() const;
};

// X(r, phi) = sum_k r^k (A_k cos k phi + B_k sin k phi) rho(r), with
// rho = (1 - r^2)^2 when boundary_trivial, else rho = 1.
AlgebraField random_disc_field(int n, std::mt19937_64& rng, int modes = 2, bool boundary_trivial = true,
                               double scale = 0.6);
SampledDiscMap sample_disc(int n, const AlgebraField& field, int n_r, int n_phi);

// theta^2 / 16 pi^2 int_D <f1^-1 df1, df2 f2^-1>. Throws InputError on grid
// mismatch.
double gamma_disc(const SampledDiscMap& f1, const SampledDiscMap& f2);

struct GammaCocycleCheck {
    double lhs = 0;                 // gamma(f1,f2) + gamma(f1 f2, f3)
    double rhs = 0;                 // gamma(f2,f3) + gamma(f1, f2 f3)
    double residual = 0;
};
GammaCocycleCheck verify_gamma_cocycle(const SampledDiscMap& f1, const SampledDiscMap& f2,
                                       const SampledDiscMap& f3);

// Ball maps over cone coordinates (s, r, phi) -> s sigma(r, phi), where
// sigma: D -> S^2 collapses the boundary circle to a pole.
struct SampledBallMap {
    GridMap map;
    std::vector<Mat> sphere;        // s = 1 on the (r, phi) grid
    std::vector<Mat> pole;          // s = 1, r = 1 on the phi grid

    SampledBallMap operator*(const SampledBallMap& o) const;
};

// exp(s X(r, phi)); requires field to vanish at r = 1.
SampledBallMap radial_extension(int n, const AlgebraField& field, int n_s, int n_r, int n_phi);
// SU(2) map exp(i pi (1 - s) n(r, phi) . sigma) with n the unit vector at
// polar angle pi (1 - r): identity on the sphere, -1 at the centre, degree 1
// on the ball modulo its boundary.
SampledBallMap degree_one_bubble(int n_s, int n_r, int n_phi);

// theta^2 / 48 pi^2 int_B <dg g^-1, [dg g^-1, dg g^-1]> / 2. Throws
// InputError when the sphere data is not constant on the pole.
double wzw_term(const SampledBallMap& g);

// Standard map (chi, vartheta, phi) -> exp(i chi n . sigma) of S^3 onto SU(2).
GridMap standard_s3_map(int n_chi, int n_theta, int n_phi);
double winding_s3(const GridMap& h);

struct ExtensionComparison {
    double c = 0;
    double c_other = 0;
    double difference = 0;
    double distance_to_integer = 0;
};
// C of exp(s X) against C of exp(s X) times the degree-one bubble (SU(2)).
ExtensionComparison compare_extensions(const AlgebraField& field, int n_s, int n_r, int n_phi);

struct PhiCheck {
    double c12 = 0;
    double c1 = 0;
    double c2 = 0;
    double gamma = 0;
    double defect = 0;              // c12 - c1 - c2 - gamma
    double residual = 0;            // distance of defect to the nearest integer
};
// Throws InputError when a field is not trivial on the boundary circle.
PhiCheck phi_homomorphism_check(int n, const AlgebraField& g1, const AlgebraField& g2, int n_s, int n_r,
                                int n_phi);

// ---- Jacobi anomaly -------------------------------------------------------

struct JacobiDefect {
    double defect = 0;
    double boundary_term = 0;
    double residual = 0;
};
// defect = omega_c([zeta,eta],xi) + omega_c([eta,xi],zeta) + omega_c([xi,zeta],eta);
// boundary = c kJacobiBoundaryConstant <zeta(2pi), [eta(2pi), xi(2pi)]>.
// Throws InputError on periodic inputs.
JacobiDefect jacobi_defect(const LieAlgebraPath& zeta, const LieAlgebraPath& eta, const LieAlgebraPath& xi,
                           double c = 1.0);
// Same cyclic sum on loops; vanishes up to quadrature error.
double loop_jacobi_defect(const LieAlgebraPath& zeta, const LieAlgebraPath& eta, const LieAlgebraPath& xi,
                          double c = 1.0);
// Least-squares fit of defect = c <zeta(2pi), [eta(2pi), xi(2pi)]> over
// random based paths.
double calibrate_jacobi_constant(std::mt19937_64& rng, int instances, int n, int K);

// ---- SU(n)/Z_p phase and Hilbert-Schmidt mode sum --------------------------

struct SuQuotientPhase {
    int n = 0, p = 0, k = 0;
    Rational phase{0};              // k n (n-1) / 2p mod 1
    int sign = 1;
    bool rule_applies = false;      // parity rule holds for odd k
    int rule_sign = 1;              // +1 when n odd or n/p even
    LiftData liftdata;              // Omega(x,y,z) = x phase carry(y,z) on Z_p
};
// Throws InputError unless p >= 2 divides n and k >= 1.
SuQuotientPhase su_quotient_phase(int n, int p, int k);
// Class of the lift data in H^3(Z_p, Z_m); cost grows like p^4.
LiftObstruction su_quotient_obstruction(const SuQuotientPhase& r);

struct HsNorm {
    double norm2 = 0;               // off-diagonal Hilbert-Schmidt norm squared
    double mode_sum = 0;            // sum_{0 < |k| <= M} |k| |a_k|^2
    double ratio = 0;
};
// Fourier coefficients a_k of exp(-i theta t) f(t), e^{2 pi i theta} the twist;
// multiplication H_1 -> H_z on modes [-M, M). Throws InputError when M > K/2.
HsNorm hs_offdiag_norm(const SampledLoop& f, int M);

}  // namespace cocycle
