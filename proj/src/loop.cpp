#include "cocycle/loop.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include <fftw3.h>
#include <gsl/gsl_integration.h>

#include "cocycle/parallel.hpp"

namespace cocycle {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

// In-place DFT of every matrix entry across the sequence; sign is FFTW_FORWARD
// or FFTW_BACKWARD, unnormalized.
std::vector<Mat> dft_entries(const std::vector<Mat>& seq, int sign) {
    const int K = int(seq.size());
    const int rows = int(seq.front().rows()), cols = int(seq.front().cols());
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size_t(K)));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(K, buf, buf, sign, FFTW_ESTIMATE);
    }
    std::vector<Mat> out(size_t(K), Mat::Zero(rows, cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            for (int k = 0; k < K; ++k) {
                buf[k][0] = seq[size_t(k)](i, j).real();
                buf[k][1] = seq[size_t(k)](i, j).imag();
            }
            fftw_execute(plan);
            for (int k = 0; k < K; ++k) out[size_t(k)](i, j) = cd(buf[k][0], buf[k][1]);
        }
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    fftw_free(buf);
    return out;
}

// Signed frequency of DFT bin b; the Nyquist bin maps to 0.
int frequency(int b, int K) {
    if (2 * b == K) return 0;
    return 2 * b < K ? b : b - K;
}

std::vector<Mat> fourier_derivative(const std::vector<Mat>& seq) {
    const int K = int(seq.size());
    auto coeffs = dft_entries(seq, FFTW_FORWARD);
    for (int b = 0; b < K; ++b) coeffs[size_t(b)] *= cd(0.0, double(frequency(b, K)) / double(K));
    return dft_entries(coeffs, FFTW_BACKWARD);
}

// (e^{i x} - 1) / (i x), stable near 0.
cd phi_factor(double x) {
    double h = 0.5 * x;
    double sinc = std::abs(h) < 1e-8 ? 1.0 - h * h / 6.0 : std::sin(h) / h;
    return std::polar(sinc, h);
}

double distance_to_integer(double x) { return std::abs(x - std::round(x)); }

Mat identity(int n) { return Mat::Identity(n, n); }

// Unit vector at polar angle vt, azimuth ph, and its two partials.
struct SpherePoint {
    Eigen::Vector3d n, d_theta, d_phi;
};
SpherePoint sphere_point(double vt, double ph) {
    SpherePoint s;
    s.n = {std::sin(vt) * std::cos(ph), std::sin(vt) * std::sin(ph), std::cos(vt)};
    s.d_theta = {std::cos(vt) * std::cos(ph), std::cos(vt) * std::sin(ph), -std::sin(vt)};
    s.d_phi = {-std::sin(vt) * std::sin(ph), std::sin(vt) * std::cos(ph), 0.0};
    return s;
}

Mat dot_sigma(const Eigen::Vector3d& v) {
    static const std::vector<Mat> basis = su2_basis();
    return v[0] * basis[0] + v[1] * basis[1] + v[2] * basis[2];
}

std::vector<size_t> axis_sizes(const std::vector<Grid1>& axes) {
    std::vector<size_t> s;
    for (const auto& a : axes) s.push_back(a.nodes.size());
    return s;
}

std::vector<size_t> unravel(size_t idx, const std::vector<size_t>& sizes) {
    std::vector<size_t> out(sizes.size());
    for (size_t a = sizes.size(); a-- > 0;) {
        out[a] = idx % sizes[a];
        idx /= sizes[a];
    }
    return out;
}

void require_same_axes(const GridMap& a, const GridMap& b) {
    if (a.n != b.n || a.axes != b.axes) throw InputError("grid mismatch");
}

void require_same_grid(const LieAlgebraPath& a, const LieAlgebraPath& b) {
    if (a.n != b.n || a.periodic != b.periodic || !(a.grid == b.grid)) throw InputError("path grid mismatch");
}

struct TrigTerm {
    Mat A, B;
};

std::vector<TrigTerm> random_terms(int n, std::mt19937_64& rng, int modes, double scale) {
    std::vector<TrigTerm> out;
    for (int j = 1; j <= modes; ++j)
        out.push_back({random_su_algebra(n, rng, scale / j), random_su_algebra(n, rng, scale / j)});
    return out;
}

double trilinear(const Mat& a, const Mat& b, const Mat& c) { return inner(a, bracket(b, c)); }

}  // namespace

// ---- basics ---------------------------------------------------------------

double inner(const Mat& X, const Mat& Y) { return -(X * Y).trace().real(); }

Mat bracket(const Mat& X, const Mat& Y) { return X * Y - Y * X; }

bool is_su_algebra(const Mat& X, double tol) {
    return (X + X.adjoint()).norm() <= tol && std::abs(X.trace()) <= tol;
}

bool is_special_unitary(const Mat& g, double tol) {
    return (g.adjoint() * g - identity(int(g.rows()))).norm() <= tol && std::abs(g.determinant() - 1.0) <= tol;
}

Mat random_su_algebra(int n, std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> N(0.0, 1.0);
    Mat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = cd(N(rng), N(rng));
    Mat X = 0.5 * (A - A.adjoint());
    X -= (X.trace() / double(n)) * identity(n);
    return scale * X;
}

std::vector<Mat> su2_basis() {
    const cd i(0, 1);
    Mat sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, -i, i, 0;
    sz << 1, 0, 0, -1;
    return {i * sx, i * sy, i * sz};
}

ExpJet exp_jet(const Mat& X, const std::vector<Mat>& dX) {
    const int n = int(X.rows());
    Mat H = cd(0, -1) * X;
    H = 0.5 * (H + H.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(H);
    const Mat& U = es.eigenvectors();
    const Eigen::VectorXd& lam = es.eigenvalues();
    Eigen::VectorXcd phases(n);
    for (int j = 0; j < n; ++j) phases[j] = std::polar(1.0, lam[j]);
    ExpJet out;
    out.g = U * phases.asDiagonal() * U.adjoint();
    for (const Mat& d : dX) {
        Mat M = U.adjoint() * d * U;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) M(j, k) *= phi_factor(lam[k] - lam[j]);
        out.left.push_back(U * M * U.adjoint());
    }
    return out;
}

Mat expm_su(const Mat& X) { return exp_jet(X, {}).g; }

Grid1 gauss_legendre(int count, double a, double b) {
    if (count < 1) throw InputError("quadrature needs at least one node");
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(size_t(count));
    Grid1 g;
    for (int i = 0; i < count; ++i) {
        double x, w;
        gsl_integration_glfixed_point(a, b, size_t(i), &x, &w, t);
        g.nodes.push_back(x);
        g.weights.push_back(w);
    }
    gsl_integration_glfixed_table_free(t);
    return g;
}

Grid1 periodic_grid(int count) {
    if (count < 1) throw InputError("quadrature needs at least one node");
    Grid1 g;
    g.periodic = true;
    for (int k = 0; k < count; ++k) {
        g.nodes.push_back(2 * kPi * k / count);
        g.weights.push_back(2 * kPi / count);
    }
    return g;
}

double GridMap::weight(size_t idx) const {
    auto multi = unravel(idx, axis_sizes(axes));
    double w = 1.0;
    for (size_t a = 0; a < axes.size(); ++a) w *= axes[a].weights[multi[a]];
    return w;
}

GridMap GridMap::operator*(const GridMap& o) const {
    require_same_axes(*this, o);
    GridMap out{n, axes, std::vector<Mat>(size()), std::vector<std::vector<Mat>>(size()),
                std::vector<std::vector<Mat>>(size())};
    parallel_for(size(), [&](size_t i) {
        const Mat& f1 = g[i];
        const Mat& f2 = o.g[i];
        out.g[i] = f1 * f2;
        for (size_t a = 0; a < axes.size(); ++a) {
            out.left[i].push_back(f2.adjoint() * left[i][a] * f2 + o.left[i][a]);
            out.right[i].push_back(right[i][a] + f1 * o.right[i][a] * f1.adjoint());
        }
    });
    return out;
}

GridMap GridMap::inverse() const {
    GridMap out{n, axes, std::vector<Mat>(size()), std::vector<std::vector<Mat>>(size()),
                std::vector<std::vector<Mat>>(size())};
    for (size_t i = 0; i < size(); ++i) {
        out.g[i] = g[i].adjoint();
        for (size_t a = 0; a < axes.size(); ++a) {
            out.left[i].push_back(-right[i][a]);
            out.right[i].push_back(-left[i][a]);
        }
    }
    return out;
}

GridMap sample_field(int n, const std::vector<Grid1>& axes, const AlgebraField& X) {
    auto sizes = axis_sizes(axes);
    size_t total = 1;
    for (size_t s : sizes) total *= s;
    GridMap out{n, axes, std::vector<Mat>(total), std::vector<std::vector<Mat>>(total),
                std::vector<std::vector<Mat>>(total)};
    parallel_for(total, [&](size_t i) {
        auto multi = unravel(i, sizes);
        std::vector<double> coords(axes.size());
        for (size_t a = 0; a < axes.size(); ++a) coords[a] = axes[a].nodes[multi[a]];
        AlgebraJet jet = X(coords);
        ExpJet ej = exp_jet(jet.X, jet.d);
        out.g[i] = ej.g;
        out.left[i] = ej.left;
        for (const Mat& l : ej.left) out.right[i].push_back(ej.g * l * ej.g.adjoint());
    });
    return out;
}

// ---- paths and loops --------------------------------------------------------

LieAlgebraPath sample_loop_algebra(int n, int K, const std::function<Mat(double)>& f) {
    LieAlgebraPath p;
    p.n = n;
    p.periodic = true;
    p.grid = periodic_grid(K);
    for (double t : p.grid.nodes) p.values.push_back(f(t));
    p.derivs = fourier_derivative(p.values);
    p.end_value = f(2 * kPi);
    return p;
}

LieAlgebraPath sample_based_path(int n, int K, const std::function<AlgebraJet(double)>& f) {
    if (f(0.0).X.norm() > 1e-12) throw InputError("based path must vanish at t = 0");
    LieAlgebraPath p;
    p.n = n;
    p.periodic = false;
    p.grid = gauss_legendre(K, 0.0, 2 * kPi);
    for (double t : p.grid.nodes) {
        AlgebraJet j = f(t);
        p.values.push_back(j.X);
        p.derivs.push_back(j.d.at(0));
    }
    p.end_value = f(2 * kPi).X;
    return p;
}

LieAlgebraPath random_loop_algebra(int n, int K, std::mt19937_64& rng, int modes) {
    Mat C = random_su_algebra(n, rng);
    auto terms = random_terms(n, rng, modes, 1.0);
    return sample_loop_algebra(n, K, [=](double t) {
        Mat X = C;
        for (size_t j = 0; j < terms.size(); ++j)
            X += terms[j].A * std::cos(double(j + 1) * t) + terms[j].B * std::sin(double(j + 1) * t);
        return X;
    });
}

LieAlgebraPath random_based_path(int n, int K, std::mt19937_64& rng, int modes) {
    auto terms = random_terms(n, rng, modes, 1.0);
    return sample_based_path(n, K, [=](double t) {
        AlgebraJet jet{Mat::Zero(n, n), {Mat::Zero(n, n)}};
        for (size_t j = 0; j < terms.size(); ++j) {
            double w = double(j + 1) / 3.0;
            jet.X += terms[j].A * std::sin(w * t) + terms[j].B * (std::cos(w * t) - 1.0);
            jet.d[0] += w * (terms[j].A * std::cos(w * t) - terms[j].B * std::sin(w * t));
        }
        return jet;
    });
}

LieAlgebraPath bracket(const LieAlgebraPath& a, const LieAlgebraPath& b) {
    require_same_grid(a, b);
    LieAlgebraPath out = a;
    for (size_t k = 0; k < a.size(); ++k) {
        out.values[k] = bracket(a.values[k], b.values[k]);
        out.derivs[k] = bracket(a.derivs[k], b.values[k]) + bracket(a.values[k], b.derivs[k]);
    }
    out.end_value = bracket(a.end_value, b.end_value);
    return out;
}

LieAlgebraPath scaled(const LieAlgebraPath& a, double s) {
    LieAlgebraPath out = a;
    for (auto& v : out.values) v *= s;
    for (auto& v : out.derivs) v *= s;
    out.end_value *= s;
    return out;
}

double lie_cocycle_omega(const LieAlgebraPath& zeta, const LieAlgebraPath& eta, double c) {
    require_same_grid(zeta, eta);
    std::vector<double> terms(zeta.size());
    for (size_t k = 0; k < zeta.size(); ++k) terms[k] = zeta.grid.weights[k] * inner(zeta.values[k], eta.derivs[k]);
    return c * pairwise_sum(terms);
}

Mat central_twist(int n, int q) { return std::polar(1.0, 2 * kPi * q / n) * identity(n); }

SampledLoop sample_group_loop(int n, int K, const std::function<Mat(double)>& f) {
    SampledLoop loop;
    loop.n = n;
    for (int k = 0; k < K; ++k) {
        Mat g = f(2 * kPi * k / K);
        if (!is_special_unitary(g, 1e-12 * n)) throw InputError("loop value is not in SU(n)");
        loop.values.push_back(g);
    }
    loop.twist = f(2 * kPi) * loop.values.front().adjoint();
    if ((loop.twist - loop.twist(0, 0) * identity(n)).norm() > 1e-9) throw InputError("loop twist is not central");
    return loop;
}

SampledLoop random_group_loop(int n, int K, std::mt19937_64& rng, int modes, double scale) {
    auto terms = random_terms(n, rng, modes, scale);
    return sample_group_loop(n, K, [=](double t) {
        Mat X = Mat::Zero(n, n);
        for (size_t j = 0; j < terms.size(); ++j)
            X += terms[j].A * (std::cos(double(j + 1) * t) - 1.0) + terms[j].B * std::sin(double(j + 1) * t);
        return expm_su(X);
    });
}

SampledLoop random_twisted_loop(int n, int q, int K, std::mt19937_64& rng, int modes, double scale) {
    Mat D = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) D(j, j) = cd(0, double(q) / n);
    D(n - 1, n - 1) -= cd(0, double(q));
    auto terms = random_terms(n, rng, modes, scale);
    return sample_group_loop(n, K, [=](double t) -> Mat {
        Mat X = Mat::Zero(n, n);
        for (size_t j = 0; j < terms.size(); ++j)
            X += terms[j].A * (std::cos(double(j + 1) * t) - 1.0) + terms[j].B * std::sin(double(j + 1) * t);
        return expm_su(t * D) * expm_su(X);
    });
}

LieAlgebraPath adjoint(const SampledLoop& g, const LieAlgebraPath& zeta) {
    if (!zeta.periodic || zeta.size() != g.K() || zeta.n != g.n) throw InputError("adjoint needs a loop on the same grid");
    LieAlgebraPath out = zeta;
    for (size_t k = 0; k < g.K(); ++k) out.values[k] = g.values[k] * zeta.values[k] * g.values[k].adjoint();
    out.derivs = fourier_derivative(out.values);
    out.end_value = out.values.front();
    return out;
}

double lambda_value(const SampledLoop& g, const LieAlgebraPath& mu) {
    if (!mu.periodic || mu.size() != g.K()) throw InputError("lambda needs a loop on the same grid");
    if ((g.twist - identity(g.n)).norm() > 1e-9) throw InputError("lambda needs an untwisted loop");
    auto dg = fourier_derivative(g.values);
    std::vector<double> terms(g.K());
    for (size_t k = 0; k < g.K(); ++k)
        terms[k] = mu.grid.weights[k] * inner(g.values[k].adjoint() * dg[k], mu.values[k]);
    return pairwise_sum(terms);
}

LambdaCheck lambda_check(const SampledLoop& g, const LieAlgebraPath& zeta, const LieAlgebraPath& eta) {
    LambdaCheck r;
    r.lhs = lie_cocycle_omega(adjoint(g, zeta), adjoint(g, eta)) - lie_cocycle_omega(zeta, eta);
    r.lambda = lambda_value(g, bracket(eta, zeta));
    r.residual = std::abs(r.lhs - r.lambda);
    r.literal_residual = std::abs(r.lhs + r.lambda);
    return r;
}

// ---- discs and balls --------------------------------------------------------

SampledDiscMap SampledDiscMap::operator*(const SampledDiscMap& o) const {
    SampledDiscMap out;
    out.map = map * o.map;
    for (size_t k = 0; k < boundary.size(); ++k) out.boundary.push_back(boundary[k] * o.boundary[k]);
    out.boundary_trivial = boundary_trivial && o.boundary_trivial;
    return out;
}

SampledDiscMap SampledDiscMap::inverse() const {
    SampledDiscMap out;
    out.map = map.inverse();
    for (const Mat& b : boundary) out.boundary.push_back(b.adjoint());
    out.boundary_trivial = boundary_trivial;
    return out;
}

AlgebraField random_disc_field(int n, std::mt19937_64& rng, int modes, bool boundary_trivial, double scale) {
    std::vector<TrigTerm> terms;
    for (int k = 0; k <= modes; ++k)
        terms.push_back({random_su_algebra(n, rng, scale / (k + 1)), random_su_algebra(n, rng, scale / (k + 1))});
    return [=](const std::vector<double>& c) {
        const double r = c[0], ph = c[1];
        const double rho = boundary_trivial ? (1 - r * r) * (1 - r * r) : 1.0;
        const double drho = boundary_trivial ? -4 * r * (1 - r * r) : 0.0;
        AlgebraJet jet{Mat::Zero(n, n), {Mat::Zero(n, n), Mat::Zero(n, n)}};
        for (size_t k = 0; k < terms.size(); ++k) {
            const double kk = double(k);
            const double rk = std::pow(r, kk);
            const double drk = k == 0 ? 0.0 : kk * std::pow(r, kk - 1);
            Mat angular = terms[k].A * std::cos(kk * ph) + terms[k].B * std::sin(kk * ph);
            Mat dangular = kk * (terms[k].B * std::cos(kk * ph) - terms[k].A * std::sin(kk * ph));
            jet.X += rk * rho * angular;
            jet.d[0] += (drk * rho + rk * drho) * angular;
            jet.d[1] += rk * rho * dangular;
        }
        return jet;
    };
}

SampledDiscMap sample_disc(int n, const AlgebraField& field, int n_r, int n_phi) {
    SampledDiscMap d;
    d.map = sample_field(n, {gauss_legendre(n_r, 0.0, 1.0), periodic_grid(n_phi)}, field);
    d.boundary_trivial = true;
    for (double ph : d.map.axes[1].nodes) {
        Mat b = expm_su(field({1.0, ph}).X);
        d.boundary_trivial = d.boundary_trivial && (b - identity(n)).norm() <= 1e-12;
        d.boundary.push_back(b);
    }
    return d;
}

double gamma_disc(const SampledDiscMap& f1, const SampledDiscMap& f2) {
    require_same_axes(f1.map, f2.map);
    if (f1.map.axes.size() != 2) throw InputError("gamma needs disc maps");
    std::vector<double> terms(f1.map.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& L = f1.map.left[i];
        const auto& R = f2.map.right[i];
        terms[i] = f1.map.weight(i) * (inner(L[0], R[1]) - inner(L[1], R[0]));
    }
    return kThetaSquared / (16 * kPi * kPi) * pairwise_sum(terms);
}

GammaCocycleCheck verify_gamma_cocycle(const SampledDiscMap& f1, const SampledDiscMap& f2,
                                       const SampledDiscMap& f3) {
    GammaCocycleCheck r;
    r.lhs = gamma_disc(f1, f2) + gamma_disc(f1 * f2, f3);
    r.rhs = gamma_disc(f2, f3) + gamma_disc(f1, f2 * f3);
    r.residual = std::abs(r.lhs - r.rhs);
    return r;
}

SampledBallMap SampledBallMap::operator*(const SampledBallMap& o) const {
    SampledBallMap out;
    out.map = map * o.map;
    for (size_t k = 0; k < sphere.size(); ++k) out.sphere.push_back(sphere[k] * o.sphere[k]);
    for (size_t k = 0; k < pole.size(); ++k) out.pole.push_back(pole[k] * o.pole[k]);
    return out;
}

namespace {

std::vector<Grid1> ball_axes(int n_s, int n_r, int n_phi) {
    return {gauss_legendre(n_s, 0.0, 1.0), gauss_legendre(n_r, 0.0, 1.0), periodic_grid(n_phi)};
}

// Boundary data of a ball map given the generator on the cone.
void fill_sphere(SampledBallMap& b, const AlgebraField& field) {
    const auto& r_nodes = b.map.axes[1].nodes;
    const auto& phi_nodes = b.map.axes[2].nodes;
    for (double r : r_nodes)
        for (double ph : phi_nodes) b.sphere.push_back(expm_su(field({1.0, r, ph}).X));
    for (double ph : phi_nodes) b.pole.push_back(expm_su(field({1.0, 1.0, ph}).X));
}

// Integral of <dg g^-1, [dg g^-1, dg g^-1]> / 2 over the grid. Coordinate
// triples here, (s, r, phi) on the cone and (chi, vartheta, phi) on S^3, are
// taken with the orientation in which the standard S^3 map has degree +1,
// which is opposite to their coordinate order.
double three_form(const GridMap& m) {
    std::vector<double> terms(m.size());
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& a = m.right[i];
        terms[i] = m.weight(i) * 3.0 * trilinear(a[0], a[1], a[2]);
    }
    return -kThetaSquared / (48 * kPi * kPi) * pairwise_sum(terms);
}

}  // namespace

SampledBallMap radial_extension(int n, const AlgebraField& field, int n_s, int n_r, int n_phi) {
    AlgebraField cone = [field](const std::vector<double>& c) {
        const double s = c[0];
        AlgebraJet j = field({c[1], c[2]});
        return AlgebraJet{s * j.X, {j.X, s * j.d[0], s * j.d[1]}};
    };
    SampledBallMap b;
    b.map = sample_field(n, ball_axes(n_s, n_r, n_phi), cone);
    fill_sphere(b, cone);
    return b;
}

SampledBallMap degree_one_bubble(int n_s, int n_r, int n_phi) {
    AlgebraField cone = [](const std::vector<double>& c) {
        const double s = c[0], r = c[1], ph = c[2];
        SpherePoint sp = sphere_point(kPi * (1 - r), ph);
        const double amp = kPi * (1 - s);
        return AlgebraJet{amp * dot_sigma(sp.n),
                          {-kPi * dot_sigma(sp.n), -kPi * amp * dot_sigma(sp.d_theta), amp * dot_sigma(sp.d_phi)}};
    };
    SampledBallMap b;
    b.map = sample_field(2, ball_axes(n_s, n_r, n_phi), cone);
    fill_sphere(b, cone);
    return b;
}

double wzw_term(const SampledBallMap& g) {
    if (g.map.axes.size() != 3) throw InputError("wzw term needs a ball map");
    for (const Mat& p : g.pole)
        if ((p - g.pole.front()).norm() > 1e-9) throw InputError("ball map boundary is not a sphere map");
    return three_form(g.map);
}

GridMap standard_s3_map(int n_chi, int n_theta, int n_phi) {
    AlgebraField f = [](const std::vector<double>& c) {
        const double chi = c[0];
        SpherePoint sp = sphere_point(c[1], c[2]);
        return AlgebraJet{chi * dot_sigma(sp.n), {dot_sigma(sp.n), chi * dot_sigma(sp.d_theta), chi * dot_sigma(sp.d_phi)}};
    };
    return sample_field(2, {gauss_legendre(n_chi, 0.0, kPi), gauss_legendre(n_theta, 0.0, kPi), periodic_grid(n_phi)}, f);
}

double winding_s3(const GridMap& h) {
    if (h.axes.size() != 3) throw InputError("winding needs a map on a 3-dimensional grid");
    return three_form(h);
}

ExtensionComparison compare_extensions(const AlgebraField& field, int n_s, int n_r, int n_phi) {
    SampledBallMap g = radial_extension(2, field, n_s, n_r, n_phi);
    SampledBallMap other = g * degree_one_bubble(n_s, n_r, n_phi);
    ExtensionComparison r;
    r.c = wzw_term(g);
    r.c_other = wzw_term(other);
    r.difference = r.c_other - r.c;
    r.distance_to_integer = distance_to_integer(r.difference);
    return r;
}

PhiCheck phi_homomorphism_check(int n, const AlgebraField& g1, const AlgebraField& g2, int n_s, int n_r,
                                int n_phi) {
    SampledDiscMap d1 = sample_disc(n, g1, n_r, n_phi);
    SampledDiscMap d2 = sample_disc(n, g2, n_r, n_phi);
    if (!d1.boundary_trivial || !d2.boundary_trivial) throw InputError("disc maps must be trivial on the boundary");
    SampledBallMap b1 = radial_extension(n, g1, n_s, n_r, n_phi);
    SampledBallMap b2 = radial_extension(n, g2, n_s, n_r, n_phi);
    PhiCheck r;
    r.c1 = wzw_term(b1);
    r.c2 = wzw_term(b2);
    r.c12 = wzw_term(b1 * b2);
    r.gamma = gamma_disc(d1, d2);
    r.defect = r.c12 - r.c1 - r.c2 - r.gamma;
    r.residual = distance_to_integer(r.defect);
    return r;
}

// ---- Jacobi anomaly ---------------------------------------------------------

namespace {

double cyclic_defect(const LieAlgebraPath& zeta, const LieAlgebraPath& eta, const LieAlgebraPath& xi, double c) {
    return lie_cocycle_omega(bracket(zeta, eta), xi, c) + lie_cocycle_omega(bracket(eta, xi), zeta, c) +
           lie_cocycle_omega(bracket(xi, zeta), eta, c);
}

}  // namespace

JacobiDefect jacobi_defect(const LieAlgebraPath& zeta, const LieAlgebraPath& eta, const LieAlgebraPath& xi, double c) {
    if (zeta.periodic || eta.periodic || xi.periodic) throw InputError("jacobi_defect needs based paths");
    JacobiDefect r;
    r.defect = cyclic_defect(zeta, eta, xi, c);
    r.boundary_term = c * kJacobiBoundaryConstant * trilinear(zeta.end_value, eta.end_value, xi.end_value);
    r.residual = std::abs(r.defect - r.boundary_term);
    return r;
}

double loop_jacobi_defect(const LieAlgebraPath& zeta, const LieAlgebraPath& eta, const LieAlgebraPath& xi, double c) {
    if (!zeta.periodic || !eta.periodic || !xi.periodic) throw InputError("loop_jacobi_defect needs loops");
    return cyclic_defect(zeta, eta, xi, c);
}

double calibrate_jacobi_constant(std::mt19937_64& rng, int instances, int n, int K) {
    double num = 0, den = 0;
    for (int i = 0; i < instances; ++i) {
        auto z = random_based_path(n, K, rng);
        auto e = random_based_path(n, K, rng);
        auto x = random_based_path(n, K, rng);
        double b = trilinear(z.end_value, e.end_value, x.end_value);
        num += cyclic_defect(z, e, x, 1.0) * b;
        den += b * b;
    }
    if (den == 0) throw InputError("calibration instances have no boundary term");
    return num / den;
}

// ---- SU(n)/Z_p and Hilbert-Schmidt -----------------------------------------

SuQuotientPhase su_quotient_phase(int n, int p, int k) {
    if (p < 2 || n < 1 || n % p != 0) throw InputError("su_quotient_phase needs p >= 2 dividing n");
    if (k < 1) throw InputError("su_quotient_phase needs k >= 1");
    SuQuotientPhase r;
    r.n = n;
    r.p = p;
    r.k = k;
    Rational raw(int64_t(k) * n * (n - 1), 2 * int64_t(p));
    r.phase = Rational(raw.numerator() % raw.denominator(), raw.denominator());
    r.sign = r.phase == Rational(0) ? 1 : -1;
    r.rule_applies = k % 2 == 1;
    r.rule_sign = (n % 2 == 1 || (n / p) % 2 == 0) ? 1 : -1;
    r.liftdata = cyclic_liftdata(p, r.phase.numerator(), r.phase.denominator());
    return r;
}

LiftObstruction su_quotient_obstruction(const SuQuotientPhase& r) { return obstruction_from_liftdata(r.liftdata); }

HsNorm hs_offdiag_norm(const SampledLoop& f, int M) {
    const int K = int(f.K());
    if (M < 1 || 2 * M > K) throw InputError("cutoff M must satisfy 1 <= M <= K/2");
    double theta = std::arg(f.twist(0, 0)) / (2 * kPi);
    if (theta < 0) theta += 1.0;
    std::vector<Mat> u(static_cast<size_t>(K));
    for (int j = 0; j < K; ++j) u[size_t(j)] = std::polar(1.0, -theta * 2 * kPi * j / K) * f.values[size_t(j)];
    const Mat base = u.front();
    for (auto& v : u) v -= base;
    auto coeffs = dft_entries(u, FFTW_FORWARD);
    // squared Frobenius norm of a_k, indexed by k + K
    std::vector<double> frob(size_t(2 * K), 0.0);
    for (int b = 0; b < K; ++b) {
        int k = frequency(b, K);
        if (k == 0) continue;
        frob[size_t(k + K)] = (coeffs[size_t(b)] / double(K)).squaredNorm();
    }
    auto F = [&](int k) { return std::abs(k) >= K ? 0.0 : frob[size_t(k + K)]; };
    std::vector<double> terms;
    for (int m = -M; m < M; ++m)
        for (int mp = -M; mp < M; ++mp)
            if ((m >= 0) != (mp >= 0)) terms.push_back(F(mp - m));
    HsNorm r;
    r.norm2 = pairwise_sum(terms);
    std::vector<double> modes;
    for (int k = -M; k <= M; ++k) modes.push_back(std::abs(k) * F(k));
    r.mode_sum = pairwise_sum(modes);
    r.ratio = r.mode_sum > 0 ? r.norm2 / r.mode_sum : 0.0;
    return r;
}

}  // namespace cocycle
