#include "hspline/interpolant.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace hspline {

namespace {

Eigen::VectorXd normalized(const Eigen::VectorXd& x, const Eigen::VectorXd& shift,
                           double scale) {
    return (x - shift) / scale;
}

void normalization(const Eigen::MatrixXd& points, Eigen::VectorXd& shift, double& scale) {
    shift = points.rowwise().mean();
    scale = 0.0;
    for (Eigen::Index j = 0; j < points.cols(); ++j)
        scale = std::max(scale, (points.col(j) - shift).norm());
    if (scale == 0.0) scale = 1.0;
}

Eigen::MatrixXd kernel_gram(const KernelParams& params, const Eigen::MatrixXd& a,
                            const Eigen::MatrixXd& b) {
    Eigen::MatrixXd g(a.cols(), b.cols());
    for (Eigen::Index i = 0; i < a.cols(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            g(i, j) = kernel_value(params, (a.col(i) - b.col(j)).norm());
    return g;
}

Eigen::MatrixXd collocation(const Eigen::MatrixXd& points, const MonomialBasis& basis,
                            const Eigen::VectorXd& shift, double scale) {
    Eigen::MatrixXd p(points.cols(), basis.size());
    for (Eigen::Index i = 0; i < points.cols(); ++i)
        p.row(i) = basis.evaluate(normalized(points.col(i), shift, scale)).transpose();
    return p;
}

// Deterministic uniform in [0,1) from the raw generator bits; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double normal01(std::mt19937_64& rng) {
    // Box-Muller, one value per call
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Eigen::VectorXd random_point_in_simplex(const Simplex& s, std::mt19937_64& rng) {
    const int n = s.dim();
    Eigen::VectorXd bary(n + 1);
    for (int i = 0; i <= n; ++i) {
        double u = uniform01(rng);
        while (u <= 0.0) u = uniform01(rng);
        bary(i) = -std::log(u);
    }
    bary /= bary.sum();
    return s.vertices * bary;
}

}  // namespace

UnisolvencyReport unisolvency_check(const CenterSet& centers, int degree) {
    const MonomialBasis basis = MonomialBasis::make(centers.dim(), degree);
    Eigen::VectorXd shift;
    double scale;
    normalization(centers.points, shift, scale);
    const Eigen::MatrixXd p = collocation(centers.points, basis, shift, scale);

    UnisolvencyReport rep;
    rep.required_rank = basis.size();
    if (centers.count() < basis.size()) return rep;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(p);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double smax = sv(0);
    const double thresh = 1e-10 * smax;
    rep.rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rep.rank;
    rep.smallest_singular = sv(sv.size() - 1);
    rep.condition = (rep.smallest_singular > 0.0)
                        ? smax / rep.smallest_singular
                        : std::numeric_limits<double>::infinity();
    rep.unisolvent = (rep.rank == rep.required_rank);
    return rep;
}

HSpline fit(const KernelParams& params, const CenterSet& centers,
            const Eigen::VectorXd& values) {
    const int nc = centers.count();
    if (values.size() != nc)
        throw std::invalid_argument("fit: value count != center count");
    if (centers.dim() != params.n)
        throw std::invalid_argument("fit: center dimension != kernel dimension");

    const int m = params.order();
    const UnisolvencyReport uni = unisolvency_check(centers, m - 1);
    if (!uni.unisolvent)
        throw std::invalid_argument(
            "fit: centers not unisolvent for degree " + std::to_string(m - 1) +
            " (rank " + std::to_string(uni.rank) + " of " +
            std::to_string(uni.required_rank) + ")");

    HSpline s{params, centers, {}, {}, MonomialBasis::make(params.n, m - 1), {}, 1.0};
    normalization(centers.points, s.poly_shift, s.poly_scale);

    const int np = s.poly_basis.size();
    const Eigen::MatrixXd a = kernel_gram(params, centers.points, centers.points);
    const Eigen::MatrixXd p = collocation(centers.points, s.poly_basis, s.poly_shift,
                                          s.poly_scale);

    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(nc + np, nc + np);
    kkt.topLeftCorner(nc, nc) = a;
    kkt.topRightCorner(nc, np) = p;
    kkt.bottomLeftCorner(np, nc) = p.transpose();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nc + np);
    rhs.head(nc) = values;

    // Kernel systems at small spacing are severely ill-conditioned; the
    // factorization runs in extended precision to push the error floor down.
    using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    const MatrixXld kkt_ld = kkt.cast<long double>();
    const VectorXld rhs_ld = rhs.cast<long double>();

    Eigen::PartialPivLU<MatrixXld> lu(kkt_ld);
    const double rc = static_cast<double>(lu.rcond());
    s.condition_estimate = (rc > 0.0) ? 1.0 / rc : std::numeric_limits<double>::infinity();

    VectorXld sol;
    if (s.condition_estimate <= 1e15) {
        sol = lu.solve(rhs_ld);
        // one step of iterative refinement keeps the residual near the
        // extended-precision roundoff even for badly conditioned systems
        sol += lu.solve(rhs_ld - kkt_ld * sol);
    } else {
        // near-singular: truncated-SVD least squares
        Eigen::JacobiSVD<MatrixXld> svd(kkt_ld, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-17L);
        sol = svd.solve(rhs_ld);
        s.used_least_squares = true;
    }
    s.kernel_coeffs = sol.head(nc).cast<double>();
    s.poly_coeffs = sol.tail(np).cast<double>();
    return s;
}

double evaluate(const HSpline& spline, const Eigen::VectorXd& x) {
    if (x.size() != spline.centers.dim())
        throw std::invalid_argument("evaluate: dimension mismatch");
    // kernel terms largely cancel; accumulate in extended precision
    long double v = spline.poly_coeffs.dot(
        spline.poly_basis.evaluate(normalized(x, spline.poly_shift, spline.poly_scale)));
    for (int j = 0; j < spline.centers.count(); ++j)
        v += static_cast<long double>(spline.kernel_coeffs(j)) *
             kernel_value(spline.params, (x - spline.centers.points.col(j)).norm());
    return static_cast<double>(v);
}

double native_seminorm(const KernelParams& params, const CenterSet& centers,
                       const Eigen::VectorXd& kernel_coeffs) {
    if (kernel_coeffs.size() != centers.count())
        throw std::invalid_argument("native_seminorm: coefficient count mismatch");

    const MonomialBasis basis = MonomialBasis::make(params.n, params.order() - 1);
    Eigen::VectorXd shift;
    double scale;
    normalization(centers.points, shift, scale);
    const Eigen::MatrixXd p = collocation(centers.points, basis, shift, scale);
    const double cnorm = kernel_coeffs.norm();
    const double moment_resid = (p.transpose() * kernel_coeffs).lpNorm<Eigen::Infinity>();
    if (moment_resid > 1e-8 * std::max(cnorm, 1.0))
        throw std::invalid_argument("native_seminorm: moment conditions violated, residual " +
                                    std::to_string(moment_resid));

    const Eigen::MatrixXd a = kernel_gram(params, centers.points, centers.points);
    const double quad = kernel_coeffs.dot(a * kernel_coeffs);
    const double amax = a.cwiseAbs().maxCoeff();
    if (quad < -1e-10 * cnorm * cnorm * std::max(amax, 1.0))
        throw std::runtime_error("native_seminorm: negative quadratic form " +
                                 std::to_string(quad));
    return std::sqrt(std::max(quad, 0.0));
}

double SynthFunction::operator()(const Eigen::VectorXd& x) const {
    long double v = poly_coeffs.dot(poly_basis.evaluate(normalized(x, poly_shift, poly_scale)));
    for (int j = 0; j < sources.count(); ++j)
        v += static_cast<long double>(kernel_coeffs(j)) *
             kernel_value(params, (x - sources.points.col(j)).norm());
    return static_cast<double>(v);
}

SynthFunction synth_native_function(const KernelParams& params, std::uint64_t seed,
                                    int source_count, const Simplex& domain) {
    const int m = params.order();
    const MonomialBasis basis = MonomialBasis::make(params.n, m - 1);
    if (source_count < basis.size() + 1)
        throw std::invalid_argument("synth_native_function: source_count must exceed dim P_{m-1}^n");
    if (domain.dim() != params.n)
        throw std::invalid_argument("synth_native_function: domain dimension mismatch");

    for (int attempt = 0; attempt < 10; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * attempt);

        SynthFunction f{params, {}, {}, {}, basis, {}, 1.0, 0.0};
        f.sources.points.resize(params.n, source_count);
        for (int j = 0; j < source_count; ++j)
            f.sources.points.col(j) = random_point_in_simplex(domain, rng);

        Eigen::VectorXd raw(source_count);
        for (int j = 0; j < source_count; ++j) raw(j) = normal01(rng);

        normalization(f.sources.points, f.poly_shift, f.poly_scale);
        const Eigen::MatrixXd p = collocation(f.sources.points, basis, f.poly_shift,
                                              f.poly_scale);
        // project onto the moment-condition subspace: c -= P (P^T P)^{-1} P^T c
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(p);
        f.kernel_coeffs = raw - p * qr.solve(raw);

        f.poly_coeffs.resize(basis.size());
        for (int j = 0; j < basis.size(); ++j) f.poly_coeffs(j) = normal01(rng);

        if (f.kernel_coeffs.norm() < 1e-8 * raw.norm()) continue;  // degenerate draw
        // normalize so the kernel part has unit seminorm
        const double sn = native_seminorm(params, f.sources, f.kernel_coeffs);
        if (!(sn > 0.0)) continue;
        f.kernel_coeffs /= sn;
        f.seminorm = 1.0;
        return f;
    }
    throw std::runtime_error("synth_native_function: degenerate draws for 10 attempts");
}

}  // namespace hspline
