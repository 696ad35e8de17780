#ifndef HSPLINE_INTERPOLANT_HPP
#define HSPLINE_INTERPOLANT_HPP

#include <Eigen/Dense>
#include <cstdint>

#include "hspline/kernel.hpp"
#include "hspline/polyinterp.hpp"
#include "hspline/simplex.hpp"

namespace hspline {

/// Interpolation centers: pairwise distinct points in R^n, one per column.
struct CenterSet {
    Eigen::MatrixXd points;

    int dim() const { return static_cast<int>(points.rows()); }
    int count() const { return static_cast<int>(points.cols()); }
};

struct UnisolvencyReport {
    bool unisolvent = false;
    double condition = 0.0;          // sigma_max / sigma_min of the collocation matrix
    double smallest_singular = 0.0;
    int rank = 0;
    int required_rank = 0;
};

// Full-column-rank test of the N x dim(P_degree^n) collocation matrix,
// threshold 1e-10 * sigma_max.
UnisolvencyReport unisolvency_check(const CenterSet& centers, int degree);

/// Fitted kernel interpolant: kernel expansion plus a polynomial of degree
/// m-1 under the moment side conditions. The polynomial coefficients refer
/// to graded-lex monomials of the normalized coordinates
/// (x - poly_shift) / poly_scale.
struct HSpline {
    KernelParams params;
    CenterSet centers;
    Eigen::VectorXd kernel_coeffs;
    Eigen::VectorXd poly_coeffs;
    MonomialBasis poly_basis;
    Eigen::VectorXd poly_shift;
    double poly_scale = 1.0;
    double condition_estimate = 0.0;
    bool used_least_squares = false;
};

// Solves the symmetric saddle-point system [A P; P^T 0][c; d] = [f; 0].
// Falls back to a truncated-SVD least-squares solve when the condition
// estimate exceeds 1e15.
HSpline fit(const KernelParams& params, const CenterSet& centers,
            const Eigen::VectorXd& values);

double evaluate(const HSpline& spline, const Eigen::VectorXd& x);

// sqrt(c^T A c) over the kernel Gram matrix; requires the coefficients to
// satisfy the degree-(m-1) moment conditions.
double native_seminorm(const KernelParams& params, const CenterSet& centers,
                       const Eigen::VectorXd& kernel_coeffs);

/// Synthetic member of the kernel's native space: a random moment-feasible
/// kernel combination plus a random polynomial of degree m-1.
struct SynthFunction {
    KernelParams params;
    CenterSet sources;
    Eigen::VectorXd kernel_coeffs;
    Eigen::VectorXd poly_coeffs;
    MonomialBasis poly_basis;
    Eigen::VectorXd poly_shift;
    double poly_scale = 1.0;
    double seminorm = 0.0;

    double operator()(const Eigen::VectorXd& x) const;
};

// Deterministic per seed; retries with a derived seed when a degenerate
// coefficient draw is annihilated by the moment projection.
SynthFunction synth_native_function(const KernelParams& params, std::uint64_t seed,
                                    int source_count, const Simplex& domain);

}  // namespace hspline

#endif
