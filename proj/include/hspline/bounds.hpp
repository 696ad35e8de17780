#ifndef HSPLINE_BOUNDS_HPP
#define HSPLINE_BOUNDS_HPP

#include <vector>

#include "hspline/kernel.hpp"

namespace hspline {

/// Moment constants rho and Delta_0, split by the sign of n - lambda - 3:
///   case a: n - lambda > 3,   case b: n - lambda <= 1,   case c: otherwise.
struct MomentConstants {
    char case_label = 'c';      // 'a', 'b' or 'c'
    int s = 0;                  // ceiling shift, >= 0
    double rho = 1.0;           // >= 1
    double delta0_const = 1.0;  // Delta_0 > 0
};

MomentConstants moment_constants(int n, int lambda);

// Log-domain check of Gamma(k'+1) <= Delta_0 * rho^k * k! with
// k' = k + (n - lambda - 3)/2. Requires k >= 2m+2.
bool moment_inequality_check(int n, int lambda, int k);

struct MomentIntegral {
    double value = 0.0;  // n * alpha_n * int_0^inf r^{k+n-1} density(r) dr
    double ratio = 0.0;  // value / analytic right-hand side
};

// Adaptive quadrature of the k-th radial moment of the Fourier density,
// refined until the relative change is below 1e-6; diagnostic only.
MomentIntegral moment_integral_numeric(const KernelParams& params, int k);

// Upper bound on c_k = sqrt(int |xi|^{2k} dmu) / k! for k > m, computed in
// log domain.
double c_k_bound(const KernelParams& params, int k);

/// Constants of the exponential error bound |f - s| <= c1 sqrt(d) w'^{1/d} ||f||_h.
struct NewBoundConstants {
    double rho_prime = 0.0;    // rho / c
    double C = 0.0;            // max{8 rho', 2/(3 b0)}
    double delta_max = 0.0;    // delta_0 = 1 / (3 C (m+1))
    double omega_prime = 0.0;  // (2/3)^{1/(3C)}, in (0,1)
    double c1 = 0.0;
    double b0 = 0.0;
};

NewBoundConstants new_constants(const KernelParams& params, double b0);

// c1 * sqrt(delta) * omega'^{1/delta} * fnorm, exponent taken in log domain.
// Requires 0 < delta <= delta_max.
double error_bound(const NewBoundConstants& consts, double delta, double fnorm);

// Smallest integer k with 3 C delta k >= 1; the result satisfies
// 1 <= 3 C delta k <= 2 for delta <= delta_0.
int admissible_k(double C, double delta);

// gamma_1 = 2, gamma_n = 2n (1 + gamma_{n-1}).
double gamma_seq(int n);

// ln(gamma_n), stable for n large enough that gamma_n overflows.
double gamma_seq_log(int n);

/// Constants of the earlier exponential bound |f - s| <= c1_old w^{1/d} ||f||_h.
/// C_old involves e^{2 n gamma_n} and overflows linear arithmetic for n >= 4;
/// log_c_old is always valid, c_old and omega may round to inf / 1.
struct OldBoundConstants {
    double gamma_n = 0.0;
    double log_c_old = 0.0;              // ln C_old
    double c_old = 0.0;                  // may be +inf
    double omega = 0.0;                  // may round to 1
    double c1_old = 0.0;
    double log10_one_minus_omega = 0.0;  // log10(1 - omega), log-domain value
};

OldBoundConstants old_constants(const KernelParams& params, double b0);

struct CompareRow {
    int n = 0;
    int lambda = 0;
    char case_label = 'c';
    double rho = 0.0;
    double delta0_const = 0.0;
    double C = 0.0;
    double delta_max = 0.0;
    double omega_prime = 0.0;
    double log10_one_minus_omega_prime = 0.0;
    double log10_one_minus_omega = 0.0;
};

enum class LambdaPolicy {
    fixed,  // lambda taken from the base parameters for every n
    track,  // lambda = max(2, n-2), keeping n - lambda <= 3
};

// One row per n, ascending, comparing the geometric bases of the two bounds.
std::vector<CompareRow> compare_bounds(const KernelParams& params_base, double b0,
                                       const std::vector<int>& n_values,
                                       LambdaPolicy policy);

}  // namespace hspline

#endif
