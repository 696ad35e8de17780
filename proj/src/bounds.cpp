#include "hspline/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hspline {

namespace {

void validate_parity(int n, int lambda) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("n must be an even integer >= 2");
    if (lambda < 2 || lambda % 2 != 0)
        throw std::invalid_argument("lambda must be an even integer >= 2");
}

double log_c1_common(const KernelParams& params) {
    const MomentConstants mc = moment_constants(params.n, params.lambda);
    return 0.5 * std::log(params.l_const) + 0.25 * std::log(M_PI / 2.0) +
           0.5 * std::log(params.n * unit_ball_volume(params.n)) +
           0.5 * params.lambda * std::log(params.c) + 0.5 * std::log(mc.delta0_const);
}

}  // namespace

MomentConstants moment_constants(int n, int lambda) {
    validate_parity(n, lambda);
    const int m = 1 + lambda / 2;
    const int d = n - lambda;

    MomentConstants mc;
    if (d > 3) {
        mc.case_label = 'a';
        mc.s = static_cast<int>(std::ceil((d - 3) / 2.0));
        mc.rho = 1.0 + static_cast<double>(mc.s) / (2 * m + 3);
        double prod = 1.0;  // (2m+2+s)(2m+1+s)...(2m+3), empty when s = 0
        for (int j = 2 * m + 3; j <= 2 * m + 2 + mc.s; ++j) prod *= j;
        mc.delta0_const = prod / std::pow(mc.rho, 2 * m + 2);
    } else if (d <= 1) {
        mc.case_label = 'b';
        mc.s = -static_cast<int>(std::ceil((d - 3) / 2.0));
        mc.rho = 1.0;
        double prod = 1.0;  // (2m+2)(2m+1)...(2m-s+3), empty when s = 0
        for (int j = 2 * m - mc.s + 3; j <= 2 * m + 2; ++j) prod *= j;
        mc.delta0_const = 1.0 / prod;
    } else {
        mc.case_label = 'c';
        mc.s = 0;
        mc.rho = 1.0;
        mc.delta0_const = 1.0;
    }
    return mc;
}

bool moment_inequality_check(int n, int lambda, int k) {
    validate_parity(n, lambda);
    const int m = 1 + lambda / 2;
    if (k < 2 * m + 2)
        throw std::invalid_argument("moment_inequality_check: requires k >= 2m+2 = " +
                                    std::to_string(2 * m + 2));
    const MomentConstants mc = moment_constants(n, lambda);
    const double k_prime = k + (n - lambda - 3) / 2.0;
    const double lhs = std::lgamma(k_prime + 1.0);
    const double rhs = std::log(mc.delta0_const) + k * std::log(mc.rho) +
                       std::lgamma(k + 1.0);
    return lhs <= rhs;
}

MomentIntegral moment_integral_numeric(const KernelParams& params, int k) {
    const int m = params.order();
    if (k < 2 * m + 2)
        throw std::invalid_argument("moment_integral_numeric: requires k >= 2m+2");

    const auto integrand = [&](double r) -> double {
        if (r <= 0.0) return 0.0;
        return std::pow(r, k + params.n - 1) * fourier_density(params, r);
    };

    // Integrand ~ r^p e^{-c r}; truncate well past the peak at p/c.
    const double p = k + params.n - 1 - params.lambda - params.n + params.bessel_order();
    const double upper = (p + 60.0 + 14.0 * std::sqrt(p + 60.0)) / params.c;

    // composite Simpson, panel count doubled until relative change < 1e-6
    double prev = 0.0;
    double value = 0.0;
    for (int panels = 256; panels <= 1 << 22; panels *= 2) {
        const double h = upper / panels;
        double sum = integrand(0.0) + integrand(upper);
        for (int i = 1; i < panels; ++i)
            sum += integrand(i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
        value = sum * h / 3.0;
        if (panels > 256 && std::abs(value - prev) < 1e-6 * std::abs(value)) break;
        prev = value;
        if (panels == 1 << 22)
            throw std::runtime_error("moment_integral_numeric: quadrature did not converge");
    }
    value *= params.n * unit_ball_volume(params.n);

    const MomentConstants mc = moment_constants(params.n, params.lambda);
    const double log_rhs = std::log(params.l_const) + 0.5 * std::log(M_PI / 2.0) +
                           std::log(static_cast<double>(params.n)) +
                           std::log(unit_ball_volume(params.n)) +
                           (params.lambda - k) * std::log(params.c) +
                           std::log(mc.delta0_const) + k * std::log(mc.rho) +
                           std::lgamma(k + 1.0);
    MomentIntegral out;
    out.value = value;
    out.ratio = std::exp(std::log(value) - log_rhs);
    return out;
}

double c_k_bound(const KernelParams& params, int k) {
    if (k <= params.order())
        throw std::invalid_argument("c_k_bound: requires k > m");
    const MomentConstants mc = moment_constants(params.n, params.lambda);
    const double log_val = log_c1_common(params) - k * std::log(params.c) +
                           k * std::log(2.0 * mc.rho);
    return std::exp(log_val);
}

NewBoundConstants new_constants(const KernelParams& params, double b0) {
    if (!(b0 > 0.0)) throw std::invalid_argument("new_constants: b0 must be > 0");
    const MomentConstants mc = moment_constants(params.n, params.lambda);
    NewBoundConstants nb;
    nb.b0 = b0;
    nb.rho_prime = mc.rho / params.c;
    nb.C = std::max(8.0 * nb.rho_prime, 2.0 / (3.0 * b0));
    nb.delta_max = 1.0 / (3.0 * nb.C * (params.order() + 1));
    nb.omega_prime = std::exp(std::log(2.0 / 3.0) / (3.0 * nb.C));
    nb.c1 = std::exp(log_c1_common(params) + 0.5 * std::log(3.0 * nb.C) -
                     0.5 * std::log(16.0 * M_PI));
    return nb;
}

double error_bound(const NewBoundConstants& consts, double delta, double fnorm) {
    if (!(delta > 0.0) || delta > consts.delta_max * (1.0 + 1e-12))
        throw std::invalid_argument("error_bound: delta outside (0, delta_0]");
    if (fnorm < 0.0) throw std::invalid_argument("error_bound: fnorm must be >= 0");
    const double log_decay = std::log(consts.omega_prime) / delta;
    return consts.c1 * std::sqrt(delta) * std::exp(log_decay) * fnorm;
}

int admissible_k(double C, double delta) {
    if (!(delta > 0.0) || !(C > 0.0))
        throw std::invalid_argument("admissible_k: C and delta must be > 0");
    const double x = 1.0 / (3.0 * C * delta);
    const int k = static_cast<int>(std::ceil(x - 1e-9));
    const double prod = 3.0 * C * delta * k;
    if (k < 1 || prod < 1.0 - 1e-9 || prod > 2.0 + 1e-9)
        throw std::invalid_argument("admissible_k: no integer k with 1 <= 3*C*delta*k <= 2 "
                                    "(delta exceeds delta_0?)");
    return k;
}

double gamma_seq(int n) {
    if (n < 1) throw std::invalid_argument("gamma_seq: n must be >= 1");
    double g = 2.0;
    for (int i = 2; i <= n; ++i) g = 2.0 * i * (1.0 + g);
    return g;
}

double gamma_seq_log(int n) {
    if (n < 1) throw std::invalid_argument("gamma_seq_log: n must be >= 1");
    double lg = std::log(2.0);
    for (int i = 2; i <= n; ++i) {
        // ln gamma_i = ln(2i) + ln(1 + gamma_{i-1})
        lg = std::log(2.0 * i) + ((lg > 700.0) ? lg : std::log1p(std::exp(lg)));
    }
    return lg;
}

OldBoundConstants old_constants(const KernelParams& params, double b0) {
    if (!(b0 > 0.0)) throw std::invalid_argument("old_constants: b0 must be > 0");
    const MomentConstants mc = moment_constants(params.n, params.lambda);
    const double rho_prime = mc.rho / params.c;

    OldBoundConstants ob;
    ob.gamma_n = gamma_seq(params.n);
    const double log_term = std::log(2.0 * rho_prime * std::sqrt(static_cast<double>(params.n))) +
                            2.0 * params.n * ob.gamma_n;
    ob.log_c_old = std::max(log_term, std::log(2.0 / (3.0 * b0)));
    ob.c_old = std::exp(ob.log_c_old);

    // ln|ln w| = ln(ln(3/2)) - ln 3 - ln C_old - ln gamma_n
    const double log_abs_ln_omega = std::log(std::log(1.5)) - std::log(3.0) -
                                    ob.log_c_old - std::log(ob.gamma_n);
    if (log_abs_ln_omega < -1.0) {
        // 1 - w ~ |ln w| to better than float precision here
        ob.log10_one_minus_omega = log_abs_ln_omega / std::log(10.0);
        ob.omega = std::exp(-std::exp(log_abs_ln_omega));
    } else {
        ob.omega = std::exp(-std::exp(log_abs_ln_omega));
        ob.log10_one_minus_omega = std::log10(1.0 - ob.omega);
    }
    ob.c1_old = std::exp(log_c1_common(params));
    return ob;
}

std::vector<CompareRow> compare_bounds(const KernelParams& params_base, double b0,
                                       const std::vector<int>& n_values,
                                       LambdaPolicy policy) {
    std::vector<int> ns = n_values;
    std::sort(ns.begin(), ns.end());

    std::vector<CompareRow> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        const int lambda = (policy == LambdaPolicy::fixed) ? params_base.lambda
                                                           : std::max(2, n - 2);
        const KernelParams params(n, lambda, params_base.c, params_base.l_const);
        const MomentConstants mc = moment_constants(n, lambda);
        const NewBoundConstants nb = new_constants(params, b0);
        const OldBoundConstants ob = old_constants(params, b0);

        CompareRow row;
        row.n = n;
        row.lambda = lambda;
        row.case_label = mc.case_label;
        row.rho = mc.rho;
        row.delta0_const = mc.delta0_const;
        row.C = nb.C;
        row.delta_max = nb.delta_max;
        row.omega_prime = nb.omega_prime;
        row.log10_one_minus_omega_prime =
            std::log10(-std::expm1(std::log(2.0 / 3.0) / (3.0 * nb.C)));
        row.log10_one_minus_omega = ob.log10_one_minus_omega;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace hspline
