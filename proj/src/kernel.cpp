#include "hspline/kernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hspline {

KernelParams::KernelParams(int n_, int lambda_, double c_, double l_const_)
    : n(n_), lambda(lambda_), c(c_), l_const(l_const_) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("KernelParams: n must be an even integer >= 2");
    if (lambda < 2 || lambda % 2 != 0)
        throw std::invalid_argument("KernelParams: lambda must be an even integer >= 2");
    if (!(c > 0.0))
        throw std::invalid_argument("KernelParams: c must be > 0");
    if (!(l_const > 0.0))
        throw std::invalid_argument("KernelParams: l_const must be > 0");
}

double kernel_value(const KernelParams& params, double r) {
    const double q = r * r + params.c * params.c;
    const double sign = (params.order() % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(q, 0.5 * params.lambda) * 0.5 * std::log(q);
}

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008;

// K0 and K1 by the ascending series, reliable for t <= 2.
//   K0(t) = -(log(t/2) + gamma) I0(t) + sum_{j>=1} (t^2/4)^j / (j!)^2 * H_j
//   K1(t) = log(t/2) I1(t) + 1/t
//           - (t/4) sum_{j>=0} (psi(j+1) + psi(j+2)) (t^2/4)^j / (j! (j+1)!)
void bessel_k01_series(double t, double& k0, double& k1) {
    const double x = 0.25 * t * t;
    const double lt = std::log(0.5 * t);

    double i0 = 1.0, i1 = 0.5 * t;
    double s0 = 0.0, s1 = 0.0;
    double term0 = 1.0;             // x^j / (j!)^2
    double term1 = 1.0;             // x^j / (j! (j+1)!)
    double h = 0.0;                 // harmonic number H_j
    double psi_sum = -2.0 * kEulerGamma + 1.0;  // psi(j+1) + psi(j+2) at j=0
    s1 = psi_sum * term1;
    for (int j = 1; j < 200; ++j) {
        term0 *= x / (static_cast<double>(j) * j);
        term1 *= x / (static_cast<double>(j) * (j + 1));
        h += 1.0 / j;
        psi_sum += 1.0 / j + 1.0 / (j + 1);
        i0 += term0;
        i1 += 0.5 * t * term1;
        s0 += term0 * h;
        const double d1 = term1 * psi_sum;
        s1 += d1;
        if (term0 * (h + 1.0) < 1e-18 * (std::abs(s0) + 1.0)) break;
    }
    k0 = -(lt + kEulerGamma) * i0 + s0;
    k1 = lt * i1 + 1.0 / t - 0.25 * t * s1;
}

// K0 and K1 by Steed's continued fraction for the evaluation at t >= 2.
void bessel_k01_cf(double t, double& k0, double& k1) {
    constexpr double eps = 1e-16;
    double b = 2.0 * (1.0 + t);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;  // 1/4 - mu^2 with mu = 0
    double q = a1, cterm = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < 10000; ++i) {
        a -= 2.0 * (i - 1);
        cterm = -a * cterm / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += cterm * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps) break;
    }
    h = a1 * h;
    k0 = std::sqrt(M_PI / (2.0 * t)) * std::exp(-t) / s;
    k1 = k0 * (t + 0.5 - h) / t;
}

}  // namespace

double bessel_k_int(int nu, double t) {
    if (nu < 0) throw std::invalid_argument("bessel_k_int: nu must be >= 0");
    if (!(t > 0.0)) throw std::invalid_argument("bessel_k_int: t must be > 0");

    double k0, k1;
    if (t < 2.0)
        bessel_k01_series(t, k0, k1);
    else
        bessel_k01_cf(t, k0, k1);

    if (nu == 0) return k0;
    double km = k0, kc = k1;
    for (int j = 1; j < nu; ++j) {
        // K_{j+1}(t) = K_{j-1}(t) + (2j/t) K_j(t)
        const double kn = km + (2.0 * j / t) * kc;
        if (!std::isfinite(kn))
            throw std::overflow_error("bessel_k_int: K_" + std::to_string(nu) +
                                      "(" + std::to_string(t) + ") overflows");
        km = kc;
        kc = kn;
    }
    if (!std::isfinite(kc))
        throw std::overflow_error("bessel_k_int: result not finite");
    return kc;
}

double fourier_density(const KernelParams& params, double rho_freq) {
    if (!(rho_freq > 0.0))
        throw std::invalid_argument("fourier_density: frequency radius must be > 0");
    const int nu = params.bessel_order();
    const double t = params.c * rho_freq;
    const double k = bessel_k_int(nu, t);
    return params.l_const * std::pow(rho_freq, -static_cast<double>(params.lambda + params.n)) *
           std::pow(t, nu) * k;
}

double unit_ball_volume(int n) {
    if (n < 1) throw std::invalid_argument("unit_ball_volume: n must be >= 1");
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

bool sqrt_factorial_inequality_check(int k) {
    if (k < 1) throw std::invalid_argument("sqrt_factorial_inequality_check: k must be >= 1");
    const double lhs = 0.5 * std::lgamma(2.0 * k + 1.0) - std::lgamma(k + 1.0);
    return lhs <= k * std::log(2.0);
}

}  // namespace hspline
