#ifndef HSPLINE_KERNEL_HPP
#define HSPLINE_KERNEL_HPP

namespace hspline {

/// Parameters of the shifted surface spline kernel
///   h(r) = (-1)^m (r^2 + c^2)^{lambda/2} * (1/2) log(r^2 + c^2)
/// for even spatial dimension n and even smoothness exponent lambda.
/// The kernel is conditionally positive definite of order m = 1 + lambda/2.
struct KernelParams {
    int n;              // spatial dimension, even, >= 2
    int lambda;         // smoothness exponent, even, >= 2
    double c;           // shift parameter, > 0
    double l_const;     // Fourier-transform constant l(lambda, n), > 0

    KernelParams(int n_, int lambda_, double c_, double l_const_ = 1.0);

    // order of conditional positive definiteness, m = 1 + lambda/2
    int order() const { return 1 + lambda / 2; }

    // order of the Bessel function in the Fourier density, nu = (n+lambda)/2
    int bessel_order() const { return (n + lambda) / 2; }
};

// Radial kernel value at distance r >= 0.
double kernel_value(const KernelParams& params, double r);

// Modified Bessel function of the second kind, integer order nu >= 0, t > 0.
// Throws std::overflow_error when the value exceeds the representable range.
double bessel_k_int(int nu, double t);

// Radial Fourier density of the kernel at frequency radius rho_freq > 0:
//   l_const * rho^{-lambda-n} * (c rho)^nu * K_nu(c rho),  nu = (n+lambda)/2.
double fourier_density(const KernelParams& params, double rho_freq);

// Volume of the unit ball in R^n: pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int n);

// Log-domain check of sqrt((2k)!) / k! <= 2^k.
bool sqrt_factorial_inequality_check(int k);

}  // namespace hspline

#endif
