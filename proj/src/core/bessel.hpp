#pragma once

#include <complex>
#include <vector>

namespace levysim {

// One-kick convolution row c_m = i^(-m) * J_m(kappa), m in [-M, M].
// The row is even in m and has unit 2-norm (Bessel completeness).
struct KickKernel {
  std::vector<std::complex<double>> coefficients;  // index m + bandwidth
  int bandwidth = 0;                               // M
  double kappa = 0.0;

  const std::complex<double>& at(int m) const {
    return coefficients[static_cast<std::size_t>(m + bandwidth)];
  }
};

// J_0(kappa)..J_M(kappa) for kappa >= 0 by backward recurrence, normalized
// with J_0 + 2*sum_k J_{2k} = 1. M is the smallest order with
// |J_m| < tol for every m > M, plus a safety margin of 5. Relative accuracy
// 1e-12 or better over the returned range.
std::vector<double> bessel_j_row(double kappa, double tol = 1e-16);

KickKernel make_kick_kernel(double kappa, double tol = 1e-16);

}  // namespace levysim
