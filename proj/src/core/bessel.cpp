#include "core/bessel.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace levysim {

namespace {

// Miller backward recurrence from seed order n_start, normalized with
// J_0 + 2*sum J_{2k} = 1. Valid for kappa > 0.
std::vector<double> miller_row(double kappa, int n_start) {
  std::vector<double> f(static_cast<std::size_t>(n_start) + 2, 0.0);
  f[static_cast<std::size_t>(n_start) + 1] = 0.0;
  f[static_cast<std::size_t>(n_start)] = 1e-30;
  for (int n = n_start; n >= 1; --n) {
    f[static_cast<std::size_t>(n) - 1] =
        (2.0 * n / kappa) * f[static_cast<std::size_t>(n)] -
        f[static_cast<std::size_t>(n) + 1];
    // Magnitudes grow toward low orders; rescale before they overflow.
    if (std::abs(f[static_cast<std::size_t>(n) - 1]) > 1e250) {
      for (std::size_t k = static_cast<std::size_t>(n) - 1; k < f.size(); ++k) {
        f[k] *= 1e-250;
      }
    }
  }
  double norm = f[0];
  for (std::size_t m = 2; m <= static_cast<std::size_t>(n_start); m += 2) {
    norm += 2.0 * f[m];
  }
  f.resize(static_cast<std::size_t>(n_start) + 1);
  for (double& v : f) {
    v /= norm;
  }
  return f;
}

}  // namespace

std::vector<double> bessel_j_row(double kappa, double tol) {
  if (!std::isfinite(kappa) || kappa < 0.0) {
    throw std::invalid_argument("bessel_j_row needs finite kappa >= 0");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tol must be positive");
  }
  if (kappa == 0.0) {
    return {1.0};
  }

  // Seed order past the turning point, deep enough that the seed's own
  // error has decayed away over the returned range; then verify against a
  // deeper start until stable.
  int n_start = static_cast<int>(kappa) + 40 +
                static_cast<int>(12.0 * std::cbrt(kappa + 1.0));
  std::vector<double> row = miller_row(kappa, n_start);
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<double> deeper = miller_row(kappa, n_start + 12);
    double worst = 0.0;
    for (std::size_t m = 0; m < row.size(); ++m) {
      if (std::abs(deeper[m]) < tol * 1e-3) {
        continue;  // below truncation relevance
      }
      worst = std::max(worst, std::abs(row[m] - deeper[m]) / std::abs(deeper[m]));
    }
    if (worst < 1e-13) {
      row = std::move(deeper);
      break;
    }
    n_start += 12;
    row = std::move(deeper);
  }

  // Beyond the turning point the row decays monotonically, so the first
  // sub-tol entry there bounds everything past it. Interior zeros at lower
  // orders must not terminate the scan.
  int M = static_cast<int>(row.size()) - 1;
  for (int m = static_cast<int>(std::ceil(kappa)); m < static_cast<int>(row.size()); ++m) {
    if (std::abs(row[static_cast<std::size_t>(m)]) < tol) {
      M = m;
      break;
    }
  }
  M = std::min(M + 5, static_cast<int>(row.size()) - 1);
  row.resize(static_cast<std::size_t>(M) + 1);
  return row;
}

KickKernel make_kick_kernel(double kappa, double tol) {
  if (!std::isfinite(kappa)) {
    throw std::invalid_argument("kappa must be finite");
  }
  const std::vector<double> j = bessel_j_row(std::abs(kappa), tol);
  const int M = static_cast<int>(j.size()) - 1;

  KickKernel kernel;
  kernel.bandwidth = M;
  kernel.kappa = kappa;
  kernel.coefficients.assign(2 * static_cast<std::size_t>(M) + 1, {0.0, 0.0});

  // c_m = i^(-m) J_m(kappa); J_m(-k) = (-1)^m J_m(k); row is even in m.
  static const std::complex<double> cycle[4] = {
      {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  for (int m = 0; m <= M; ++m) {
    double jm = j[static_cast<std::size_t>(m)];
    if (kappa < 0.0 && (m & 1)) {
      jm = -jm;
    }
    const std::complex<double> cm = cycle[m & 3] * jm;
    kernel.coefficients[static_cast<std::size_t>(M + m)] = cm;
    kernel.coefficients[static_cast<std::size_t>(M - m)] = cm;
  }
  return kernel;
}

}  // namespace levysim
