#include "core/powerlaw_fit.hpp"

#include <cmath>
#include <stdexcept>

namespace levysim {

FitResult fit_exponent(const std::vector<long>& times,
                       const std::vector<double>& values, double t_lo,
                       double t_hi) {
  if (times.size() != values.size()) {
    throw std::invalid_argument("times and values must have equal length");
  }
  if (!(t_lo < t_hi) || !(t_lo > 0.0)) {
    throw std::invalid_argument("window must satisfy 0 < t_lo < t_hi");
  }

  std::vector<double> x;
  std::vector<double> y;
  int excluded = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = static_cast<double>(times[k]);
    if (t < t_lo || t > t_hi) {
      continue;
    }
    if (!(values[k] > 0.0)) {
      ++excluded;
      continue;
    }
    x.push_back(std::log(t));
    y.push_back(std::log(values[k]));
  }
  const std::size_t n = x.size();
  if (n < 3) {
    throw std::runtime_error("fit window holds fewer than 3 usable points");
  }

  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    x_mean += x[k];
    y_mean += y[k];
  }
  x_mean /= static_cast<double>(n);
  y_mean /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = x[k] - x_mean;
    const double dy = y[k] - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) {
    throw std::runtime_error("fit window holds a single distinct time");
  }

  FitResult fit;
  fit.c = sxy / sxx;
  fit.log_prefactor = y_mean - fit.c * x_mean;
  fit.t_lo = t_lo;
  fit.t_hi = t_hi;
  fit.n_points = static_cast<int>(n);
  fit.n_excluded = excluded;

  double ssr = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double resid = y[k] - (fit.log_prefactor + fit.c * x[k]);
    ssr += resid * resid;
  }
  ssr = std::max(ssr, 0.0);
  fit.c_stderr =
      n > 2 ? std::sqrt(ssr / (static_cast<double>(n) - 2.0) / sxx) : 0.0;
  // Flat data fit exactly by a flat line: define as a perfect fit.
  fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  fit.r_squared = std::min(std::max(fit.r_squared, 0.0), 1.0);
  return fit;
}

}  // namespace levysim
