#pragma once

#include <cstddef>
#include <vector>

namespace levysim {

struct FitResult {
  double c = 0.0;              // slope of ln(sigma) vs ln(t)
  double c_stderr = 0.0;
  double log_prefactor = 0.0;  // intercept: ln(sigma) at t = 1
  double r_squared = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  int n_points = 0;
  int n_excluded = 0;          // in-window points dropped for sigma <= 0
};

// Unweighted OLS of ln(values) on ln(times) over times in [t_lo, t_hi].
// Nonpositive values inside the window are excluded (counted in
// n_excluded). Throws std::invalid_argument on a bad window and
// std::runtime_error when fewer than 3 usable points remain.
FitResult fit_exponent(const std::vector<long>& times,
                       const std::vector<double>& values, double t_lo,
                       double t_hi);

}  // namespace levysim
