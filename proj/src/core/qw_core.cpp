#include "core/qw_core.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace levysim {

void validate(const CoinParams& params) {
  if (!std::isfinite(params.theta1) || !std::isfinite(params.theta2)) {
    throw std::invalid_argument("coin angles must be finite");
  }
}

WalkerState make_walker_origin(long n_steps, Chirality chirality) {
  if (n_steps < 1) {
    throw std::invalid_argument("n_steps must be >= 1");
  }
  WalkerState state;
  state.half_width = static_cast<int>(n_steps) + 1;
  const std::size_t size = 2 * static_cast<std::size_t>(state.half_width) + 1;
  state.left.assign(size, {0.0, 0.0});
  state.right.assign(size, {0.0, 0.0});
  state.scratch_left.assign(size, {0.0, 0.0});
  state.scratch_right.assign(size, {0.0, 0.0});
  if (chirality == Chirality::plus) {
    state.l_at(0) = 1.0;
  } else {
    state.l_at(0) = 1.0 / std::sqrt(2.0);
    state.r_at(0) = std::complex<double>(0.0, 1.0 / std::sqrt(2.0));
  }
  return state;
}

std::array<double, 4> coin_matrix(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("theta must be finite");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, -s, -c};
}

void qw_step(WalkerState& state, double theta) {
  const std::array<double, 4> k = coin_matrix(theta);
  const int t = static_cast<int>(state.time);
  const int lo = -std::min(t, state.half_width - 1);
  const int hi = std::min(t, state.half_width - 1);

  // The scratch content from two steps back fits inside today's light cone,
  // so zeroing [lo-1, hi+1] leaves everything outside provably zero.
  const std::size_t z_lo = static_cast<std::size_t>(state.half_width + lo - 1);
  const std::size_t z_hi = static_cast<std::size_t>(state.half_width + hi + 1);
  std::fill(state.scratch_left.begin() + z_lo,
            state.scratch_left.begin() + z_hi + 1, std::complex<double>{});
  std::fill(state.scratch_right.begin() + z_lo,
            state.scratch_right.begin() + z_hi + 1, std::complex<double>{});

  for (int i = lo; i <= hi; ++i) {
    const std::complex<double> a = state.l_at(i);
    const std::complex<double> b = state.r_at(i);
    const std::complex<double> coined_l = k[0] * a + k[1] * b;
    const std::complex<double> coined_r = k[2] * a + k[3] * b;
    state.scratch_left[static_cast<std::size_t>(state.half_width + i - 1)] +=
        coined_l;
    state.scratch_right[static_cast<std::size_t>(state.half_width + i + 1)] +=
        coined_r;
  }
  state.left.swap(state.scratch_left);
  state.right.swap(state.scratch_right);
  ++state.time;
}

Moments walker_moments(const WalkerState& state) {
  Moments out;
  for (int i = -state.half_width; i <= state.half_width; ++i) {
    const double w = std::norm(state.l_at(i)) + std::norm(state.r_at(i));
    if (w == 0.0) {
      continue;
    }
    const double i2 = static_cast<double>(i) * i;
    out.m2 += i2 * w;
    out.m4 += i2 * i2 * w;
    out.m6 += i2 * i2 * i2 * w;
  }
  return out;
}

double walker_norm(const WalkerState& state) {
  double norm = 0.0;
  for (const std::complex<double>& a : state.left) {
    norm += std::norm(a);
  }
  for (const std::complex<double>& b : state.right) {
    norm += std::norm(b);
  }
  return norm;
}

void dump_walker_snapshot(const WalkerState& state, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.precision(17);
  for (int i = -state.half_width; i <= state.half_width; ++i) {
    const std::complex<double>& a = state.l_at(i);
    const std::complex<double>& b = state.r_at(i);
    if (std::norm(a) == 0.0 && std::norm(b) == 0.0) {
      continue;
    }
    out << i << ", " << a.real() << ", " << a.imag() << ", " << b.real()
        << ", " << b.imag() << "\n";
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace levysim
