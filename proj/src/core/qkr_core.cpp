#include "core/qkr_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace levysim {

namespace {

constexpr double kTrackEps = 1e-32;  // |a|^2 below this counts as empty

// exp(-2*pi*i * mult * (r^2 mod q) / q) for each residue r of l mod q.
std::vector<std::complex<double>> phase_table(const ResonanceParams& params) {
  const long q = params.q;
  long mult = params.p % q;
  if (params.phase_convention == PhaseConvention::paper_literal) {
    mult = (4 * static_cast<long>(params.p)) % q;
  }
  std::vector<std::complex<double>> table(static_cast<std::size_t>(q));
  for (long r = 0; r < q; ++r) {
    const long k = (mult * ((r * r) % q)) % q;
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(q);
    table[static_cast<std::size_t>(r)] = std::polar(1.0, angle);
  }
  return table;
}

int support_radius(const RotorState& state) {
  for (int ell = state.half_width; ell > 0; --ell) {
    if (std::norm(state.at(ell)) > kTrackEps || std::norm(state.at(-ell)) > kTrackEps) {
      return ell;
    }
  }
  return 0;
}

void grow_to(RotorState& state, int new_half_width) {
  std::vector<std::complex<double>> wider(
      2 * static_cast<std::size_t>(new_half_width) + 1, {0.0, 0.0});
  const int shift = new_half_width - state.half_width;
  std::copy(state.amplitudes.begin(), state.amplitudes.end(),
            wider.begin() + shift);
  state.amplitudes = std::move(wider);
  state.half_width = new_half_width;
}

}  // namespace

void validate(const ResonanceParams& params) {
  if (params.p < 1 || params.q < 1) {
    throw std::invalid_argument("p and q must be positive");
  }
  if (std::gcd(params.p, params.q) != 1) {
    throw std::invalid_argument("p/q must be in lowest terms");
  }
  if (!std::isfinite(params.kappa1) || !std::isfinite(params.kappa2)) {
    throw std::invalid_argument("kick strengths must be finite");
  }
}

RotorState make_rotor_origin(int half_width) {
  if (half_width < 1) {
    throw std::invalid_argument("half_width must be >= 1");
  }
  RotorState state;
  state.half_width = half_width;
  state.amplitudes.assign(2 * static_cast<std::size_t>(half_width) + 1,
                          {0.0, 0.0});
  state.at(0) = 1.0;
  return state;
}

std::complex<double> resonance_phase(long ell, const ResonanceParams& params) {
  validate(params);
  const ResonanceParams& p = params;
  const long q = p.q;
  const long r = ((ell % q) + q) % q;
  return phase_table(p)[static_cast<std::size_t>(r)];
}

void qkr_step(RotorState& state, const KickKernel& kernel,
              const ResonanceParams& params) {
  validate(params);
  const int M = kernel.bandwidth;
  const int r = support_radius(state);
  if (state.half_width < r + M + 1) {
    grow_to(state, std::max(state.half_width + std::max(2 * M, 64), r + M + 1));
  }

  const std::vector<std::complex<double>> phases = phase_table(params);
  const long q = params.q;

  // Phased copy of the occupied window; b[r + l] is site l.
  thread_local std::vector<std::complex<double>> b;
  b.assign(2 * static_cast<std::size_t>(r) + 1, {0.0, 0.0});
  long residue = ((-static_cast<long>(r)) % q + q) % q;
  for (int ell = -r; ell <= r; ++ell) {
    b[static_cast<std::size_t>(r + ell)] =
        phases[static_cast<std::size_t>(residue)] * state.at(ell);
    ++residue;
    if (residue == q) {
      residue = 0;
    }
  }

  // a'_l = sum_m c_m * b_{l+m}; b vanishes outside [-r, r].
  const std::complex<double>* c = kernel.coefficients.data();
  for (int ell = -(r + M); ell <= r + M; ++ell) {
    const int m_lo = std::max(-M, -r - ell);
    const int m_hi = std::min(M, r - ell);
    std::complex<double> sum = 0.0;
    for (int m = m_lo; m <= m_hi; ++m) {
      sum += c[M + m] * b[static_cast<std::size_t>(r + ell + m)];
    }
    state.at(ell) = sum;
  }
  ++state.time;
}

Moments rotor_moments(const RotorState& state) {
  Moments out;
  for (int ell = -state.half_width; ell <= state.half_width; ++ell) {
    const double w = std::norm(state.at(ell));
    if (w == 0.0) {
      continue;
    }
    const double l2 = static_cast<double>(ell) * ell;
    out.m2 += l2 * w;
    out.m4 += l2 * l2 * w;
    out.m6 += l2 * l2 * l2 * w;
  }
  return out;
}

double rotor_norm(const RotorState& state) {
  double norm = 0.0;
  for (const std::complex<double>& a : state.amplitudes) {
    norm += std::norm(a);
  }
  return norm;
}

void dump_rotor_snapshot(const RotorState& state, std::ostream& out) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.precision(17);
  for (int ell = -state.half_width; ell <= state.half_width; ++ell) {
    const std::complex<double>& a = state.at(ell);
    if (std::norm(a) == 0.0) {
      continue;
    }
    out << ell << ", " << a.real() << ", " << a.imag() << "\n";
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace levysim
