#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "core/moments.hpp"

namespace levysim {

enum class Chirality : std::uint8_t { plus = 0, symmetric = 1 };

// Coin angles for the two step operators U0 = U(theta1), U1 = U(theta2),
// plus the walker's initial internal state: (1,0) or (1,i)/sqrt(2).
struct CoinParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  Chirality initial_chirality = Chirality::plus;
};

void validate(const CoinParams& params);

// Walker on the line: left[i + half_width] / right[i + half_width] are the
// two chirality amplitudes at site i. Arrays are sized once for the full
// horizon; support stays inside |i| <= time (light cone) with the parity
// of time.
struct WalkerState {
  std::vector<std::complex<double>> left;
  std::vector<std::complex<double>> right;
  int half_width = 0;
  long time = 0;

  // Step scratch, swapped with left/right each step. Holds zeros outside
  // the light cone of the state it last carried.
  std::vector<std::complex<double>> scratch_left;
  std::vector<std::complex<double>> scratch_right;

  std::complex<double>& l_at(int i) {
    return left[static_cast<std::size_t>(half_width + i)];
  }
  std::complex<double>& r_at(int i) {
    return right[static_cast<std::size_t>(half_width + i)];
  }
  const std::complex<double>& l_at(int i) const {
    return left[static_cast<std::size_t>(half_width + i)];
  }
  const std::complex<double>& r_at(int i) const {
    return right[static_cast<std::size_t>(half_width + i)];
  }
};

// Walker at site 0 with the requested internal state, sized for n_steps.
WalkerState make_walker_origin(long n_steps, Chirality chirality);

// K(theta) = sigma_z * exp(-i*theta*sigma_y), row-major on (left, right).
// Real-valued: [[cos, -sin], [-sin, -cos]].
std::array<double, 4> coin_matrix(double theta);

// Coin on every site, then conditional shift: left movers to i-1, right
// movers to i+1.
void qw_step(WalkerState& state, double theta);

Moments walker_moments(const WalkerState& state);

double walker_norm(const WalkerState& state);

// Debug dump: "i, Re(a_i), Im(a_i), Re(b_i), Im(b_i)" per occupied site.
void dump_walker_snapshot(const WalkerState& state, std::ostream& out);

}  // namespace levysim
