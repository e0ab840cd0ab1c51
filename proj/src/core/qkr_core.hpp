#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "core/bessel.hpp"
#include "core/moments.hpp"

namespace levysim {

enum class PhaseConvention : std::uint8_t { standard = 0, paper_literal = 1 };

// Rational resonance p/q plus the two kick strengths. Free evolution over
// one period contributes exp(-i*2*pi*(p/q)*l^2) per momentum site l under
// the standard convention; paper_literal quadruples the angle.
struct ResonanceParams {
  int p = 1;
  int q = 3;
  double kappa1 = 1.0;
  double kappa2 = -1.0;
  PhaseConvention phase_convention = PhaseConvention::standard;
};

// Throws std::invalid_argument unless q >= 1, p >= 1, gcd(p,q) = 1 and the
// kick strengths are finite.
void validate(const ResonanceParams& params);

// Wavefunction over momentum sites l in [-half_width, half_width];
// amplitudes[half_width + l] is site l. Grows on demand so that boundary
// amplitudes stay below 1e-14 in modulus squared.
struct RotorState {
  std::vector<std::complex<double>> amplitudes;
  int half_width = 0;
  long time = 0;

  std::complex<double>& at(int ell) {
    return amplitudes[static_cast<std::size_t>(half_width + ell)];
  }
  const std::complex<double>& at(int ell) const {
    return amplitudes[static_cast<std::size_t>(half_width + ell)];
  }
};

// Position eigenstate |0>: a_0 = 1.
RotorState make_rotor_origin(int half_width);

std::complex<double> resonance_phase(long ell, const ResonanceParams& params);

// Free phase then banded convolution with the kick kernel, in place.
void qkr_step(RotorState& state, const KickKernel& kernel,
              const ResonanceParams& params);

Moments rotor_moments(const RotorState& state);

double rotor_norm(const RotorState& state);

// Debug dump: one "l, Re(a_l), Im(a_l)" row per occupied site.
void dump_rotor_snapshot(const RotorState& state, std::ostream& out);

}  // namespace levysim
