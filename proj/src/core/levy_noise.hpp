#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "core/rng.hpp"

namespace levysim {

// Truncated power-law waiting-time law: flat density alpha/((1+alpha)T) on
// [0,T), tail alpha/((1+alpha)T) * (T/t)^(alpha+1) for t >= T.
struct LevyParams {
  double alpha = 1.0;
  double T = 1.0;
};

// Throws std::invalid_argument unless 0 < alpha <= 2 and T > 0.
void validate(const LevyParams& params);

enum class OperatorLabel : std::uint8_t { U0 = 0, U1 = 1 };

struct NoiseSequence {
  std::vector<OperatorLabel> labels;  // one per time step, labels[0] is t=1
  std::uint64_t seed = 0;
  double alpha = 0.0;
};

double waiting_density(double t, const LevyParams& params);
double waiting_cdf(double x, const LevyParams& params);

// Closed-form inverse of waiting_cdf on [0,1).
double waiting_quantile(double gamma, const LevyParams& params);

// floor(quantile(gamma)/T) for one uniform draw; saturates at uint64 max
// when the tail draw exceeds the integer range (alpha small, gamma near 1).
std::uint64_t sample_waiting_steps(CounterRng& rng, const LevyParams& params);

// Blocks of (i copies of U0, then one U1), truncated to exactly n_steps.
// i = 0 puts U1 labels back to back.
NoiseSequence generate_sequence(std::uint64_t seed, const LevyParams& params,
                                std::size_t n_steps);

// '0'/'1' per step, time order, leftmost is t=1.
std::string sequence_to_string(const NoiseSequence& sequence);

}  // namespace levysim
