#include "core/levy_noise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace levysim {

void validate(const LevyParams& params) {
  if (!(params.alpha > 0.0) || !(params.alpha <= 2.0)) {
    throw std::invalid_argument("alpha must be in (0, 2]");
  }
  if (!(params.T > 0.0) || !std::isfinite(params.T)) {
    throw std::invalid_argument("T must be positive and finite");
  }
}

double waiting_density(double t, const LevyParams& params) {
  validate(params);
  if (!(t >= 0.0)) {
    throw std::invalid_argument("time must be nonnegative");
  }
  const double head = params.alpha / ((1.0 + params.alpha) * params.T);
  if (t < params.T) {
    return head;
  }
  return head * std::pow(params.T / t, params.alpha + 1.0);
}

double waiting_cdf(double x, const LevyParams& params) {
  validate(params);
  if (!(x >= 0.0)) {
    throw std::invalid_argument("time must be nonnegative");
  }
  const double a = params.alpha;
  if (x < params.T) {
    return a * x / ((1.0 + a) * params.T);
  }
  return (a + 1.0 - std::pow(params.T / x, a)) / (1.0 + a);
}

double waiting_quantile(double gamma, const LevyParams& params) {
  validate(params);
  if (!(gamma >= 0.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in [0, 1)");
  }
  const double a = params.alpha;
  const double flat_mass = a / (1.0 + a);
  if (gamma < flat_mass) {
    return gamma * (1.0 + a) * params.T / a;
  }
  // Tail branch: survival (1 - gamma) = (T/xi)^a / (1+a).
  return params.T * std::pow((1.0 + a) * (1.0 - gamma), -1.0 / a);
}

std::uint64_t sample_waiting_steps(CounterRng& rng, const LevyParams& params) {
  const double xi = waiting_quantile(rng.next_double(), params);
  const double steps = std::floor(xi / params.T);
  if (steps >= 9.2233720368547758e18) {  // 2^63; far beyond any usable horizon
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(steps);
}

NoiseSequence generate_sequence(std::uint64_t seed, const LevyParams& params,
                                std::size_t n_steps) {
  validate(params);
  if (n_steps < 1) {
    throw std::invalid_argument("n_steps must be >= 1");
  }
  NoiseSequence sequence;
  sequence.seed = seed;
  sequence.alpha = params.alpha;
  sequence.labels.reserve(n_steps);
  CounterRng rng(seed);
  while (sequence.labels.size() < n_steps) {
    std::uint64_t wait = sample_waiting_steps(rng, params);
    const std::uint64_t room = n_steps - sequence.labels.size();
    for (std::uint64_t k = 0; k < wait && k < room; ++k) {
      sequence.labels.push_back(OperatorLabel::U0);
    }
    if (wait < room) {
      sequence.labels.push_back(OperatorLabel::U1);
    }
  }
  return sequence;
}

std::string sequence_to_string(const NoiseSequence& sequence) {
  std::string line;
  line.reserve(sequence.labels.size());
  for (OperatorLabel label : sequence.labels) {
    line.push_back(label == OperatorLabel::U1 ? '1' : '0');
  }
  return line;
}

}  // namespace levysim
