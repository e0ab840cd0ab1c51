#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/levy_noise.hpp"
#include "core/moments.hpp"
#include "core/qkr_core.hpp"
#include "core/qw_core.hpp"

namespace levysim {

enum class SystemKind : std::uint8_t { qkr = 0, qw = 1 };

struct ExperimentConfig {
  SystemKind system = SystemKind::qkr;
  ResonanceParams rotor;
  CoinParams coin;
  LevyParams levy;
  long n_steps = 2000;
  int n_trajectories = 200;
  std::uint64_t master_seed = 1;
  std::vector<long> record_times;  // empty selects the geometric default
};

void validate(const ExperimentConfig& config);

// All t in [1, 16], then round(16 * 1.1^k) deduplicated, then n_steps.
std::vector<long> default_record_schedule(long n_steps);

// config.record_times if set, else the geometric default.
std::vector<long> resolved_schedule(const ExperimentConfig& config);

// Ensemble statistics on the record schedule. sigma_mean averages the
// per-trajectory sqrt(m2); rms_sigma is sqrt of the averaged m2;
// sigma_stderr is the sample standard deviation of sqrt(m2) over
// trajectories divided by sqrt(N).
struct MomentSeries {
  std::vector<long> times;
  std::vector<double> sigma_mean;
  std::vector<double> sigma_stderr;
  std::vector<double> rms_sigma;
  std::vector<double> m2_mean;
  std::vector<double> m4_mean;
  std::vector<double> m6_mean;
};

// Noise-stream key of one trajectory; collision-free across indices for a
// fixed master seed.
std::uint64_t trajectory_seed(std::uint64_t master_seed,
                              std::uint64_t trajectory_index);

// Single noise realization evolved from |0>; moment columns hold that one
// trajectory's values and sigma_stderr is all zeros.
MomentSeries run_trajectory(const ExperimentConfig& config,
                            std::uint64_t trajectory_index);

using ProgressFn = std::function<void(long completed, long total)>;

// Runs n_trajectories independent noise realizations and aggregates them
// in trajectory-index order. The result depends only on the config, never
// on n_workers (<= 0 picks hardware concurrency) or thread timing.
MomentSeries run_ensemble(const ExperimentConfig& config, int n_workers = 0,
                          const ProgressFn& progress = nullptr);

}  // namespace levysim
