#include "core/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace levysim {

namespace {

// Moments of one trajectory at every scheduled time.
std::vector<Moments> trajectory_moments(const ExperimentConfig& config,
                                        std::uint64_t trajectory_index,
                                        const std::vector<long>& schedule,
                                        const KickKernel* kernel1,
                                        const KickKernel* kernel2) {
  const NoiseSequence sequence =
      generate_sequence(trajectory_seed(config.master_seed, trajectory_index),
                        config.levy, static_cast<std::size_t>(config.n_steps));

  std::vector<Moments> recorded;
  recorded.reserve(schedule.size());
  std::size_t next_record = 0;

  if (config.system == SystemKind::qkr) {
    const int bandwidth = std::max(kernel1->bandwidth, kernel2->bandwidth);
    RotorState state = make_rotor_origin(std::max(4 * bandwidth, 8));
    for (long t = 1; t <= config.n_steps; ++t) {
      const bool interrupt =
          sequence.labels[static_cast<std::size_t>(t - 1)] == OperatorLabel::U1;
      qkr_step(state, interrupt ? *kernel2 : *kernel1, config.rotor);
      if (next_record < schedule.size() && schedule[next_record] == t) {
        recorded.push_back(rotor_moments(state));
        ++next_record;
      }
    }
  } else {
    WalkerState state =
        make_walker_origin(config.n_steps, config.coin.initial_chirality);
    for (long t = 1; t <= config.n_steps; ++t) {
      const bool interrupt =
          sequence.labels[static_cast<std::size_t>(t - 1)] == OperatorLabel::U1;
      qw_step(state, interrupt ? config.coin.theta2 : config.coin.theta1);
      if (next_record < schedule.size() && schedule[next_record] == t) {
        recorded.push_back(walker_moments(state));
        ++next_record;
      }
    }
  }
  return recorded;
}

MomentSeries reduce(const std::vector<long>& schedule,
                    const std::vector<std::vector<Moments>>& slab) {
  const std::size_t n_times = schedule.size();
  const std::size_t n_traj = slab.size();
  const double n = static_cast<double>(n_traj);

  MomentSeries series;
  series.times = schedule;
  series.sigma_mean.resize(n_times);
  series.sigma_stderr.resize(n_times);
  series.rms_sigma.resize(n_times);
  series.m2_mean.resize(n_times);
  series.m4_mean.resize(n_times);
  series.m6_mean.resize(n_times);

  for (std::size_t k = 0; k < n_times; ++k) {
    double sum_sigma = 0.0;
    double sum_m2 = 0.0;
    double sum_m4 = 0.0;
    double sum_m6 = 0.0;
    for (std::size_t i = 0; i < n_traj; ++i) {
      const Moments& m = slab[i][k];
      sum_sigma += std::sqrt(m.m2);
      sum_m2 += m.m2;
      sum_m4 += m.m4;
      sum_m6 += m.m6;
    }
    const double mean_sigma = sum_sigma / n;
    double sq_dev = 0.0;
    for (std::size_t i = 0; i < n_traj; ++i) {
      const double d = std::sqrt(slab[i][k].m2) - mean_sigma;
      sq_dev += d * d;
    }
    series.sigma_mean[k] = mean_sigma;
    series.sigma_stderr[k] =
        n_traj > 1 ? std::sqrt(sq_dev / (n - 1.0) / n) : 0.0;
    series.rms_sigma[k] = std::sqrt(sum_m2 / n);
    series.m2_mean[k] = sum_m2 / n;
    series.m4_mean[k] = sum_m4 / n;
    series.m6_mean[k] = sum_m6 / n;
  }
  return series;
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.system == SystemKind::qkr) {
    validate(config.rotor);
  } else {
    validate(config.coin);
  }
  validate(config.levy);
  if (config.n_steps < 1) {
    throw std::invalid_argument("n_steps must be >= 1");
  }
  if (config.n_trajectories < 1) {
    throw std::invalid_argument("n_trajectories must be >= 1");
  }
  long previous = 0;
  for (long t : config.record_times) {
    if (t <= previous || t > config.n_steps) {
      throw std::invalid_argument(
          "record_times must be strictly increasing within [1, n_steps]");
    }
    previous = t;
  }
}

std::vector<long> default_record_schedule(long n_steps) {
  if (n_steps < 1) {
    throw std::invalid_argument("n_steps must be >= 1");
  }
  std::vector<long> schedule;
  for (long t = 1; t <= std::min<long>(16, n_steps); ++t) {
    schedule.push_back(t);
  }
  double v = 16.0;
  while (schedule.back() < n_steps) {
    v *= 1.1;
    const long t = std::llround(v);
    if (t >= n_steps) {
      break;
    }
    if (t > schedule.back()) {
      schedule.push_back(t);
    }
  }
  if (schedule.back() < n_steps) {
    schedule.push_back(n_steps);
  }
  return schedule;
}

std::vector<long> resolved_schedule(const ExperimentConfig& config) {
  return config.record_times.empty() ? default_record_schedule(config.n_steps)
                                     : config.record_times;
}

std::uint64_t trajectory_seed(std::uint64_t master_seed,
                              std::uint64_t trajectory_index) {
  return mix64(master_seed ^ mix64(trajectory_index * kGolden + 1));
}

MomentSeries run_trajectory(const ExperimentConfig& config,
                            std::uint64_t trajectory_index) {
  validate(config);
  const std::vector<long> schedule = resolved_schedule(config);
  KickKernel kernel1;
  KickKernel kernel2;
  if (config.system == SystemKind::qkr) {
    kernel1 = make_kick_kernel(config.rotor.kappa1);
    kernel2 = make_kick_kernel(config.rotor.kappa2);
  }
  const std::vector<Moments> recorded = trajectory_moments(
      config, trajectory_index, schedule, &kernel1, &kernel2);

  MomentSeries series;
  series.times = schedule;
  for (const Moments& m : recorded) {
    const double sigma = std::sqrt(m.m2);
    series.sigma_mean.push_back(sigma);
    series.sigma_stderr.push_back(0.0);
    series.rms_sigma.push_back(sigma);
    series.m2_mean.push_back(m.m2);
    series.m4_mean.push_back(m.m4);
    series.m6_mean.push_back(m.m6);
  }
  return series;
}

MomentSeries run_ensemble(const ExperimentConfig& config, int n_workers,
                          const ProgressFn& progress) {
  validate(config);
  const std::vector<long> schedule = resolved_schedule(config);
  const long n_traj = config.n_trajectories;

  KickKernel kernel1;
  KickKernel kernel2;
  if (config.system == SystemKind::qkr) {
    kernel1 = make_kick_kernel(config.rotor.kappa1);
    kernel2 = make_kick_kernel(config.rotor.kappa2);
  }

  if (n_workers <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    n_workers = hw == 0 ? 1 : static_cast<int>(hw);
  }
  n_workers = static_cast<int>(std::min<long>(n_workers, n_traj));

  std::vector<std::vector<Moments>> slab(static_cast<std::size_t>(n_traj));
  std::atomic<long> next_index{0};
  std::atomic<long> completed{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::mutex progress_mutex;

  auto worker = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      const long i = next_index.fetch_add(1);
      if (i >= n_traj) {
        return;
      }
      try {
        slab[static_cast<std::size_t>(i)] =
            trajectory_moments(config, static_cast<std::uint64_t>(i), schedule,
                               &kernel1, &kernel2);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
        return;
      }
      const long done = completed.fetch_add(1) + 1;
      if (progress) {
        std::scoped_lock lock(progress_mutex);
        progress(done, n_traj);
      }
    }
  };

  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) {
      pool.emplace_back(worker);
    }
    for (std::thread& thread : pool) {
      thread.join();
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
  // Aggregation visits trajectories in index order, so the result is
  // independent of which worker produced which slab row.
  return reduce(schedule, slab);
}

}  // namespace levysim
