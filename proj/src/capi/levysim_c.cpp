#include "levysim.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/ensemble.hpp"
#include "core/powerlaw_fit.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
levysim_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return LEVYSIM_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "allocation failed";
    return LEVYSIM_ERR_ALLOCATION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LEVYSIM_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LEVYSIM_ERR_INTERNAL;
  }
}

levysim::ExperimentConfig to_core_config(const levysim_config& c) {
  levysim::ExperimentConfig config;
  switch (c.system) {
    case LEVYSIM_SYSTEM_QKR:
      config.system = levysim::SystemKind::qkr;
      break;
    case LEVYSIM_SYSTEM_QW:
      config.system = levysim::SystemKind::qw;
      break;
    default:
      throw std::invalid_argument("unknown system");
  }
  config.levy.alpha = c.alpha;
  config.levy.T = 1.0;
  if (c.n_steps < 1 || c.n_steps > 100000000LL) {
    throw std::invalid_argument("n_steps out of range");
  }
  if (c.n_trajectories < 1 || c.n_trajectories > 100000000LL) {
    throw std::invalid_argument("n_trajectories out of range");
  }
  config.n_steps = static_cast<long>(c.n_steps);
  config.n_trajectories = static_cast<int>(c.n_trajectories);
  config.master_seed = c.master_seed;

  config.rotor.p = c.p;
  config.rotor.q = c.q;
  config.rotor.kappa1 = c.kappa1;
  config.rotor.kappa2 = c.kappa2;
  switch (c.phase_convention) {
    case LEVYSIM_PHASE_STANDARD:
      config.rotor.phase_convention = levysim::PhaseConvention::standard;
      break;
    case LEVYSIM_PHASE_PAPER_LITERAL:
      config.rotor.phase_convention = levysim::PhaseConvention::paper_literal;
      break;
    default:
      throw std::invalid_argument("unknown phase convention");
  }

  config.coin.theta1 = c.theta1;
  config.coin.theta2 = c.theta2;
  switch (c.chirality) {
    case LEVYSIM_CHIRALITY_PLUS:
      config.coin.initial_chirality = levysim::Chirality::plus;
      break;
    case LEVYSIM_CHIRALITY_SYMMETRIC:
      config.coin.initial_chirality = levysim::Chirality::symmetric;
      break;
    default:
      throw std::invalid_argument("unknown chirality");
  }

  if (c.record_all) {
    config.record_times.resize(static_cast<std::size_t>(config.n_steps));
    std::iota(config.record_times.begin(), config.record_times.end(), 1L);
  }
  levysim::validate(config);
  return config;
}

const std::vector<double>* column_of(const levysim::MomentSeries& series,
                                     levysim_column column) {
  switch (column) {
    case LEVYSIM_COLUMN_SIGMA_MEAN:
      return &series.sigma_mean;
    case LEVYSIM_COLUMN_SIGMA_STDERR:
      return &series.sigma_stderr;
    case LEVYSIM_COLUMN_RMS_SIGMA:
      return &series.rms_sigma;
    case LEVYSIM_COLUMN_M2_MEAN:
      return &series.m2_mean;
    case LEVYSIM_COLUMN_M4_MEAN:
      return &series.m4_mean;
    case LEVYSIM_COLUMN_M6_MEAN:
      return &series.m6_mean;
  }
  return nullptr;
}

}  // namespace

struct levysim_result {
  levysim::MomentSeries series;
};

extern "C" {

void levysim_config_init(levysim_config* config) {
  if (config == nullptr) {
    return;
  }
  std::memset(config, 0, sizeof(*config));
  config->system = LEVYSIM_SYSTEM_QKR;
  config->alpha = 1.0;
  config->n_steps = 2000;
  config->n_trajectories = 200;
  config->master_seed = 1;
  config->p = 1;
  config->q = 3;
  config->kappa1 = 1.0;
  config->kappa2 = -1.0;
  config->phase_convention = LEVYSIM_PHASE_STANDARD;
  config->theta1 = 1.0471975511965977;  /* pi/3 */
  config->theta2 = 0.5235987755982988;  /* pi/6 */
  config->chirality = LEVYSIM_CHIRALITY_PLUS;
  config->record_all = 0;
  config->n_workers = 0;
  config->progress = nullptr;
  config->progress_user_data = nullptr;
}

levysim_status levysim_run(const levysim_config* config,
                           levysim_result** out_result) {
  return guarded([&]() {
    if (config == nullptr || out_result == nullptr) {
      throw std::invalid_argument("config and out_result must be non-null");
    }
    *out_result = nullptr;
    const levysim::ExperimentConfig core_config = to_core_config(*config);

    levysim::ProgressFn progress;
    if (config->progress != nullptr) {
      levysim_progress_fn fn = config->progress;
      void* user = config->progress_user_data;
      progress = [fn, user](long completed, long total) {
        fn(completed, total, user);
      };
    }
    auto result = std::make_unique<levysim_result>();
    result->series =
        levysim::run_ensemble(core_config, config->n_workers, progress);
    *out_result = result.release();
    return LEVYSIM_OK;
  });
}

void levysim_result_free(levysim_result* result) { delete result; }

long long levysim_result_n_times(const levysim_result* result) {
  if (result == nullptr) {
    return 0;
  }
  return static_cast<long long>(result->series.times.size());
}

levysim_status levysim_result_times(const levysim_result* result,
                                    long long* buffer, long long buffer_len) {
  return guarded([&]() {
    if (result == nullptr || buffer == nullptr) {
      throw std::invalid_argument("result and buffer must be non-null");
    }
    const std::size_t n = result->series.times.size();
    if (buffer_len < static_cast<long long>(n)) {
      g_last_error = "buffer too small";
      return LEVYSIM_ERR_BUFFER_TOO_SMALL;
    }
    for (std::size_t k = 0; k < n; ++k) {
      buffer[k] = result->series.times[k];
    }
    return LEVYSIM_OK;
  });
}

levysim_status levysim_result_column(const levysim_result* result,
                                     levysim_column column, double* buffer,
                                     long long buffer_len) {
  return guarded([&]() {
    if (result == nullptr || buffer == nullptr) {
      throw std::invalid_argument("result and buffer must be non-null");
    }
    const std::vector<double>* data = column_of(result->series, column);
    if (data == nullptr) {
      throw std::invalid_argument("unknown column");
    }
    if (buffer_len < static_cast<long long>(data->size())) {
      g_last_error = "buffer too small";
      return LEVYSIM_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buffer, data->data(), data->size() * sizeof(double));
    return LEVYSIM_OK;
  });
}

levysim_status levysim_fit_exponent(const levysim_result* result, double t_lo,
                                    double t_hi, levysim_column column,
                                    levysim_fit* out_fit) {
  return guarded([&]() {
    if (result == nullptr || out_fit == nullptr) {
      throw std::invalid_argument("result and out_fit must be non-null");
    }
    if (column != LEVYSIM_COLUMN_SIGMA_MEAN &&
        column != LEVYSIM_COLUMN_RMS_SIGMA) {
      throw std::invalid_argument("fit column must be a sigma column");
    }
    const std::vector<double>* data = column_of(result->series, column);
    levysim::FitResult fit;
    try {
      fit = levysim::fit_exponent(result->series.times, *data, t_lo, t_hi);
    } catch (const std::runtime_error& e) {
      g_last_error = e.what();
      return LEVYSIM_ERR_FIT_FAILED;
    }
    out_fit->c = fit.c;
    out_fit->c_stderr = fit.c_stderr;
    out_fit->log_prefactor = fit.log_prefactor;
    out_fit->r_squared = fit.r_squared;
    out_fit->t_lo = fit.t_lo;
    out_fit->t_hi = fit.t_hi;
    out_fit->n_points = fit.n_points;
    out_fit->n_excluded = fit.n_excluded;
    return LEVYSIM_OK;
  });
}

levysim_status levysim_noise_line(uint64_t master_seed,
                                  long long trajectory_index, double alpha,
                                  long long n_steps, char* buffer,
                                  size_t buffer_len) {
  return guarded([&]() {
    if (buffer == nullptr) {
      throw std::invalid_argument("buffer must be non-null");
    }
    if (trajectory_index < 0) {
      throw std::invalid_argument("trajectory_index must be >= 0");
    }
    if (n_steps < 1 || n_steps > 100000000LL) {
      throw std::invalid_argument("n_steps out of range");
    }
    if (buffer_len < static_cast<size_t>(n_steps) + 1) {
      g_last_error = "buffer too small";
      return LEVYSIM_ERR_BUFFER_TOO_SMALL;
    }
    levysim::LevyParams params;
    params.alpha = alpha;
    const levysim::NoiseSequence sequence = levysim::generate_sequence(
        levysim::trajectory_seed(master_seed,
                                 static_cast<std::uint64_t>(trajectory_index)),
        params, static_cast<std::size_t>(n_steps));
    const std::string line = levysim::sequence_to_string(sequence);
    std::memcpy(buffer, line.c_str(), line.size() + 1);
    return LEVYSIM_OK;
  });
}

const char* levysim_strerror(levysim_status status) {
  switch (status) {
    case LEVYSIM_OK:
      return "ok";
    case LEVYSIM_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case LEVYSIM_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case LEVYSIM_ERR_FIT_FAILED:
      return "fit failed";
    case LEVYSIM_ERR_ALLOCATION:
      return "allocation failure";
    case LEVYSIM_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* levysim_last_error(void) { return g_last_error.c_str(); }

const char* levysim_version(void) { return "0.1.0"; }

}  // extern "C"
