/* C interface for the levysim simulator library.
 *
 * Evolves the resonant quantum kicked rotor or the coined quantum walk
 * under a heavy-tailed waiting-time alternation of two unitaries, collects
 * wave-packet moments over a noise ensemble, and fits the spreading
 * exponent c in sigma(t) ~ t^c.
 *
 * All functions returning levysim_status set a thread-local message
 * retrievable with levysim_last_error() on failure. Results are owned
 * handles; release them with levysim_result_free().
 */
#ifndef LEVYSIM_H
#define LEVYSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum levysim_status {
  LEVYSIM_OK = 0,
  LEVYSIM_ERR_INVALID_ARGUMENT = 1,
  LEVYSIM_ERR_BUFFER_TOO_SMALL = 2,
  LEVYSIM_ERR_FIT_FAILED = 3,
  LEVYSIM_ERR_ALLOCATION = 4,
  LEVYSIM_ERR_INTERNAL = 5
} levysim_status;

typedef enum levysim_system {
  LEVYSIM_SYSTEM_QKR = 0,
  LEVYSIM_SYSTEM_QW = 1
} levysim_system;

typedef enum levysim_phase_convention {
  LEVYSIM_PHASE_STANDARD = 0,
  LEVYSIM_PHASE_PAPER_LITERAL = 1
} levysim_phase_convention;

typedef enum levysim_chirality {
  LEVYSIM_CHIRALITY_PLUS = 0,      /* internal state (1, 0) */
  LEVYSIM_CHIRALITY_SYMMETRIC = 1  /* internal state (1, i)/sqrt(2) */
} levysim_chirality;

typedef enum levysim_column {
  LEVYSIM_COLUMN_SIGMA_MEAN = 0,   /* mean over trajectories of sqrt(m2) */
  LEVYSIM_COLUMN_SIGMA_STDERR = 1,
  LEVYSIM_COLUMN_RMS_SIGMA = 2,    /* sqrt of mean m2 */
  LEVYSIM_COLUMN_M2_MEAN = 3,
  LEVYSIM_COLUMN_M4_MEAN = 4,
  LEVYSIM_COLUMN_M6_MEAN = 5
} levysim_column;

/* Progress callback; called after each finished trajectory. May be invoked
 * from worker threads, one call at a time. */
typedef void (*levysim_progress_fn)(long long completed, long long total,
                                    void* user_data);

typedef struct levysim_config {
  int system;                   /* levysim_system */
  double alpha;                 /* waiting-time tail index, (0, 2] */
  long long n_steps;
  long long n_trajectories;
  uint64_t master_seed;

  /* kicked rotor */
  int p;
  int q;
  double kappa1;
  double kappa2;
  int phase_convention;         /* levysim_phase_convention */

  /* quantum walk */
  double theta1;
  double theta2;
  int chirality;                /* levysim_chirality */

  int record_all;               /* nonzero: every step; zero: geometric grid */
  int n_workers;                /* <= 0: hardware concurrency */
  levysim_progress_fn progress; /* optional, may be NULL */
  void* progress_user_data;
} levysim_config;

typedef struct levysim_fit {
  double c;
  double c_stderr;
  double log_prefactor;
  double r_squared;
  double t_lo;
  double t_hi;
  long long n_points;
  long long n_excluded;
} levysim_fit;

typedef struct levysim_result levysim_result;

/* Fills defaults: QKR, alpha 1, 2000 steps, 200 trajectories, seed 1,
 * p/q = 1/3, kappa = +1/-1, standard phases, theta = pi/3 and pi/6,
 * chirality (1,0), geometric recording, auto workers. */
void levysim_config_init(levysim_config* config);

/* Runs the configured ensemble; on success *out_result owns the series. */
levysim_status levysim_run(const levysim_config* config,
                           levysim_result** out_result);

void levysim_result_free(levysim_result* result);

/* Number of recorded times. */
long long levysim_result_n_times(const levysim_result* result);

/* Copies recorded times into buffer[0..n_times). */
levysim_status levysim_result_times(const levysim_result* result,
                                    long long* buffer, long long buffer_len);

/* Copies one statistics column into buffer[0..n_times). */
levysim_status levysim_result_column(const levysim_result* result,
                                     levysim_column column, double* buffer,
                                     long long buffer_len);

/* OLS fit of ln(column) vs ln(t) over recorded times in [t_lo, t_hi].
 * Only SIGMA_MEAN and RMS_SIGMA columns are fittable. */
levysim_status levysim_fit_exponent(const levysim_result* result, double t_lo,
                                    double t_hi, levysim_column column,
                                    levysim_fit* out_fit);

/* Writes the operator labels of one trajectory's noise sequence as a
 * NUL-terminated '0'/'1' string (leftmost character is step 1). buffer_len
 * must be at least n_steps + 1. */
levysim_status levysim_noise_line(uint64_t master_seed,
                                  long long trajectory_index, double alpha,
                                  long long n_steps, char* buffer,
                                  size_t buffer_len);

const char* levysim_strerror(levysim_status status);

/* Message for the last failure on this thread, or an empty string. */
const char* levysim_last_error(void);

const char* levysim_version(void);

#ifdef __cplusplus
}
#endif

#endif /* LEVYSIM_H */
