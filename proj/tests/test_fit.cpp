#include <cmath>
#include <vector>

#include "core/powerlaw_fit.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using levysim::FitResult;

namespace {

std::vector<long> time_grid(long lo, long hi, long stride) {
  std::vector<long> times;
  for (long t = lo; t <= hi; t += stride) {
    times.push_back(t);
  }
  return times;
}

}  // namespace

TEST_CASE("exact power law is recovered exactly") {
  const std::vector<long> times = time_grid(10, 1000, 10);
  std::vector<double> sigma;
  for (long t : times) {
    sigma.push_back(std::pow(static_cast<double>(t), 0.7));
  }
  const FitResult fit = levysim::fit_exponent(times, sigma, 10, 1000);
  CHECK(fit.c == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.c_stderr < 1e-12);
  CHECK(fit.n_points == static_cast<int>(times.size()));
}

TEST_CASE("ballistic line gives unit slope and the prefactor") {
  const std::vector<long> times = time_grid(1, 200, 1);
  std::vector<double> sigma;
  for (long t : times) {
    sigma.push_back(3.0 * static_cast<double>(t));
  }
  const FitResult fit = levysim::fit_exponent(times, sigma, 1, 200);
  CHECK(fit.c == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.log_prefactor == doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("noisy power law lands near the true exponent") {
  const std::vector<long> times = time_grid(10, 2000, 5);
  levysim::CounterRng rng(2024);
  std::vector<double> sigma;
  for (long t : times) {
    const double noise = 1.0 + 0.05 * (2.0 * rng.next_double() - 1.0);
    sigma.push_back(std::pow(static_cast<double>(t), 0.75) * noise);
  }
  const FitResult fit = levysim::fit_exponent(times, sigma, 10, 2000);
  CHECK(fit.c == doctest::Approx(0.75).epsilon(0.027));

  // Same numbers through an independently written least-squares routine.
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t k = 0; k < times.size(); ++k) {
    x.push_back(std::log(static_cast<double>(times[k])));
    y.push_back(std::log(sigma[k]));
  }
  const oracles::OlsLine line = oracles::ols(x, y);
  CHECK(fit.c == doctest::Approx(line.slope).epsilon(1e-12));
  CHECK(fit.log_prefactor == doctest::Approx(line.intercept).epsilon(1e-12));
}

TEST_CASE("scaling the data moves only the prefactor") {
  const std::vector<long> times = time_grid(8, 512, 4);
  std::vector<double> sigma;
  std::vector<double> scaled;
  for (long t : times) {
    const double value = std::pow(static_cast<double>(t), 0.62);
    sigma.push_back(value);
    scaled.push_back(7.3 * value);
  }
  const FitResult base = levysim::fit_exponent(times, sigma, 8, 512);
  const FitResult moved = levysim::fit_exponent(times, scaled, 8, 512);
  CHECK(std::abs(base.c - moved.c) < 1e-14);
  CHECK(moved.log_prefactor ==
        doctest::Approx(base.log_prefactor + std::log(7.3)).epsilon(1e-12));
}

TEST_CASE("doubling the time axis keeps the exponent") {
  const std::vector<long> times = time_grid(8, 512, 4);
  std::vector<long> doubled;
  std::vector<double> sigma;
  std::vector<double> sigma_doubled;
  for (long t : times) {
    doubled.push_back(2 * t);
    sigma.push_back(std::pow(static_cast<double>(t), 0.58));
    sigma_doubled.push_back(std::pow(2.0 * static_cast<double>(t), 0.58));
  }
  const FitResult base = levysim::fit_exponent(times, sigma, 8, 512);
  const FitResult shifted =
      levysim::fit_exponent(doubled, sigma_doubled, 16, 1024);
  CHECK(std::abs(base.c - shifted.c) < 1e-12);
}

TEST_CASE("window choice does not matter on exact data") {
  const std::vector<long> times = time_grid(4, 4096, 4);
  std::vector<double> sigma;
  for (long t : times) {
    sigma.push_back(std::pow(static_cast<double>(t), 0.9));
  }
  const FitResult wide = levysim::fit_exponent(times, sigma, 4, 4096);
  const FitResult narrow = levysim::fit_exponent(times, sigma, 500, 1500);
  CHECK(std::abs(wide.c - narrow.c) < 1e-12);
}

TEST_CASE("zeros in the window are excluded but counted") {
  const std::vector<long> times = {10, 20, 30, 40, 50, 60};
  const std::vector<double> sigma = {10.0, 0.0, 30.0, 40.0, 0.0, 60.0};
  const FitResult fit = levysim::fit_exponent(times, sigma, 10, 60);
  CHECK(fit.n_points == 4);
  CHECK(fit.n_excluded == 2);
  CHECK(fit.c == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("degenerate inputs are rejected") {
  const std::vector<long> times = {10, 20, 30};
  const std::vector<double> sigma = {1.0, 2.0, 3.0};
  CHECK_THROWS(levysim::fit_exponent(times, sigma, 30, 10));
  CHECK_THROWS(levysim::fit_exponent(times, sigma, 0.0, 10));
  CHECK_THROWS(levysim::fit_exponent(times, sigma, 25, 60));  // two points
  CHECK_THROWS(levysim::fit_exponent({10, 10, 10}, sigma, 5, 60));
  CHECK_THROWS(levysim::fit_exponent(times, {1.0, 2.0}, 10, 30));
}
