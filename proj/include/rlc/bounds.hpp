#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "rlc/ensemble.hpp"

namespace rlc {

/// Gilbert-Varshamov quantities for length n and distance d.
///
/// classical_size      q^{n-1} / sum_{j<=d-2} C(n,j)(q-1)^j
/// classical_dimension largest k with q^k rho_{d-1} <= 1
/// improved_size_core  q^n / sum_{j<=d-1} C(n,j)(q-1)^j
/// sqrt_factor         n^{1/2}; the unknown constant in front is left out
/// entropy_rate        1 - H_q(d/n), for d < n
struct GvReport {
  unsigned q = 2;
  int n = 0, d = 0;
  mpq_class classical_size;
  int classical_dimension = 0;
  mpq_class improved_size_core;
  double sqrt_factor = 0.0;
  std::optional<double> entropy_rate;

  // Filled by gv_improved.
  std::optional<double> alpha;
  bool in_window = true;
  double window_low = 0.0, window_high = 0.0;
  std::optional<double> shift_constant;  // C
  std::optional<long> dimension_shift;   // floor(log_q(n)/2 - C)
  std::string warning;
};

GvReport gv_classical(unsigned q, int n, int d);

/// Adds the window check d in [alpha n, (1 - alpha)(n - n/q)] and the
/// dimension shift with a user constant C. Out-of-window d only sets a
/// warning.
GvReport gv_improved(unsigned q, int n, int d, double alpha, double shift_constant = 0.0);

/// Largest k with q^k rho_{d-1} <= 1 (0 when none).
int gv_dimension(unsigned q, int n, int d);

struct GvExperimentConfig {
  unsigned q = 2;
  int n = 1;
  double alpha = 0.25;
  int dim_bonus = 0;
  std::optional<int> d;  // default ceil(0.3 n) clamped into the window
  std::uint64_t trials = 1, seed = 0;
  int workers = 0;
  std::uint64_t budget = kDefaultVisitBudget;
};

/// Samples uniform codes (full-rank generators) of dimension
/// k_GV + dim_bonus and counts those with d_min >= d.
struct GvExperimentReport {
  unsigned q = 2;
  int n = 0, d = 0;
  double alpha = 0.0;
  int k_gv = 0, dim_bonus = 0, k = 0;
  std::uint64_t trials = 0, seed = 0;
  std::uint64_t success_count = 0;
  double success_rate = 0.0;
  double stderr_ = 0.0;
  double surrogate = 0.0;  // 1 - F_wmin(d-1) at dimension k
  double reference = 0.0;  // exp(-sqrt(n))
  std::uint64_t codewords_visited = 0;
};

GvExperimentReport gv_experiment(const GvExperimentConfig& cfg);
GvExperimentReport gv_experiment_serial(const GvExperimentConfig& cfg);

/// |(1/n) log_q(rho_{floor(xn)} q^n) - H_q(x)| for 0 < x < 1 - 1/q.
double entropy_rate_check(unsigned q, int n, double x);

}  // namespace rlc
