#include "rlc/bounds.hpp"

#include <atomic>
#include <tuple>
#include <cmath>

#include "rlc/errors.hpp"
#include "rlc/exact.hpp"
#include "rlc/min_distance.hpp"
#include "rlc/parallel.hpp"

namespace rlc {

namespace {

void check_gv_args(unsigned q, int n, int d) {
  if (q < 2) throw ParameterError("q must be >= 2");
  if (n < 2) throw ParameterError("n must be >= 2");
  if (d < 2 || d > n) throw ParameterError("d must satisfy 2 <= d <= n");
}

std::pair<double, double> window(unsigned q, int n, double alpha) {
  return {alpha * n, (1 - alpha) * (n - static_cast<double>(n) / q)};
}

}  // namespace

int gv_dimension(unsigned q, int n, int d) {
  const WeightTail tail(q, n);
  const mpz_class& below = tail.count(d - 1);
  int k = 0;
  mpz_class qk = q;
  while (k < n && qk * below <= tail.space_size()) {
    ++k;
    qk *= q;
  }
  return k;
}

GvReport gv_classical(unsigned q, int n, int d) {
  check_gv_args(q, n, d);
  const WeightTail tail(q, n);
  GvReport r;
  r.q = q;
  r.n = n;
  r.d = d;
  r.classical_size = mpq_class(ipow(mpz_class(q), n - 1), tail.count(d - 2));
  r.classical_size.canonicalize();
  r.improved_size_core = mpq_class(tail.space_size(), tail.count(d - 1));
  r.improved_size_core.canonicalize();
  r.classical_dimension = gv_dimension(q, n, d);
  r.sqrt_factor = std::sqrt(static_cast<double>(n));
  if (d < n) r.entropy_rate = 1.0 - entropy(q, static_cast<double>(d) / n);
  return r;
}

GvReport gv_improved(unsigned q, int n, int d, double alpha, double shift_constant) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0,1)");
  GvReport r = gv_classical(q, n, d);
  r.alpha = alpha;
  std::tie(r.window_low, r.window_high) = window(q, n, alpha);
  r.in_window = d >= r.window_low && d <= r.window_high;
  if (!r.in_window)
    r.warning = "d = " + std::to_string(d) + " outside [" + std::to_string(r.window_low) + ", " +
                std::to_string(r.window_high) + "]";
  r.shift_constant = shift_constant;
  r.dimension_shift = static_cast<long>(std::floor(0.5 * std::log(static_cast<double>(n)) / std::log(q) - shift_constant));
  return r;
}

namespace {

struct ExperimentState {
  std::uint64_t successes = 0;
  std::uint64_t visited = 0;
};

GvExperimentReport run_experiment(const GvExperimentConfig& cfg, bool parallel) {
  if (!(cfg.alpha > 0.0 && cfg.alpha < 0.5)) throw ParameterError("alpha must lie in (0, 1/2)");
  if (cfg.n < 2) throw ParameterError("n must be >= 2");
  if (cfg.trials < 1) throw ParameterError("trials must be >= 1");
  if (cfg.dim_bonus < 0) throw ParameterError("dim_bonus must be >= 0");

  GvExperimentReport rep;
  rep.q = cfg.q;
  rep.n = cfg.n;
  rep.alpha = cfg.alpha;
  rep.dim_bonus = cfg.dim_bonus;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  if (cfg.d) {
    rep.d = *cfg.d;
  } else {
    const auto [lo, hi] = window(cfg.q, cfg.n, cfg.alpha);
    rep.d = static_cast<int>(std::ceil(0.3 * cfg.n));
    rep.d = std::max(rep.d, static_cast<int>(std::ceil(lo)));
    rep.d = std::min(rep.d, static_cast<int>(std::floor(hi)));
  }
  if (rep.d < 2 || rep.d > cfg.n) throw ParameterError("d must satisfy 2 <= d <= n");
  rep.k_gv = gv_dimension(cfg.q, cfg.n, rep.d);
  rep.k = rep.k_gv + cfg.dim_bonus;
  if (rep.k > cfg.n)
    throw ParameterError("k_GV + dim_bonus = " + std::to_string(rep.k) + " exceeds n = " + std::to_string(cfg.n));
  if (rep.k < 1) throw ParameterError("k_GV + dim_bonus must be >= 1");

  SamplerConfig sc;
  sc.q = cfg.q;
  sc.n = cfg.n;
  sc.k = rep.k;
  sc.master_seed = cfg.seed;
  sc.trials = cfg.trials;
  sc.workers = cfg.workers;
  sc.validate();
  const Field f = Field::of_order(cfg.q);

  std::atomic<std::uint64_t> visited_total{0};
  auto body = [&](std::uint64_t trial, ExperimentState& s) {
    const auto r = min_distance_at_least(draw_trial_generator(f, sc, trial), rep.d);
    s.successes += r.at_least;
    s.visited += r.codewords_visited;
    if (visited_total.fetch_add(r.codewords_visited, std::memory_order_relaxed) + r.codewords_visited > cfg.budget)
      throw BudgetError("codeword-visit budget of " + std::to_string(cfg.budget) + " exceeded");
  };
  auto merge = [](ExperimentState& a, const ExperimentState& b) {
    a.successes += b.successes;
    a.visited += b.visited;
  };
  const ExperimentState s = parallel ? parallel_for_each(cfg.trials, resolve_workers(cfg.workers), ExperimentState{}, body, merge)
                                     : serial_for_each(cfg.trials, ExperimentState{}, body);

  rep.success_count = s.successes;
  rep.codewords_visited = s.visited;
  rep.success_rate = static_cast<double>(s.successes) / cfg.trials;
  rep.stderr_ = std::sqrt(rep.success_rate * (1 - rep.success_rate) / cfg.trials);
  rep.surrogate = 1.0 - wmin_cdf(cfg.q, cfg.n, rep.k, rep.d - 1).to_double();
  rep.reference = std::exp(-std::sqrt(static_cast<double>(cfg.n)));
  return rep;
}

}  // namespace

GvExperimentReport gv_experiment(const GvExperimentConfig& cfg) { return run_experiment(cfg, true); }
GvExperimentReport gv_experiment_serial(const GvExperimentConfig& cfg) { return run_experiment(cfg, false); }

double entropy_rate_check(unsigned q, int n, double x) {
  if (!(x > 0.0 && x < 1.0 - 1.0 / q)) throw ParameterError("x must lie in (0, 1 - 1/q)");
  const int d = static_cast<int>(std::floor(x * n));
  const WeightTail tail(q, n);
  const auto bits = bits_for_digits(30);
  const Real lg = log(Real(tail.count(d), bits)) / log(Real(mpz_class(q), bits));
  return std::fabs(lg.to_double() / n - entropy(q, x));
}

}  // namespace rlc
