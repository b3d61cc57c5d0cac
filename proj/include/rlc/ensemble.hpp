#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rlc/cdf.hpp"
#include "rlc/linalg.hpp"
#include "rlc/numeric.hpp"
#include "rlc/rng.hpp"

namespace rlc {

/// How d_min is found for each sampled code. `automatic` walks all classes
/// when (q^k-1)/(q-1) <= kGrayClassLimit and uses information sets above.
enum class DminStrategy { automatic, gray, info_set };

inline constexpr std::uint64_t kGrayClassLimit = 1u << 12;
inline constexpr std::uint64_t kDefaultVisitBudget = std::uint64_t{1} << 34;

struct SamplerConfig {
  unsigned q = 2;
  int n = 1;
  int k = 1;
  bool condition_full_rank = true;
  std::uint64_t master_seed = 0;
  std::uint64_t trials = 1;
  int workers = 0;  // 0: $RLC_WORKERS or the OpenMP default
  std::uint64_t budget = kDefaultVisitBudget;  // codeword visits, all trials
  DminStrategy strategy = DminStrategy::automatic;

  void validate() const;  // throws ParameterError
};

/// Counts of d_min = 0..n over the trials.
struct EmpiricalCdf {
  int n = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t redraws = 0;  // rank-deficient draws discarded
  std::uint64_t codewords_visited = 0;

  double cdf(int d) const;
  double stderr_at(int d) const;  // sqrt(F(1-F)/trials)
  CdfTable table() const;
};

/// k uniform rows of F_q^n, drawn element by element in row-major order.
FqMatrix draw_matrix(const Field& f, int k, int n, CounterRng& rng);

/// The generator used by trial `trial`: drawn from that trial's stream,
/// redrawn on the same stream until full rank when conditioning is on.
GeneratorSet draw_trial_generator(const Field& f, const SamplerConfig& cfg, std::uint64_t trial,
                                  std::uint64_t* redraws = nullptr);

/// d_min of the span (0 when every codeword is zero) and the number of
/// codewords looked at.
struct DminEval {
  int distance = 0;
  std::uint64_t visited = 0;
};

DminEval evaluate_dmin(const GeneratorSet& g, DminStrategy strategy);

EmpiricalCdf sample_dmin(const SamplerConfig& cfg);
EmpiricalCdf sample_dmin_serial(const SamplerConfig& cfg);

/// Number of k-dimensional subspaces of F_q^n.
mpz_class gaussian_binomial(unsigned q, int n, int k);

enum class CodeLawMode { all_matrices, all_subspaces };

inline constexpr std::uint64_t kMatrixBudget = std::uint64_t{1} << 30;
inline constexpr std::uint64_t kSubspaceBudget = std::uint64_t{1} << 24;

/// Exact law of d_min by exhaustion: over full-rank k x n matrices, or over
/// k-dimensional subspaces (one reduced echelon basis each).
struct CodeLaw {
  int n = 0;
  mpz_class total;                 // objects enumerated
  std::vector<mpz_class> counts;   // by d_min
  std::vector<mpq_class> pmf() const;
  CdfTable table() const;
};

CodeLaw enumerate_code_law(unsigned q, int n, int k, CodeLawMode mode, std::uint64_t budget = 0);
CodeLaw enumerate_code_law_serial(unsigned q, int n, int k, CodeLawMode mode, std::uint64_t budget = 0);

/// For every subspace, the number of full-rank matrices spanning it, keyed
/// by its reduced echelon basis (row-major entries).
std::map<std::vector<Elem>, std::uint64_t> subspace_hits(unsigned q, int n, int k,
                                                          std::uint64_t budget = kMatrixBudget);

/// Empirical (or exhaustive) d_min law against F_wmin, d = 0..n.
struct CompareRow {
  int d = 0;
  double empirical = 0.0;
  double stderr_ = 0.0;
  double wmin = 0.0;
  double diff = 0.0;  // |empirical - wmin|
  double qk_rho = 0.0;  // q^k rho_d
  double d2_n32 = 0.0;  // d^2 / n^{3/2}
  double d4_n3 = 0.0;   // d^4 / n^3
};

struct CompareReport {
  unsigned q = 2;
  int n = 0, k = 0;
  Provenance source = Provenance::monte_carlo;
  std::uint64_t trials = 0, seed = 0;
  double sup = 0.0;
  int argmax_d = 0;
  std::optional<mpq_class> exact_sup;  // both sides exact
  std::vector<CompareRow> rows;
};

CompareReport compare_cdfs(const SamplerConfig& cfg);
CompareReport compare_cdfs_exact(unsigned q, int n, int k, std::uint64_t budget = 0);

/// Exact joint law of (wt Y1, wt Y2, wt(Y1 + Y2)) for independent uniform
/// Y1, Y2 in F_q^n, by dynamic programming over coordinates. Triples with a
/// coordinate above `cap` are dropped (cap = n keeps the full law); the
/// table has (cap+1)^3 entries.
class JointWeightLaw {
 public:
  unsigned q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  int cap() const noexcept { return cap_; }
  const mpz_class& total() const noexcept { return total_; }  // q^{2n}
  const mpz_class& count(int a, int b, int c) const;
  mpq_class prob(int a, int b, int c) const;
  /// P{all three weights <= d}, d <= cap.
  mpq_class prob_all_at_most(int d) const;

 private:
  friend JointWeightLaw joint_weight_triple(unsigned q, int n, int cap);
  unsigned q_ = 2;
  int n_ = 0, cap_ = 0;
  mpz_class total_;
  std::vector<mpz_class> counts_;
};

inline constexpr std::uint64_t kJointStateBudget = std::uint64_t{1} << 24;

JointWeightLaw joint_weight_triple(unsigned q, int n, int cap = -1);

/// E[prod_i W_{v_i}(d)] with W_v(d) the indicator of wt(sum_j v_j X_j) <= d
/// for i.i.d. uniform X_1..X_k in F_q^n.
///
/// Zero vectors and repeated proportionality classes are dropped first (a
/// scalar multiple has the same weight). Then: brute force over all q^{nk}
/// outcomes when that fits `budget`; otherwise rho_d^s for independent
/// vectors, or the joint triple law for three pairwise independent vectors
/// of rank 2. Anything else throws BudgetError.
enum class IndicatorRoute { brute_force, independent, triple };

struct IndicatorProduct {
  ExactProb value;
  IndicatorRoute route = IndicatorRoute::brute_force;
};

IndicatorProduct indicator_product_exact(unsigned q, int n, int d, const std::vector<FqVector>& vectors,
                                         std::uint64_t budget = kMatrixBudget);

}  // namespace rlc
