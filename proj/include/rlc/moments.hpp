#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "rlc/ensemble.hpp"

namespace rlc {

/// S(m, l), partitions of an m-set into l nonempty blocks; 0 <= l <= m <= 64.
mpz_class stirling2(int m, int l);

/// |Omega_m|: ordered m-tuples of pairwise non-collinear nonzero vectors of
/// F_q^k, prod_{i<m} (q^k - i(q-1) - 1). Zero once m exceeds the number of
/// classes.
mpz_class omega_count(unsigned q, int k, int m);

/// Tuples of Omega_l spanning a space of dimension r, counted by brute force,
/// with the upper bound C(l,r) q^{r(l-r)} prod_{i<r} (q^k - q^i).
struct RankCount {
  mpz_class count;
  mpz_class bound;
};

inline constexpr std::uint64_t kRankCountBudget = std::uint64_t{1} << 26;

RankCount omega_rank_count(unsigned q, int k, int r, int l, std::uint64_t budget = kRankCountBudget);

/// E[Ztilde_d^m] where Ztilde_d = (q-1) * #{classes with weight <= d} when
/// each class carries its own independent uniform vector:
///   sum_{j=1}^m S(m,j) (q-1)^{m-j} |Omega_j| rho_d^j.
mpq_class ztilde_moment(unsigned q, int n, int k, int d, int m);

enum class MomentModel { independent, code };

/// Moments E[Z^m] for m = 1..h, stored at index m-1. Exact vectors carry the
/// rationals; Monte-Carlo vectors carry sample means with standard errors and
/// the covariance of the sample means.
struct MomentVector {
  int h = 0;
  MomentModel model = MomentModel::code;
  Provenance source = Provenance::exact;
  std::optional<std::vector<mpq_class>> exact;
  std::vector<double> value;
  std::vector<double> stderr_;
  std::vector<std::vector<double>> covariance;
  std::uint64_t trials = 0, seed = 0;

  static MomentVector from_exact(std::vector<mpq_class> values, MomentModel model);
};

MomentVector ztilde_moments(unsigned q, int n, int k, int d, int h);

/// Law of Z_d = #{a != 0 : wt(sum a_i X_i) <= d} for i.i.d. uniform (not
/// conditioned) generators. pmf[z] = P{Z_d = z}.
struct ZLaw {
  std::vector<mpq_class> pmf;
  MomentVector moments(int h) const;
};

enum class ZMethod { exact_tiny, monte_carlo };

struct ZMomentConfig {
  unsigned q = 2;
  int n = 1, k = 1, d = 0;
  int h = 1;
  ZMethod method = ZMethod::exact_tiny;
  std::uint64_t trials = 1, seed = 0;
  int workers = 0;
  std::uint64_t budget = 0;  // exact: q^{nk} cap (default 2^30); MC: codeword visits (default 2^34)
};

/// Exhaustive law of Z_d over all q^{nk} generator matrices.
ZLaw z_law_exact(unsigned q, int n, int k, int d, std::uint64_t budget = kMatrixBudget);
MomentVector z_moments(const ZMomentConfig& cfg);
MomentVector z_moments_serial(const ZMomentConfig& cfg);

/// b_ij = j^i for i, j = 1..h and its exact inverse. `inverse[r-1][m-1]`
/// maps the m-th moment to the mass at r. `closed_form` holds
///   (-1)^{h-m} e_{h-m}({1..h} \ {r}) / (r prod_{s != r} (r - s)),
/// e the elementary symmetric polynomial.
struct InversionSystem {
  int h = 0;
  std::vector<std::vector<mpq_class>> b, inverse, closed_form;
  // max_r |inverse[r][m]| * h^m per column m, and the smallest C with every
  // column below C^h h^-m.
  std::vector<double> scaled_column_max;
  double crude_constant = 0.0;
};

inline constexpr int kMaxInversionOrder = 24;

InversionSystem inversion_system(int h);

/// Tail information for masses above h:
///   none:   assume M(r) = 0 for r > h;
///   bound:  T >= sum_{r>h} M(r) (r/(h+1))^{h+1};
///   markov: T = E[Z^{h+1}] / (h+1)^{h+1}, which needs order h+1 in U.
/// Under a bound the truncation vector satisfies 0 <= E_i <= T (h+1)^i.
struct TailSpec {
  enum class Kind { none, bound, markov } kind = Kind::none;
  double t = 0.0;
};

/// Masses r = 1..h from V = B^{-1} U. `err_bound` is the rigorous tail part
/// sum_i |b'_ri| T (h+1)^i, plus 4 propagated standard errors for Monte-Carlo
/// input. `clipped` is the display view clipped to [0,1] and scaled down to
/// total at most 1.
struct MassVector {
  int h = 0;
  std::optional<std::vector<mpq_class>> exact;
  std::vector<double> mass;
  std::vector<double> stderr_;
  std::vector<double> err_bound;
  std::vector<double> clipped;
  double tail_t = 0.0;
};

MassVector invert_moments(const MomentVector& u, int h, const TailSpec& tail = {});

/// Growth bracket for the moments, with lambda = q^k rho / (q-1):
/// lambda when l <= lambda, else l / log(e l / lambda).
struct GrowthBound {
  double lambda = 0.0;
  bool small_order = false;  // l <= lambda
  double bound = 0.0;
};

GrowthBound moment_growth_bound(unsigned q, int k, const ExactProb& rho_d, int l);

/// (E Ztilde_d^l)^{1/l} / bound.
double moment_growth_ratio(unsigned q, int n, int k, int d, int l);

}  // namespace rlc
