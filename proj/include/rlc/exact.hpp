#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "rlc/cdf.hpp"
#include "rlc/numeric.hpp"

namespace rlc {

/// Counts of vectors of F_q^n by weight, summed: tail(d) = sum_{i<=d}
/// C(n,i) (q-1)^i, so that rho_d = tail(d) / q^n.
class WeightTail {
 public:
  WeightTail(unsigned q, int n);

  unsigned q() const noexcept { return q_; }
  int n() const noexcept { return n_; }
  const mpz_class& count(int d) const;  // 0 <= d <= n
  const mpz_class& space_size() const noexcept { return total_; }
  ExactProb rho(int d) const;

 private:
  unsigned q_;
  int n_;
  mpz_class total_;
  std::vector<mpz_class> prefix_;
};

/// P{wt(U) <= d} for U uniform on F_q^n.
ExactProb rho(unsigned q, int n, int d);

/// Number of proportionality classes (q^k - 1)/(q - 1), exact.
mpz_class class_count(unsigned q, int k);

enum class Regime { exact, log_domain };

inline constexpr unsigned long kExactClassLimit = 1ul << 20;

/// F_wmin(d) = 1 - (1 - rho_d)^m with m = (q^k-1)/(q-1) classes.
///
/// `exact` is set on the exact path. `cdf` and `log_survival` (the natural
/// log of 1 - F) are always filled at `digits` decimal digits; on the log
/// path they come from m * log1p(-rho_d) and -expm1 of it, which keeps
/// relative accuracy at both ends.
struct WminValue {
  Regime regime = Regime::exact;
  std::optional<ExactProb> exact;
  Real cdf;
  Real log_survival;
  int digits = kDefaultDigits;

  double to_double() const { return cdf.to_double(); }
};

struct WminOptions {
  int digits = kDefaultDigits;
  unsigned long exact_class_limit = kExactClassLimit;  // m above this -> log domain
};

WminValue wmin_cdf(unsigned q, int n, int k, int d, const WminOptions& opt = {});
WminValue wmin_cdf_exact(unsigned q, int n, int k, int d, int digits = kDefaultDigits);
WminValue wmin_cdf_log(unsigned q, int n, int k, int d, int digits = kDefaultDigits);

/// The whole table d = 0..n (exact or closed-form provenance).
CdfTable wmin_cdf_table(unsigned q, int n, int k, const WminOptions& opt = {});

/// Bounds on rho_d / (C(n,d) q^-n (q-1)^d) from truncating its series
/// (lower, at truncation length t) and from a geometric majorant (upper).
struct RatioBounds {
  mpq_class lower, exact, upper;
};

RatioBounds rho_ratio_bounds(unsigned q, int n, int d, int t);

/// rho_{d+t} / rho_d against ((q-1)(n-d)/d)^t.
struct StepRatio {
  mpq_class ratio, reference;
  double relative_gap = 0.0;  // |ratio/reference - 1|
};

StepRatio rho_step_ratio(unsigned q, int n, int d, int t);

/// Normalization of the minimum weight: d0 is the largest d with
/// u(d) = m rho_d <= 1, u = u(d0), slope = log((q-1)(n-d0)/d0).
/// The lattice of comparison points is {slope * z - log u : z integer}.
struct GumbelParams {
  int d0 = 0;
  mpq_class u;
  std::optional<Real> slope;  // empty when d0 == 0
  Real log_u;

  Real lattice_point(long z) const;
};

GumbelParams gumbel_params(unsigned q, int n, int k, int digits = kDefaultDigits);

/// sup over lattice points t of |P{xi < t} - exp(-e^-t)| for the
/// binomial-minimum model, where xi = (d0 - w_min) slope - log u.
/// Points where both terms are below 1e-12 (or both above 1 - 1e-12) are
/// skipped.
struct GumbelDistance {
  Real sup;
  long argmax_z = 0;
  int points = 0;
};

GumbelDistance gumbel_sup_distance(unsigned q, int n, int k, int digits = kDefaultDigits);

/// H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with H_q(0) = 0.
double entropy(unsigned q, double x);

}  // namespace rlc
