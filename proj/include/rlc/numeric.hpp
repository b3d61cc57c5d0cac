#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "rlc/real.hpp"

namespace rlc {

inline constexpr int kDefaultDigits = 60;

/// A probability held as a reduced rational in [0, 1].
class ExactProb {
 public:
  ExactProb() = default;
  // Throws ParameterError when outside [0,1].
  explicit ExactProb(mpq_class v);

  const mpq_class& value() const noexcept { return v_; }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }
  Real to_real(int digits = kDefaultDigits) const { return Real(v_, bits_for_digits(digits)); }

  friend bool operator==(const ExactProb&, const ExactProb&) = default;

 private:
  mpq_class v_{0};
};

/// Natural logarithm of a probability, carried at a configured number of
/// decimal digits. Used where exact rationals would need exponents such as
/// (q^k-1)/(q-1).
class LogProb {
 public:
  LogProb(Real log_value, int digits);
  static LogProb from_exact(const ExactProb& p, int digits = kDefaultDigits);

  const Real& log_value() const noexcept { return log_; }
  int digits() const noexcept { return digits_; }
  Real probability() const { return exp(log_); }
  double to_double() const { return probability().to_double(); }

 private:
  Real log_;
  int digits_;
};

/// Row n of Pascal's triangle, exact. Rows up to kBinomialCacheRows are
/// cached (shared, guarded for concurrent first use); larger rows are built
/// on demand.
inline constexpr int kBinomialCacheRows = 4096;
std::shared_ptr<const std::vector<mpz_class>> binomial_row(int n);

mpz_class binomial(int n, int k);
mpz_class ipow(const mpz_class& base, unsigned long e);

}  // namespace rlc
