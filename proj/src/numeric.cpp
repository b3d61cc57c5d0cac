#include "rlc/numeric.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

#include "rlc/errors.hpp"

namespace rlc {

mpfr_prec_t bits_for_digits(int digits) noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 1) * 3.3219280948873623)) + 16;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  char* buf = nullptr;
  const std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "Re";
  mpfr_asprintf(&buf, fmt.c_str(), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Real log(const Real& x) {
  Real r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real log1p(const Real& x) {
  Real r(x.precision());
  mpfr_log1p(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real exp(const Real& x) {
  Real r(x.precision());
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real expm1(const Real& x) {
  Real r(x.precision());
  mpfr_expm1(r.get(), x.get(), MPFR_RNDN);
  return r;
}
Real abs(const Real& x) {
  Real r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

ExactProb::ExactProb(mpq_class v) : v_(std::move(v)) {
  v_.canonicalize();
  if (v_ < 0 || v_ > 1) throw ParameterError("probability " + v_.get_str() + " outside [0,1]");
}

LogProb::LogProb(Real log_value, int digits) : log_(std::move(log_value)), digits_(digits) {
  if (log_.sign() > 0) throw ParameterError("log-probability must be <= 0");
}

LogProb LogProb::from_exact(const ExactProb& p, int digits) {
  const auto bits = bits_for_digits(digits);
  if (p.value() == 0) {
    Real r(bits);
    mpfr_set_inf(r.get(), -1);
    return LogProb(std::move(r), digits);
  }
  return LogProb(log(Real(p.value(), bits)), digits);
}

namespace {

std::vector<mpz_class> build_row(int n) {
  std::vector<mpz_class> row(n + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) row[i] = row[i - 1] * (n - i + 1) / i;
  return row;
}

}  // namespace

std::shared_ptr<const std::vector<mpz_class>> binomial_row(int n) {
  if (n < 0) throw ParameterError("binomial row index must be >= 0");
  if (n > kBinomialCacheRows) return std::make_shared<const std::vector<mpz_class>>(build_row(n));
  static std::mutex mu;
  static std::unordered_map<int, std::shared_ptr<const std::vector<mpz_class>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto row = std::make_shared<const std::vector<mpz_class>>(build_row(n));
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(row)).first->second;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace rlc
