#include "rlc/exact.hpp"

#include <cmath>
#include <string>

#include "rlc/errors.hpp"

namespace rlc {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::exact: return "exact";
    case Provenance::closed_form: return "closed-form";
    case Provenance::monte_carlo: return "monte-carlo";
  }
  return "unknown";
}

CdfTable exact_cdf_from_pmf(const std::vector<mpq_class>& pmf) {
  CdfTable t;
  t.n = static_cast<int>(pmf.size()) - 1;
  t.provenance = Provenance::exact;
  mpq_class acc = 0;
  for (const auto& p : pmf) {
    acc += p;
    acc.canonicalize();
    t.entries.push_back({acc, acc.get_d(), 0.0});
  }
  return t;
}

namespace {

void check_qn(unsigned q, int n) {
  if (q < 2) throw ParameterError("q must be >= 2");
  if (n < 1) throw ParameterError("n must be >= 1");
}

void check_d(int n, int d) {
  if (d < 0 || d > n)
    throw ParameterError("d = " + std::to_string(d) + " outside 0.." + std::to_string(n));
}

void check_k(int n, int k) {
  if (k < 1 || k > n)
    throw ParameterError("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
}

}  // namespace

WeightTail::WeightTail(unsigned q, int n) : q_(q), n_(n) {
  check_qn(q, n);
  const auto row = binomial_row(n);
  total_ = ipow(mpz_class(q), static_cast<unsigned long>(n));
  prefix_.resize(n + 1);
  mpz_class power = 1;
  mpz_class acc = 0;
  for (int i = 0; i <= n; ++i) {
    acc += (*row)[i] * power;
    prefix_[i] = acc;
    power *= (q - 1);
  }
}

const mpz_class& WeightTail::count(int d) const {
  check_d(n_, d);
  return prefix_[d];
}

ExactProb WeightTail::rho(int d) const { return ExactProb(mpq_class(count(d), total_)); }

ExactProb rho(unsigned q, int n, int d) {
  check_qn(q, n);
  check_d(n, d);
  return WeightTail(q, n).rho(d);
}

mpz_class class_count(unsigned q, int k) { return (ipow(mpz_class(q), static_cast<unsigned long>(k)) - 1) / (q - 1); }

namespace {

WminValue exact_value(const WeightTail& tail, const mpz_class& m, int d, int digits) {
  if (!m.fits_ulong_p()) throw BudgetError("class count too large for the exact path");
  const unsigned long e = m.get_ui();
  const mpz_class& total = tail.space_size();
  mpq_class survival(ipow(total - tail.count(d), e), ipow(total, e));
  survival.canonicalize();
  const auto bits = bits_for_digits(digits);
  WminValue v;
  v.regime = Regime::exact;
  v.exact = ExactProb(1 - survival);
  v.cdf = Real(v.exact->value(), bits);
  v.digits = digits;
  if (survival == 0) {
    v.log_survival = Real(bits);
    mpfr_set_inf(v.log_survival.get(), -1);
  } else {
    v.log_survival = log(Real(survival, bits));
  }
  return v;
}

WminValue log_value(const WeightTail& tail, const mpz_class& m, int d, int digits) {
  const auto bits = bits_for_digits(digits);
  const Real r(mpq_class(tail.count(d), tail.space_size()), bits);
  WminValue v;
  v.regime = Regime::log_domain;
  v.digits = digits;
  v.log_survival = Real(m, bits) * log1p(-r);
  v.cdf = -expm1(v.log_survival);
  return v;
}

}  // namespace

WminValue wmin_cdf_exact(unsigned q, int n, int k, int d, int digits) {
  check_qn(q, n);
  check_k(n, k);
  check_d(n, d);
  return exact_value(WeightTail(q, n), class_count(q, k), d, digits);
}

WminValue wmin_cdf_log(unsigned q, int n, int k, int d, int digits) {
  check_qn(q, n);
  check_k(n, k);
  check_d(n, d);
  return log_value(WeightTail(q, n), class_count(q, k), d, digits);
}

WminValue wmin_cdf(unsigned q, int n, int k, int d, const WminOptions& opt) {
  check_qn(q, n);
  check_k(n, k);
  check_d(n, d);
  const auto m = class_count(q, k);
  const WeightTail tail(q, n);
  if (m <= opt.exact_class_limit) return exact_value(tail, m, d, opt.digits);
  return log_value(tail, m, d, opt.digits);
}

CdfTable wmin_cdf_table(unsigned q, int n, int k, const WminOptions& opt) {
  check_qn(q, n);
  check_k(n, k);
  const auto m = class_count(q, k);
  const WeightTail tail(q, n);
  const bool exact = m <= opt.exact_class_limit;
  CdfTable t;
  t.n = n;
  t.provenance = exact ? Provenance::exact : Provenance::closed_form;
  for (int d = 0; d <= n; ++d) {
    auto v = exact ? exact_value(tail, m, d, opt.digits) : log_value(tail, m, d, opt.digits);
    CdfEntry e;
    if (v.exact) e.exact = v.exact->value();
    e.value = v.cdf.to_double();
    t.entries.push_back(std::move(e));
  }
  return t;
}

RatioBounds rho_ratio_bounds(unsigned q, int n, int d, int t) {
  check_qn(q, n);
  check_d(n, d);
  if (d == 0) return {1, 1, 1};
  if (t < 1 || t > d) throw ParameterError("t must satisfy 1 <= t <= d");
  const WeightTail tail(q, n);
  const mpz_class leading = binomial(n, d) * ipow(mpz_class(q - 1), static_cast<unsigned long>(d));
  RatioBounds b;
  b.exact = mpq_class(tail.count(d), leading);
  b.exact.canonicalize();

  // upper: 1 / (1 - d / ((n-d+1)(q-1)))
  const mpz_class up_den = mpz_class(n - d + 1) * (q - 1);
  if (up_den <= d)
    throw ParameterError("degenerate upper bound: d too close to (1-1/q)n (d = " + std::to_string(d) + ")");
  b.upper = mpq_class(up_den, up_den - d);
  b.upper.canonicalize();

  // lower: (1 - x^t) / (1 - x), x = (d-t+1) / ((n-d+t)(q-1))
  mpq_class x(mpz_class(d - t + 1), mpz_class(n - d + t) * (q - 1));
  x.canonicalize();
  if (x >= 1) throw ParameterError("degenerate lower bound: truncation ratio >= 1");
  mpq_class xt(ipow(x.get_num(), static_cast<unsigned long>(t)), ipow(x.get_den(), static_cast<unsigned long>(t)));
  b.lower = (1 - xt) / (1 - x);
  b.lower.canonicalize();
  return b;
}

StepRatio rho_step_ratio(unsigned q, int n, int d, int t) {
  check_qn(q, n);
  if (t == 0) return {1, 1, 0.0};
  if (d < 1 || t < 0 || d + t > n) throw ParameterError("need d >= 1 and d + t <= n");
  const WeightTail tail(q, n);
  StepRatio s;
  s.ratio = mpq_class(tail.count(d + t), tail.count(d));
  s.ratio.canonicalize();
  s.reference = mpq_class(ipow(mpz_class(q - 1) * (n - d), static_cast<unsigned long>(t)),
                          ipow(mpz_class(d), static_cast<unsigned long>(t)));
  s.reference.canonicalize();
  mpq_class rel = s.ratio / s.reference - 1;
  s.relative_gap = std::fabs(rel.get_d());
  return s;
}

Real GumbelParams::lattice_point(long z) const {
  if (!slope) throw ParameterError("degenerate Gumbel slope (d0 = 0)");
  return *slope * Real(static_cast<double>(z), slope->precision()) - log_u;
}

GumbelParams gumbel_params(unsigned q, int n, int k, int digits) {
  check_qn(q, n);
  check_k(n, k);
  const WeightTail tail(q, n);
  const auto m = class_count(q, k);
  const mpz_class& total = tail.space_size();
  // m rho_0 = m / q^n <= 1 whenever k <= n, so d0 >= 0.
  int d0 = 0;
  while (d0 < n && m * tail.count(d0 + 1) <= total) ++d0;
  GumbelParams g;
  g.d0 = d0;
  g.u = mpq_class(m * tail.count(d0), total);
  g.u.canonicalize();
  const auto bits = bits_for_digits(digits);
  g.log_u = log(Real(g.u, bits));
  if (d0 > 0 && d0 < n) g.slope = log(Real(mpz_class(mpz_class(q - 1) * (n - d0)), bits) / Real(mpz_class(d0), bits));
  return g;
}

GumbelDistance gumbel_sup_distance(unsigned q, int n, int k, int digits) {
  const int prec_digits = std::max(digits, 50);
  const auto g = gumbel_params(q, n, k, prec_digits);
  if (g.d0 == 0 || static_cast<long>(q) * g.d0 >= static_cast<long>(q - 1) * n)
    throw ParameterError("degenerate Gumbel normalization (d0 = " + std::to_string(g.d0) + ")");

  const auto bits = bits_for_digits(prec_digits);
  const WeightTail tail(q, n);
  const Real m(class_count(q, k), bits);
  const Real one(1.0, bits), eps(1e-12, bits);

  auto survival = [&](long d) {
    if (d < 0) return one;
    if (d >= n) return Real(bits);
    const Real r(mpq_class(tail.count(static_cast<int>(d)), tail.space_size()), bits);
    return exp(m * log1p(-r));
  };

  GumbelDistance out;
  out.sup = Real(bits);
  auto visit = [&](long z) {
    const Real t = g.lattice_point(z);
    const Real p = survival(g.d0 - z);  // P{xi < t} = P{w_min > d0 - z}
    const Real gum = exp(-exp(-t));
    const bool low = p < eps && gum < eps;
    const bool high = one - p < eps && one - gum < eps;
    if (!low && !high) {
      ++out.points;
      const Real diff = abs(p - gum);
      if (diff > out.sup) {
        out.sup = diff;
        out.argmax_z = z;
      }
    }
    return std::pair{low, high};
  };

  // Upward: d0 - z < 0 gives p = 1; stop once G is within eps of 1.
  for (long z = g.d0 + 1;; ++z)
    if (visit(z).second) break;
  // Downward through the support and past it until G < eps.
  for (long z = g.d0;; --z) {
    if (visit(z).first && g.d0 - z >= n) break;
  }
  return out;
}

double entropy(unsigned q, double x) {
  if (!(x >= 0.0 && x < 1.0)) throw ParameterError("entropy argument outside [0,1)");
  if (x == 0.0) return 0.0;
  const double lq = std::log(static_cast<double>(q));
  return (x * std::log(q - 1.0) - x * std::log(x) - (1 - x) * std::log1p(-x)) / lq;
}

}  // namespace rlc
