#include "doctest.h"

#include <cmath>

#include "rlc/errors.hpp"
#include "rlc/exact.hpp"

using namespace rlc;

TEST_CASE("weight tail probabilities") {
  CHECK(rho(2, 4, 1).value() == mpq_class(5, 16));
  CHECK(rho(2, 4, 4).value() == 1);
  CHECK(rho(3, 2, 0).value() == mpq_class(1, 9));
  CHECK_THROWS_AS(rho(2, 4, 5), ParameterError);
}

TEST_CASE("minimum weight law, exact path") {
  CHECK(wmin_cdf(2, 2, 2, 1).exact->value() == mpq_class(63, 64));
  CHECK(wmin_cdf(2, 2, 2, 0).exact->value() == mpq_class(37, 64));
  for (int n : {3, 7, 12})
    for (int d = 0; d <= n; ++d) CHECK(wmin_cdf(2, n, 1, d).exact->value() == rho(2, n, d).value());
}

TEST_CASE("log path matches the exact path") {
  for (int d = 0; d <= 14; ++d) {
    const auto a = wmin_cdf_exact(3, 14, 5, d);
    const auto b = wmin_cdf_log(3, 14, 5, d);
    CHECK(a.cdf.to_double() == doctest::Approx(b.cdf.to_double()).epsilon(1e-14));
    CHECK(b.regime == Regime::log_domain);
  }
  const auto big = wmin_cdf(2, 64, 32, 7);
  CHECK(big.regime == Regime::log_domain);
  CHECK_FALSE(big.exact.has_value());
  CHECK(big.cdf.to_double() > 0.0);
  CHECK(big.cdf.to_double() < 1.0);
}

TEST_CASE("log path keeps tiny tail probabilities") {
  // m rho ~ 2^20 * 2^-190: 1 - rho rounds to 1 in double precision.
  const auto v = wmin_cdf(2, 200, 21, 0);
  CHECK(v.regime == Regime::log_domain);
  CHECK(v.cdf.sign() > 0);
  const double expected = std::ldexp(2097151.0, -200);
  CHECK(v.cdf.to_double() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("table provenance") {
  const auto t = wmin_cdf_table(2, 5, 2);
  CHECK(t.provenance == Provenance::exact);
  CHECK(t.entries.size() == 6);
  CHECK(*t.entries[5].exact == 1);
  const auto u = wmin_cdf_table(2, 40, 30);
  CHECK(u.provenance == Provenance::closed_form);
  for (int d = 1; d <= 40; ++d) CHECK(u.entries[d].value >= u.entries[d - 1].value);
}

TEST_CASE("series ratio sandwich") {
  const auto b = rho_ratio_bounds(2, 4, 1, 1);
  CHECK(b.exact == mpq_class(5, 4));
  CHECK(b.upper == mpq_class(4, 3));
  CHECK(b.lower <= b.exact);
  const auto z = rho_ratio_bounds(3, 7, 0, 1);
  CHECK(z.lower == 1);
  CHECK(z.exact == 1);
  CHECK(z.upper == 1);
  const auto c = rho_ratio_bounds(3, 30, 10, 3);
  CHECK(c.lower <= c.exact);
  CHECK(c.exact <= c.upper);
}

TEST_CASE("step ratio") {
  const auto s = rho_step_ratio(2, 4, 1, 1);
  CHECK(s.ratio == mpq_class(11, 5));
  CHECK(s.reference == 3);
  const auto z = rho_step_ratio(2, 4, 1, 0);
  CHECK(z.ratio == 1);
  CHECK(z.reference == 1);
  CHECK(rho_step_ratio(2, 10000, 2500, 1).relative_gap <= 0.01);
}

TEST_CASE("Gumbel normalization") {
  const auto g = gumbel_params(2, 16, 8);
  CHECK(g.d0 == 2);
  CHECK(g.u == mpq_class(34935, 65536));
  const auto h = gumbel_params(2, 1, 1);
  CHECK(h.d0 == 1);  // u(1) = rho_1 = 1
  CHECK(h.u <= 1);
  const auto big = gumbel_params(2, 64, 32);
  CHECK(big.d0 == 7);
  CHECK(big.u == mpq_class(mpz_class("3025779518452417935"), mpz_class("18446744073709551616")));
}

TEST_CASE("Gumbel distance reference values") {
  const auto s16 = gumbel_sup_distance(2, 16, 8);
  CHECK(s16.sup.to_double() == doctest::Approx(0.0414871525727601).epsilon(1e-10));
  const double s128 = gumbel_sup_distance(2, 128, 64).sup.to_double();
  const double s1024 = gumbel_sup_distance(2, 1024, 512).sup.to_double();
  CHECK(s128 == doctest::Approx(1.93268323e-3).epsilon(1e-7));
  CHECK(s1024 == doctest::Approx(2.07647617e-4).epsilon(1e-7));
  CHECK(s1024 < s128);
  CHECK_THROWS_AS(gumbel_sup_distance(2, 1, 1), ParameterError);
}

TEST_CASE("q-ary entropy") {
  CHECK(entropy(2, 0.5) == doctest::Approx(1.0));
  for (unsigned q : {2u, 3u, 4u}) CHECK(entropy(q, 1.0 - 1.0 / q) == doctest::Approx(1.0));
  CHECK(entropy(2, 0.0) == 0.0);
  CHECK_THROWS_AS(entropy(2, 1.0), ParameterError);
}
