#include "doctest.h"

#include <bit>
#include <cmath>

#include "binomial_oracle.hpp"
#include "rlc/errors.hpp"
#include "rlc/exact.hpp"
#include "rlc/moments.hpp"

using namespace rlc;

TEST_CASE("Stirling numbers of the second kind") {
  for (int m = 1; m <= 20; ++m) {
    CHECK(stirling2(m, 1) == 1);
    CHECK(stirling2(m, m) == 1);
  }
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(10, 4) == 34105);
  CHECK(stirling2(0, 0) == 1);
  CHECK_THROWS_AS(stirling2(65, 2), ParameterError);
  for (int l = 1; l <= 20; ++l)
    for (int m = 1; m <= l; ++m) CHECK(stirling2(l, m) <= binomial(l, m) * ipow(mpz_class(m), l - m));
}

TEST_CASE("non-collinear tuple counts") {
  CHECK(omega_count(2, 3, 1) == 7);
  CHECK(omega_count(2, 2, 2) == 6);
  CHECK(omega_count(3, 1, 2) == 0);
  CHECK(omega_count(3, 2, 4) == 8 * 6 * 4 * 2);
  CHECK(omega_count(3, 2, 5) == 0);
}

TEST_CASE("rank-restricted counts against the bound") {
  const auto eq = omega_rank_count(2, 3, 2, 2);
  CHECK(eq.count == 42);
  CHECK(eq.bound == 42);
  CHECK(omega_rank_count(2, 2, 1, 1).count == 3);
  const auto t = omega_rank_count(2, 2, 2, 3);
  CHECK(t.count == 6);
  CHECK(t.bound == 72);
  for (unsigned q : {2u, 3u})
    for (int l = 1; l <= 3; ++l)
      for (int r = 1; r <= l; ++r) {
        const auto c = omega_rank_count(q, 2, r, l);
        CHECK(c.count <= c.bound);
        if (r == l) CHECK(c.count == c.bound);
      }
  CHECK_THROWS_AS(omega_rank_count(5, 6, 2, 4), BudgetError);
}

TEST_CASE("independent-model moments") {
  CHECK(ztilde_moment(2, 2, 2, 1, 2) == mpq_class(45, 8));
  for (int d = 0; d <= 6; ++d) CHECK(ztilde_moment(3, 6, 3, d, 1) == 26 * rho(3, 6, d).value());
  for (unsigned q : {2u, 3u, 4u})
    for (int d = 0; d <= 7; ++d) {
      const auto m = class_count(q, 3);
      const auto oracle = scaled_binomial_moments(m, rho(q, 7, d).value(), q - 1, 6);
      for (int l = 1; l <= 6; ++l) CHECK(ztilde_moment(q, 7, 3, d, l) == oracle[l - 1]);
    }
}

TEST_CASE("Lyapunov monotonicity of the independent model") {
  for (unsigned q : {2u, 3u})
    for (int d = 0; d <= 6; ++d) {
      const auto v = ztilde_moments(q, 6, 3, d, 8);
      for (int m = 1; m < 8; ++m) {
        // a_m^{1/m} <= a_{m+1}^{1/(m+1)}  <=>  a_m^{m+1} <= a_{m+1}^m
        const auto& a = (*v.exact)[m - 1];
        const auto& b = (*v.exact)[m];
        const mpq_class lhs(ipow(a.get_num(), m + 1), ipow(a.get_den(), m + 1));
        const mpq_class rhs(ipow(b.get_num(), m), ipow(b.get_den(), m));
        CHECK(lhs <= rhs);
      }
    }
}

TEST_CASE("code-model moments by enumeration") {
  const auto law = z_law_exact(2, 3, 2, 1);
  const auto mv = law.moments(3);
  CHECK((*mv.exact)[0] == ztilde_moment(2, 3, 2, 1, 1));
  CHECK((*mv.exact)[0] == 3 * rho(2, 3, 1).value());

  // q=2, n=2, k=2: all 16 generator pairs by hand.
  ZMomentConfig cfg;
  cfg.q = 2;
  cfg.n = 2;
  cfg.k = 2;
  cfg.d = 1;
  cfg.h = 2;
  const auto z = z_moments(cfg);
  mpq_class second = 0;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      const unsigned s = a ^ b;
      auto light = [](unsigned v) { return std::popcount(v) <= 1; };
      const int c = light(a) + light(b) + light(s);
      second += c * c;
    }
  CHECK((*z.exact)[1] == second / 16);
  CHECK(z_moments_serial(cfg).exact == z.exact);
}

TEST_CASE("Monte-Carlo code-model moments") {
  ZMomentConfig cfg;
  cfg.q = 2;
  cfg.n = 4;
  cfg.k = 2;
  cfg.d = 1;
  cfg.h = 3;
  const auto exact = z_moments(cfg);
  cfg.method = ZMethod::monte_carlo;
  cfg.trials = 20000;
  cfg.seed = 5;
  const auto mc = z_moments(cfg);
  for (int m = 0; m < 3; ++m) CHECK(std::fabs(mc.value[m] - exact.value[m]) <= 4 * mc.stderr_[m]);
  cfg.workers = 3;
  CHECK(z_moments(cfg).value == mc.value);
  CHECK(z_moments_serial(cfg).value == mc.value);
}

TEST_CASE("inversion system") {
  const auto one = inversion_system(1);
  CHECK(one.inverse[0][0] == 1);
  const auto two = inversion_system(2);
  CHECK(two.b[0][1] == 2);
  CHECK(two.b[1][1] == 4);
  CHECK(two.inverse[0][0] == 2);
  CHECK(two.inverse[0][1] == -1);
  CHECK(two.inverse[1][0] == mpq_class(-1, 2));
  CHECK(two.inverse[1][1] == mpq_class(1, 2));
  for (int h : {3, 7, 12}) {
    const auto s = inversion_system(h);
    CHECK(s.inverse == s.closed_form);
    CHECK(s.crude_constant > 0);
  }
  CHECK_THROWS_AS(inversion_system(25), ParameterError);
}

TEST_CASE("moment inversion") {
  // Z = Binomial(3, 1/4): masses at 1..3 are 27/64, 9/64, 1/64.
  const auto u = scaled_binomial_moments(3, mpq_class(1, 4), 1, 3);
  const auto m = invert_moments(MomentVector::from_exact(u, MomentModel::code), 3);
  REQUIRE(m.exact);
  CHECK((*m.exact)[0] == mpq_class(27, 64));
  CHECK((*m.exact)[1] == mpq_class(9, 64));
  CHECK((*m.exact)[2] == mpq_class(1, 64));
  CHECK(m.err_bound[0] == 0.0);

  const mpq_class p(2, 7);
  const auto point = invert_moments(MomentVector::from_exact({p, p, p, p}, MomentModel::code), 4);
  CHECK((*point.exact)[0] == p);
  for (int r = 1; r < 4; ++r) CHECK((*point.exact)[r] == 0);

  CHECK_THROWS_AS(invert_moments(MomentVector::from_exact({p, p}, MomentModel::code), 3), ParameterError);
}

TEST_CASE("tail bounds cover the truncation error") {
  // Binomial(6, 1/2) inverted with h = 3: the true masses must fall inside
  // the reported intervals.
  const auto u = scaled_binomial_moments(6, mpq_class(1, 2), 1, 4);
  const auto mv = MomentVector::from_exact(u, MomentModel::code);
  const auto m = invert_moments(mv, 3, {TailSpec::Kind::markov});
  CHECK(m.tail_t > 0);
  for (int r = 1; r <= 3; ++r) {
    const double truth = binomial(6, r).get_d() / 64.0;
    CHECK(std::fabs(m.mass[r - 1] - truth) <= m.err_bound[r - 1]);
  }
  double sum = 0;
  for (double c : m.clipped) {
    CHECK(c >= 0.0);
    sum += c;
  }
  CHECK(sum <= 1.0 + 1e-12);
}

TEST_CASE("moment growth bound") {
  const auto g = moment_growth_bound(2, 4, rho(2, 8, 2), 10);
  CHECK(g.lambda == doctest::Approx(2.3125));
  CHECK_FALSE(g.small_order);
  CHECK(g.bound == doctest::Approx(4.05802010639047).epsilon(1e-12));
  CHECK(moment_growth_ratio(2, 8, 4, 2, 10) == doctest::Approx(1.0782990686611453).epsilon(1e-12));
  CHECK(moment_growth_bound(2, 4, rho(2, 8, 2), 2).small_order);
  double worst = 0;
  for (unsigned q : {2u, 3u, 4u})
    for (int k = 1; k <= 4; ++k)
      for (int n = k; n <= 10; ++n)
        for (int d = 0; d <= n; ++d)
          for (int l = 1; l <= 10; ++l) worst = std::max(worst, moment_growth_ratio(q, n, k, d, l));
  CHECK(worst <= 4.11);
}
