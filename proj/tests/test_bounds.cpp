#include "doctest.h"

#include <cmath>

#include "rlc/bounds.hpp"
#include "rlc/errors.hpp"
#include "rlc/exact.hpp"

using namespace rlc;

TEST_CASE("classical Gilbert-Varshamov values") {
  const auto r = gv_classical(2, 7, 3);
  CHECK(r.classical_size == 8);
  CHECK(r.classical_dimension == 2);
  CHECK(r.improved_size_core == mpq_class(128, 29));
  CHECK(gv_classical(2, 7, 2).classical_size == 64);
  CHECK_THROWS_AS(gv_classical(2, 7, 1), ParameterError);
  CHECK_THROWS_AS(gv_classical(2, 7, 8), ParameterError);
}

TEST_CASE("classical size is nonincreasing and the dimension is tight") {
  for (unsigned q : {2u, 3u, 5u})
    for (int n : {10, 31}) {
      mpq_class prev = -1;
      for (int d = 2; d <= n; ++d) {
        const auto r = gv_classical(q, n, d);
        // The bound itself drops below 1 once sum_{j<=d-2} exceeds q^{n-1}.
        if (d <= (q - 1) * n / (2 * q)) CHECK(r.classical_size >= 1);
        if (prev >= 0) CHECK(r.classical_size <= prev);
        prev = r.classical_size;
        const auto rho_d = rho(q, n, d - 1).value();
        const int k = r.classical_dimension;
        CHECK(mpq_class(ipow(mpz_class(q), k)) * rho_d <= 1);
        if (k < n) CHECK(mpq_class(ipow(mpz_class(q), k + 1)) * rho_d > 1);
        const WeightTail tail(q, n);
        mpq_class core(tail.space_size(), tail.count(d - 1));
        core.canonicalize();
        CHECK(r.improved_size_core == core);
      }
    }
}

TEST_CASE("improved report window and shift") {
  CHECK(gv_classical(2, 100, 30).sqrt_factor == 10.0);
  const auto in = gv_improved(2, 64, static_cast<int>(std::ceil(0.3 * 64)), 0.25);
  CHECK(in.in_window);
  CHECK(in.warning.empty());
  const auto out = gv_improved(2, 64, 40, 0.25);
  CHECK_FALSE(out.in_window);
  CHECK_FALSE(out.warning.empty());
  CHECK(out.classical_size > 0);
  CHECK(gv_improved(2, 256, 80, 0.25, 1.0).dimension_shift == 3);
}

TEST_CASE("entropy approximation of the weight tail") {
  CHECK(entropy_rate_check(2, 2000, 0.25) <= 0.02);
  CHECK(entropy_rate_check(2, 4000, 0.49) < 0.01);
  CHECK(entropy_rate_check(3, 16 * 150, 0.3) < entropy_rate_check(3, 150, 0.3));
  CHECK_THROWS_AS(entropy_rate_check(2, 100, 0.5), ParameterError);
}

TEST_CASE("GV experiment at the classical dimension") {
  GvExperimentConfig cfg;
  cfg.n = 24;
  cfg.trials = 4000;
  cfg.seed = 17;
  const auto rep = gv_experiment(cfg);
  CHECK(rep.d == 8);
  CHECK(rep.k == rep.k_gv);
  CHECK(rep.success_rate >= rep.surrogate - 4 * rep.stderr_);
  CHECK(rep.reference == doctest::Approx(std::exp(-std::sqrt(24.0))));
  cfg.workers = 4;
  CHECK(gv_experiment(cfg).success_count == rep.success_count);
  CHECK(gv_experiment_serial(cfg).success_count == rep.success_count);
}

TEST_CASE("GV experiment rejects too large a dimension") {
  GvExperimentConfig cfg;
  cfg.n = 10;
  cfg.dim_bonus = 10;
  CHECK_THROWS_AS(gv_experiment(cfg), ParameterError);
}
