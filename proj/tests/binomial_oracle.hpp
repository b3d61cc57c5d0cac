#pragma once

#include <gmpxx.h>

#include <vector>

// Raw moments of c * Binomial(N, p) for orders 1..h, from the recurrence
//   E[X^{m+1}] = N p E[X^m] + p (1 - p) d/dp E[X^m]
// carried as polynomials in p, then evaluated exactly.
inline std::vector<mpq_class> scaled_binomial_moments(const mpz_class& N, const mpq_class& p, unsigned long c, int h) {
  std::vector<std::vector<mpq_class>> poly{{1}};
  for (int m = 0; m < h; ++m) {
    const auto& cur = poly.back();
    std::vector<mpq_class> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += mpq_class(N) * cur[i];  // N p * p^i
      if (i > 0) {
        next[i] += i * cur[i];      // p * i p^{i-1}
        next[i + 1] -= i * cur[i];  // -p^2 * i p^{i-1}
      }
    }
    poly.push_back(std::move(next));
  }
  std::vector<mpq_class> out;
  mpq_class scale = 1;
  for (int m = 1; m <= h; ++m) {
    scale *= c;
    mpq_class v = 0, pw = 1;
    for (const auto& a : poly[m]) {
      v += a * pw;
      pw *= p;
    }
    v *= scale;
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}
