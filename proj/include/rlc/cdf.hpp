#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rlc {

enum class Provenance { exact, closed_form, monte_carlo };

std::string to_string(Provenance p);

/// One c.d.f. value. Exact tables carry the rational; closed-form tables
/// carry a decimal evaluated in high precision; Monte-Carlo tables carry a
/// binomial standard error.
struct CdfEntry {
  std::optional<mpq_class> exact;
  double value = 0.0;
  double stderr_ = 0.0;
};

/// d -> P{X <= d} for d = 0..n.
struct CdfTable {
  int n = 0;
  std::vector<CdfEntry> entries;
  Provenance provenance = Provenance::exact;
  std::uint64_t trials = 0;  // monte_carlo only
  std::uint64_t seed = 0;    // monte_carlo only

  double at(int d) const {
    if (d < 0) return 0.0;
    if (d >= n) return entries.back().value;
    return entries[d].value;
  }
};

/// Builds an exact table from a probability mass function on 0..n.
CdfTable exact_cdf_from_pmf(const std::vector<mpq_class>& pmf);

}  // namespace rlc
