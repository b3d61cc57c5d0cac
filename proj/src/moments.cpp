#include "rlc/moments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "rlc/errors.hpp"
#include "rlc/exact.hpp"
#include "rlc/parallel.hpp"
#include "rlc/span.hpp"

namespace rlc {

namespace {

constexpr int kMaxStirling = 64;

const std::vector<std::vector<mpz_class>>& stirling_table() {
  static const auto table = [] {
    std::vector<std::vector<mpz_class>> s(kMaxStirling + 1, std::vector<mpz_class>(kMaxStirling + 1, 0));
    s[0][0] = 1;
    for (int m = 1; m <= kMaxStirling; ++m)
      for (int l = 1; l <= m; ++l) s[m][l] = l * s[m - 1][l] + s[m - 1][l - 1];
    return s;
  }();
  return table;
}

mpz_class to_mpz(std::uint64_t x) { return mpz_class(std::to_string(x)); }

}  // namespace

mpz_class stirling2(int m, int l) {
  if (m < 0 || m > kMaxStirling || l < 0 || l > m)
    throw ParameterError("stirling2 needs 0 <= l <= m <= " + std::to_string(kMaxStirling));
  return stirling_table()[m][l];
}

mpz_class omega_count(unsigned q, int k, int m) {
  if (q < 2 || k < 1) throw ParameterError("need q >= 2 and k >= 1");
  if (m < 1) throw ParameterError("m must be >= 1");
  const mpz_class qk = ipow(mpz_class(q), k);
  mpz_class c = 1;
  for (int i = 0; i < m; ++i) {
    const mpz_class f = qk - mpz_class(i) * (q - 1) - 1;
    if (f <= 0) return 0;
    c *= f;
  }
  return c;
}

RankCount omega_rank_count(unsigned q, int k, int r, int l, std::uint64_t budget) {
  if (l < 1 || r < 1 || r > l) throw ParameterError("need 1 <= r <= l");
  const Field f = Field::of_order(q);
  std::uint64_t vectors = 1;
  for (int i = 0; i < k; ++i) vectors *= q;
  std::uint64_t tuples = 1;
  for (int i = 0; i < l; ++i) {
    if (tuples > budget / vectors) throw BudgetError("q^(kl) exceeds the brute-force budget");
    tuples *= vectors;
  }

  // Class id of each vector (its normalized form's index), -1 for zero.
  std::vector<std::vector<Elem>> vec(vectors, std::vector<Elem>(k));
  std::vector<long> cls(vectors, -1);
  for (std::uint64_t v = 0; v < vectors; ++v) {
    std::uint64_t x = v;
    for (int j = 0; j < k; ++j) {
      vec[v][j] = static_cast<Elem>(x % q);
      x /= q;
    }
  }
  for (std::uint64_t v = 0; v < vectors; ++v) {
    const auto lead = std::find_if(vec[v].begin(), vec[v].end(), [](Elem e) { return e != 0; });
    if (lead == vec[v].end()) continue;
    const Elem s = f.inv(*lead);
    std::uint64_t id = 0;
    for (int j = k - 1; j >= 0; --j) id = id * q + f.mul(vec[v][j], s);
    cls[v] = static_cast<long>(id);
  }

  RankCount out;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> idx(l);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t x = t;
    for (auto& i : idx) {
      i = x % vectors;
      x /= vectors;
    }
    bool ok = true;
    for (int a = 0; a < l && ok; ++a) {
      if (cls[idx[a]] < 0) ok = false;
      for (int b = 0; b < a && ok; ++b) ok = cls[idx[a]] != cls[idx[b]];
    }
    if (!ok) continue;
    FqMatrix m(l, k);
    for (int a = 0; a < l; ++a)
      for (int j = 0; j < k; ++j) m(a, j) = vec[idx[a]][j];
    if (static_cast<int>(reduce_rows(f, m).size()) == r) ++count;
  }
  out.count = to_mpz(count);

  const mpz_class qk = ipow(mpz_class(q), k);
  out.bound = binomial(l, r) * ipow(mpz_class(q), static_cast<unsigned long>(r) * (l - r));
  for (int i = 0; i < r; ++i) out.bound *= qk - ipow(mpz_class(q), i);
  return out;
}

mpq_class ztilde_moment(unsigned q, int n, int k, int d, int m) {
  if (m < 1 || m > kMaxStirling) throw ParameterError("moment order must be in 1..64");
  const mpq_class r = rho(q, n, d).value();
  mpq_class sum = 0;
  mpq_class rj = 1;
  for (int j = 1; j <= m; ++j) {
    rj *= r;
    sum += mpq_class(stirling2(m, j) * ipow(mpz_class(q - 1), m - j) * omega_count(q, k, j)) * rj;
  }
  sum.canonicalize();
  return sum;
}

MomentVector MomentVector::from_exact(std::vector<mpq_class> values, MomentModel model) {
  MomentVector v;
  v.h = static_cast<int>(values.size());
  v.model = model;
  v.source = Provenance::exact;
  for (const auto& x : values) v.value.push_back(x.get_d());
  v.stderr_.assign(v.h, 0.0);
  v.exact = std::move(values);
  return v;
}

MomentVector ztilde_moments(unsigned q, int n, int k, int d, int h) {
  std::vector<mpq_class> vals;
  for (int m = 1; m <= h; ++m) vals.push_back(ztilde_moment(q, n, k, d, m));
  return MomentVector::from_exact(std::move(vals), MomentModel::independent);
}

MomentVector ZLaw::moments(int h) const {
  std::vector<mpq_class> vals(h, 0);
  for (std::size_t z = 1; z < pmf.size(); ++z) {
    if (pmf[z] == 0) continue;
    mpz_class p = 1;
    for (int m = 1; m <= h; ++m) {
      p *= static_cast<unsigned long>(z);
      vals[m - 1] += pmf[z] * mpq_class(p);
    }
  }
  for (auto& v : vals) v.canonicalize();
  return MomentVector::from_exact(std::move(vals), MomentModel::code);
}

namespace {

using Histogram = std::vector<std::uint64_t>;

void add_hist(Histogram& into, const Histogram& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

void check_z_args(unsigned q, int n, int k, int d) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (k < 1 || k > n) throw ParameterError("k must satisfy 1 <= k <= n");
  if (d < 0 || d > n) throw ParameterError("d must satisfy 0 <= d <= n");
  if (static_cast<long>(k) * std::bit_width(q - 1) > 64) throw BudgetError("span too large to enumerate");
}

// Z_d of one generator set: (q-1) per class at weight <= d, the zero codeword
// included.
std::uint64_t z_value(const GeneratorSet& g, int d) {
  std::uint64_t c = 0;
  for (int w : span_weights(g)) c += (w <= d);
  return c * (g.field().q() - 1);
}

std::uint64_t space_size(unsigned q, int k) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) v *= q;
  return v;
}

ZLaw law_from_histogram(const Histogram& h, std::uint64_t total) {
  ZLaw law;
  for (auto c : h) {
    mpq_class p(to_mpz(c), to_mpz(total));
    p.canonicalize();
    law.pmf.push_back(p);
  }
  return law;
}

ZLaw z_law(unsigned q, int n, int k, int d, std::uint64_t budget, bool parallel) {
  check_z_args(q, n, k, d);
  const Field f = Field::of_order(q);
  std::uint64_t total = 1;
  for (long i = 0; i < static_cast<long>(n) * k; ++i) {
    if (total > budget / q) throw BudgetError("q^(nk) exceeds the enumeration budget of " + std::to_string(budget));
    total *= q;
  }
  auto body = [&](std::uint64_t index, Histogram& h) {
    FqMatrix m(k, n);
    std::uint64_t x = index;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) {
        m(r, c) = static_cast<Elem>(x % q);
        x /= q;
      }
    ++h[z_value(GeneratorSet(f, std::move(m)), d)];
  };
  const Histogram init(space_size(q, k), 0);
  const Histogram h = parallel ? parallel_for_each(total, resolve_workers(0), init, body, add_hist)
                               : serial_for_each(total, init, body);
  return law_from_histogram(h, total);
}

MomentVector monte_carlo_moments(const ZMomentConfig& cfg, bool parallel) {
  check_z_args(cfg.q, cfg.n, cfg.k, cfg.d);
  if (cfg.trials < 2) throw ParameterError("Monte-Carlo moments need at least 2 trials");
  SamplerConfig sc;
  sc.q = cfg.q;
  sc.n = cfg.n;
  sc.k = cfg.k;
  sc.condition_full_rank = false;
  sc.master_seed = cfg.seed;
  sc.trials = cfg.trials;
  sc.validate();
  const std::uint64_t budget = cfg.budget ? cfg.budget : kDefaultVisitBudget;
  const mpz_class need = mpz_class(ProjectiveWalk::class_count(cfg.q, cfg.k)) * to_mpz(cfg.trials);
  if (need > to_mpz(budget)) throw BudgetError("Monte-Carlo moments need " + need.get_str() + " codeword visits");

  const Field f = Field::of_order(cfg.q);
  auto body = [&](std::uint64_t trial, Histogram& h) { ++h[z_value(draw_trial_generator(f, sc, trial), cfg.d)]; };
  const Histogram init(space_size(cfg.q, cfg.k), 0);
  const Histogram hist = parallel ? parallel_for_each(cfg.trials, resolve_workers(cfg.workers), init, body, add_hist)
                                  : serial_for_each(cfg.trials, init, body);

  // Sample power sums up to order 2h give the means and their covariance.
  const int h = cfg.h;
  const mpz_class N = to_mpz(cfg.trials);
  std::vector<mpz_class> power_sum(2 * h + 1, 0);
  for (std::size_t z = 0; z < hist.size(); ++z) {
    if (hist[z] == 0) continue;
    mpz_class p = 1;
    const mpz_class c = to_mpz(hist[z]);
    for (int m = 0; m <= 2 * h; ++m) {
      power_sum[m] += c * p;
      p *= static_cast<unsigned long>(z);
    }
  }
  MomentVector v;
  v.h = h;
  v.model = MomentModel::code;
  v.source = Provenance::monte_carlo;
  v.trials = cfg.trials;
  v.seed = cfg.seed;
  std::vector<mpq_class> mean(2 * h + 1);
  for (int m = 0; m <= 2 * h; ++m) {
    mean[m] = mpq_class(power_sum[m], N);
    mean[m].canonicalize();
  }
  v.covariance.assign(h, std::vector<double>(h, 0.0));
  for (int i = 1; i <= h; ++i) {
    v.value.push_back(mean[i].get_d());
    for (int j = 1; j <= h; ++j) {
      // Unbiased sample covariance of Z^i and Z^j, divided by N.
      const mpq_class cov = (mean[i + j] - mean[i] * mean[j]) / mpq_class(N - 1);
      v.covariance[i - 1][j - 1] = cov.get_d();
    }
    v.stderr_.push_back(std::sqrt(std::max(0.0, v.covariance[i - 1][i - 1])));
  }
  return v;
}

MomentVector run_z_moments(const ZMomentConfig& cfg, bool parallel) {
  if (cfg.h < 1 || cfg.h > kMaxStirling) throw ParameterError("moment order must be in 1..64");
  if (cfg.method == ZMethod::exact_tiny)
    return z_law(cfg.q, cfg.n, cfg.k, cfg.d, cfg.budget ? cfg.budget : kMatrixBudget, parallel).moments(cfg.h);
  return monte_carlo_moments(cfg, parallel);
}

}  // namespace

ZLaw z_law_exact(unsigned q, int n, int k, int d, std::uint64_t budget) { return z_law(q, n, k, d, budget, true); }

MomentVector z_moments(const ZMomentConfig& cfg) { return run_z_moments(cfg, true); }
MomentVector z_moments_serial(const ZMomentConfig& cfg) { return run_z_moments(cfg, false); }

InversionSystem inversion_system(int h) {
  if (h < 1 || h > kMaxInversionOrder)
    throw ParameterError("h must satisfy 1 <= h <= " + std::to_string(kMaxInversionOrder));
  InversionSystem s;
  s.h = h;
  s.b.assign(h, std::vector<mpq_class>(h));
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= h; ++j) s.b[i - 1][j - 1] = mpq_class(ipow(mpz_class(j), i));

  // Gauss-Jordan on [B | I].
  auto a = s.b;
  s.inverse.assign(h, std::vector<mpq_class>(h, 0));
  for (int i = 0; i < h; ++i) s.inverse[i][i] = 1;
  for (int c = 0; c < h; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(s.inverse[p], s.inverse[c]);
    const mpq_class inv = 1 / a[c][c];
    for (int j = 0; j < h; ++j) {
      a[c][j] *= inv;
      s.inverse[c][j] *= inv;
    }
    for (int r = 0; r < h; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class factor = a[r][c];
      for (int j = 0; j < h; ++j) {
        a[r][j] -= factor * a[c][j];
        s.inverse[r][j] -= factor * s.inverse[c][j];
      }
    }
  }

  s.closed_form.assign(h, std::vector<mpq_class>(h));
  for (int r = 1; r <= h; ++r) {
    std::vector<mpz_class> e(h, 0);  // e[j] over {1..h} \ {r}
    e[0] = 1;
    mpz_class denom = r;
    for (int x = 1; x <= h; ++x) {
      if (x == r) continue;
      for (int j = h - 1; j >= 1; --j) e[j] += e[j - 1] * x;
      denom *= r - x;
    }
    for (int m = 1; m <= h; ++m) {
      mpq_class v((h - m) % 2 ? mpz_class(-e[h - m]) : e[h - m], denom);
      v.canonicalize();
      s.closed_form[r - 1][m - 1] = v;
    }
  }

  for (int m = 1; m <= h; ++m) {
    double mx = 0.0;
    for (int r = 0; r < h; ++r) mx = std::max(mx, std::fabs(s.inverse[r][m - 1].get_d()));
    const double scaled = mx * std::pow(static_cast<double>(h), m);
    s.scaled_column_max.push_back(scaled);
    s.crude_constant = std::max(s.crude_constant, std::pow(scaled, 1.0 / h));
  }
  return s;
}

MassVector invert_moments(const MomentVector& u, int h, const TailSpec& tail) {
  const int need = h + (tail.kind == TailSpec::Kind::markov ? 1 : 0);
  if (u.h < need)
    throw ParameterError("need moments of orders 1.." + std::to_string(need) + ", got 1.." + std::to_string(u.h));
  if (tail.kind == TailSpec::Kind::bound && !(tail.t >= 0.0)) throw ParameterError("tail bound must be >= 0");
  const auto sys = inversion_system(h);

  MassVector out;
  out.h = h;
  if (u.exact) {
    std::vector<mpq_class> v(h, 0);
    for (int r = 0; r < h; ++r) {
      for (int m = 0; m < h; ++m) v[r] += sys.inverse[r][m] * (*u.exact)[m];
      v[r].canonicalize();
      out.mass.push_back(v[r].get_d());
    }
    out.exact = std::move(v);
  } else {
    for (int r = 0; r < h; ++r) {
      double acc = 0.0;
      for (int m = 0; m < h; ++m) acc += sys.inverse[r][m].get_d() * u.value[m];
      out.mass.push_back(acc);
    }
  }

  switch (tail.kind) {
    case TailSpec::Kind::none: out.tail_t = 0.0; break;
    case TailSpec::Kind::bound: out.tail_t = tail.t; break;
    case TailSpec::Kind::markov: {
      const double upper = u.exact ? (*u.exact)[h].get_d() : u.value[h];
      out.tail_t = upper / std::pow(h + 1.0, h + 1);
      break;
    }
  }

  const bool sampled = u.source == Provenance::monte_carlo && !u.covariance.empty();
  for (int r = 0; r < h; ++r) {
    double tail_err = 0.0, var = 0.0;
    for (int m = 0; m < h; ++m) {
      const double b = sys.inverse[r][m].get_d();
      tail_err += std::fabs(b) * out.tail_t * std::pow(h + 1.0, m + 1);
      if (sampled)
        for (int m2 = 0; m2 < h; ++m2) var += b * sys.inverse[r][m2].get_d() * u.covariance[m][m2];
    }
    const double se = std::sqrt(std::max(0.0, var));
    out.stderr_.push_back(se);
    out.err_bound.push_back(tail_err + 4.0 * se);
  }

  double total = 0.0;
  for (double m : out.mass) {
    out.clipped.push_back(std::clamp(m, 0.0, 1.0));
    total += out.clipped.back();
  }
  if (total > 1.0)
    for (auto& m : out.clipped) m /= total;
  return out;
}

GrowthBound moment_growth_bound(unsigned q, int k, const ExactProb& rho_d, int l) {
  if (l < 1) throw ParameterError("l must be >= 1");
  if (rho_d.value() == 0) throw ParameterError("rho must be positive");
  GrowthBound g;
  mpq_class lam(ipow(mpz_class(q), k) * rho_d.value().get_num(), rho_d.value().get_den() * (q - 1));
  lam.canonicalize();
  g.lambda = lam.get_d();
  g.small_order = mpq_class(l) <= lam;
  g.bound = g.small_order ? g.lambda : l / (1.0 + std::log(l / g.lambda));
  return g;
}

double moment_growth_ratio(unsigned q, int n, int k, int d, int l) {
  const auto g = moment_growth_bound(q, k, rho(q, n, d), l);
  const auto bits = bits_for_digits(30);
  const Real root = exp(log(Real(ztilde_moment(q, n, k, d, l), bits)) / Real(static_cast<double>(l), bits));
  return root.to_double() / g.bound;
}

}  // namespace rlc
