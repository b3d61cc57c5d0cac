#include "rlc/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <set>
#include <string>

#include "rlc/errors.hpp"
#include "rlc/exact.hpp"
#include "rlc/min_distance.hpp"
#include "rlc/parallel.hpp"
#include "rlc/span.hpp"

namespace rlc {

void SamplerConfig::validate() const {
  if (q < 2 || q > 65536) throw ParameterError("q must be a prime power in 2..65536");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (k < 1 || k > n) throw ParameterError("k must satisfy 1 <= k <= n");
  if (trials < 1) throw ParameterError("trials must be >= 1");
  if (workers < 0) throw ParameterError("workers must be >= 0");
}

double EmpiricalCdf::cdf(int d) const {
  if (d < 0) return 0.0;
  std::uint64_t acc = 0;
  for (int i = 0; i <= std::min(d, n); ++i) acc += counts[i];
  return static_cast<double>(acc) / static_cast<double>(trials);
}

double EmpiricalCdf::stderr_at(int d) const {
  const double p = cdf(d);
  return std::sqrt(p * (1 - p) / static_cast<double>(trials));
}

CdfTable EmpiricalCdf::table() const {
  CdfTable t;
  t.n = n;
  t.provenance = Provenance::monte_carlo;
  t.trials = trials;
  t.seed = master_seed;
  for (int d = 0; d <= n; ++d) t.entries.push_back({std::nullopt, cdf(d), stderr_at(d)});
  return t;
}

FqMatrix draw_matrix(const Field& f, int k, int n, CounterRng& rng) {
  ElementSampler draw(f.q());
  FqMatrix m(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = static_cast<Elem>(draw(rng));
  return m;
}

GeneratorSet draw_trial_generator(const Field& f, const SamplerConfig& cfg, std::uint64_t trial,
                                  std::uint64_t* redraws) {
  auto rng = CounterRng::for_trial(cfg.master_seed, trial);
  while (true) {
    GeneratorSet g(f, draw_matrix(f, cfg.k, cfg.n, rng));
    if (!cfg.condition_full_rank || g.is_full_rank()) return g;
    if (redraws) ++*redraws;
  }
}

namespace {

bool gray_fits(unsigned q, int k) { return static_cast<long>(k) * std::bit_width(q - 1) <= 64; }

DminStrategy resolve(DminStrategy s, unsigned q, int k) {
  if (s != DminStrategy::automatic) return s;
  if (gray_fits(q, k) && ProjectiveWalk::class_count(q, k) <= kGrayClassLimit) return DminStrategy::gray;
  return DminStrategy::info_set;
}

struct SampleState {
  std::vector<std::uint64_t> counts;
  std::uint64_t redraws = 0;
  std::uint64_t visited = 0;
};

void merge_into(SampleState& into, const SampleState& from) {
  for (std::size_t i = 0; i < into.counts.size(); ++i) into.counts[i] += from.counts[i];
  into.redraws += from.redraws;
  into.visited += from.visited;
}

EmpiricalCdf run_sampler(const SamplerConfig& cfg, bool parallel) {
  cfg.validate();
  const Field f = Field::of_order(cfg.q);
  const DminStrategy strategy = resolve(cfg.strategy, cfg.q, cfg.k);
  if (strategy == DminStrategy::gray) {
    if (!gray_fits(cfg.q, cfg.k)) throw BudgetError("span too large for exhaustive traversal");
    const mpz_class need = mpz_class(ProjectiveWalk::class_count(cfg.q, cfg.k)) * mpz_class(std::to_string(cfg.trials));
    if (need > mpz_class(std::to_string(cfg.budget)))
      throw BudgetError("exhaustive traversal needs " + need.get_str() + " codeword visits, budget " +
                        std::to_string(cfg.budget));
  }

  std::atomic<std::uint64_t> visited_total{0};
  auto body = [&](std::uint64_t trial, SampleState& s) {
    auto g = draw_trial_generator(f, cfg, trial, &s.redraws);
    const auto e = evaluate_dmin(g, strategy);
    ++s.counts[e.distance];
    s.visited += e.visited;
    if (visited_total.fetch_add(e.visited, std::memory_order_relaxed) + e.visited > cfg.budget)
      throw BudgetError("codeword-visit budget of " + std::to_string(cfg.budget) + " exceeded");
  };

  SampleState init;
  init.counts.assign(cfg.n + 1, 0);
  const SampleState s = parallel ? parallel_for_each(cfg.trials, resolve_workers(cfg.workers), init, body, merge_into)
                                 : serial_for_each(cfg.trials, init, body);
  EmpiricalCdf out;
  out.n = cfg.n;
  out.counts = s.counts;
  out.trials = cfg.trials;
  out.master_seed = cfg.master_seed;
  out.redraws = s.redraws;
  out.codewords_visited = s.visited;
  return out;
}

}  // namespace

DminEval evaluate_dmin(const GeneratorSet& g, DminStrategy strategy) {
  strategy = resolve(strategy, g.field().q(), g.k());
  if (strategy == DminStrategy::gray) return {min_span_weight(g), ProjectiveWalk::class_count(g.field().q(), g.k())};
  const auto r = min_distance(g);
  return {r.distance, r.codewords_visited};
}

EmpiricalCdf sample_dmin(const SamplerConfig& cfg) { return run_sampler(cfg, true); }
EmpiricalCdf sample_dmin_serial(const SamplerConfig& cfg) { return run_sampler(cfg, false); }

mpz_class gaussian_binomial(unsigned q, int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(mpz_class(q), n - i) - 1;
    den *= ipow(mpz_class(q), i + 1) - 1;
  }
  return num / den;
}

std::vector<mpq_class> CodeLaw::pmf() const {
  std::vector<mpq_class> p;
  for (const auto& c : counts) {
    mpq_class x(c, total);
    x.canonicalize();
    p.push_back(x);
  }
  return p;
}

CdfTable CodeLaw::table() const { return exact_cdf_from_pmf(pmf()); }

namespace {

void check_law_args(unsigned q, int n, int k) {
  if (q < 2) throw ParameterError("q must be >= 2");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (k < 1 || k > n) throw ParameterError("k must satisfy 1 <= k <= n");
}

// q^e as uint64 if it is at most `limit`.
std::optional<std::uint64_t> bounded_pow(unsigned q, long e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (long i = 0; i < e; ++i) {
    if (v > limit / q) return std::nullopt;
    v *= q;
  }
  return v;
}

// Entry i of a matrix enumeration: base-q digits of the index, row-major.
FqMatrix matrix_at(unsigned q, int k, int n, std::uint64_t index) {
  FqMatrix m(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) {
      m(r, c) = static_cast<Elem>(index % q);
      index /= q;
    }
  return m;
}

using Counts = std::vector<std::uint64_t>;

void add_counts(Counts& into, const Counts& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
}

// Slot n + 1 holds the number of objects counted.
CodeLaw law_from_counts(int n, const Counts& c) {
  CodeLaw law;
  law.n = n;
  law.total = mpz_class(std::to_string(c[n + 1]));
  for (int d = 0; d <= n; ++d) law.counts.push_back(mpz_class(std::to_string(c[d])));
  return law;
}

std::vector<std::vector<int>> pivot_sets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  while (true) {
    out.push_back(p);
    int i = k - 1;
    while (i >= 0 && p[i] == n - k + i) --i;
    if (i < 0) break;
    ++p[i];
    for (int j = i + 1; j < k; ++j) p[j] = p[j - 1] + 1;
  }
  return out;
}

CodeLaw enumerate(unsigned q, int n, int k, CodeLawMode mode, std::uint64_t budget, bool parallel) {
  check_law_args(q, n, k);
  const Field f = Field::of_order(q);
  Counts init(n + 2, 0);
  const int workers = resolve_workers(0);

  if (mode == CodeLawMode::all_matrices) {
    if (budget == 0) budget = kMatrixBudget;
    const auto count = bounded_pow(q, static_cast<long>(n) * k, budget);
    if (!count) throw BudgetError("q^(nk) exceeds the matrix budget of " + std::to_string(budget));
    auto body = [&](std::uint64_t i, Counts& c) {
      GeneratorSet g(f, matrix_at(q, k, n, i));
      if (!g.is_full_rank()) return;
      ++c[evaluate_dmin(g, DminStrategy::automatic).distance];
      ++c[n + 1];
    };
    const Counts c = parallel ? parallel_for_each(*count, workers, init, body, add_counts)
                              : serial_for_each(*count, init, body);
    return law_from_counts(n, c);
  }

  if (budget == 0) budget = kSubspaceBudget;
  const mpz_class subspaces = gaussian_binomial(q, n, k);
  if (subspaces > mpz_class(std::to_string(budget)))
    throw BudgetError("subspace count " + subspaces.get_str() + " exceeds the budget of " + std::to_string(budget));
  const auto sets = pivot_sets(n, k);
  // Each pivot set fixes an identity block; the entries right of a row's
  // pivot outside the other pivot columns are free.
  auto body = [&](std::uint64_t s, Counts& c) {
    const auto& piv = sets[s];
    std::vector<bool> is_pivot(n, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r)
      for (int col = piv[r] + 1; col < n; ++col)
        if (!is_pivot[col]) free.emplace_back(r, col);
    FqMatrix m(k, n);
    for (int r = 0; r < k; ++r) m(r, piv[r]) = 1;
    const std::uint64_t combos = *bounded_pow(q, static_cast<long>(free.size()), budget);
    for (std::uint64_t i = 0; i < combos; ++i) {
      std::uint64_t x = i;
      for (auto [r, col] : free) {
        m(r, col) = static_cast<Elem>(x % q);
        x /= q;
      }
      ++c[evaluate_dmin(GeneratorSet(f, m), DminStrategy::automatic).distance];
      ++c[n + 1];
    }
  };
  const Counts c = parallel ? parallel_for_each(sets.size(), workers, init, body, add_counts)
                            : serial_for_each(sets.size(), init, body);
  return law_from_counts(n, c);
}

}  // namespace

CodeLaw enumerate_code_law(unsigned q, int n, int k, CodeLawMode mode, std::uint64_t budget) {
  return enumerate(q, n, k, mode, budget, true);
}

CodeLaw enumerate_code_law_serial(unsigned q, int n, int k, CodeLawMode mode, std::uint64_t budget) {
  return enumerate(q, n, k, mode, budget, false);
}

std::map<std::vector<Elem>, std::uint64_t> subspace_hits(unsigned q, int n, int k, std::uint64_t budget) {
  check_law_args(q, n, k);
  const Field f = Field::of_order(q);
  const auto count = bounded_pow(q, static_cast<long>(n) * k, budget);
  if (!count) throw BudgetError("q^(nk) exceeds the matrix budget of " + std::to_string(budget));
  std::map<std::vector<Elem>, std::uint64_t> hits;
  for (std::uint64_t i = 0; i < *count; ++i) {
    FqMatrix m = matrix_at(q, k, n, i);
    if (static_cast<int>(reduce_rows(f, m).size()) != k) continue;
    std::vector<Elem> key;
    for (int r = 0; r < k; ++r) key.insert(key.end(), m.row(r).begin(), m.row(r).end());
    ++hits[key];
  }
  return hits;
}

namespace {

void fill_rows(CompareReport& rep, const CdfTable& emp, const CdfTable& wmin) {
  const WeightTail tail(rep.q, rep.n);
  const mpz_class qk = ipow(mpz_class(rep.q), rep.k);
  const double n = rep.n;
  for (int d = 0; d <= rep.n; ++d) {
    CompareRow row;
    row.d = d;
    row.empirical = emp.entries[d].value;
    row.stderr_ = emp.entries[d].stderr_;
    row.wmin = wmin.entries[d].value;
    row.diff = std::fabs(row.empirical - row.wmin);
    row.qk_rho = mpq_class(qk * tail.count(d), tail.space_size()).get_d();
    row.d2_n32 = static_cast<double>(d) * d / std::pow(n, 1.5);
    row.d4_n3 = std::pow(static_cast<double>(d), 4) / (n * n * n);
    if (row.diff > rep.sup) {
      rep.sup = row.diff;
      rep.argmax_d = d;
    }
    rep.rows.push_back(row);
  }
}

}  // namespace

CompareReport compare_cdfs(const SamplerConfig& cfg) {
  const auto emp = sample_dmin(cfg);
  CompareReport rep;
  rep.q = cfg.q;
  rep.n = cfg.n;
  rep.k = cfg.k;
  rep.source = Provenance::monte_carlo;
  rep.trials = cfg.trials;
  rep.seed = cfg.master_seed;
  fill_rows(rep, emp.table(), wmin_cdf_table(cfg.q, cfg.n, cfg.k));
  return rep;
}

CompareReport compare_cdfs_exact(unsigned q, int n, int k, std::uint64_t budget) {
  const auto law = enumerate_code_law(q, n, k, CodeLawMode::all_subspaces, budget);
  const auto emp = law.table();
  const auto wmin = wmin_cdf_table(q, n, k);
  CompareReport rep;
  rep.q = q;
  rep.n = n;
  rep.k = k;
  rep.source = Provenance::exact;
  fill_rows(rep, emp, wmin);
  if (wmin.provenance == Provenance::exact) {
    mpq_class sup = 0;
    for (int d = 0; d <= n; ++d) sup = std::max<mpq_class>(sup, abs(*emp.entries[d].exact - *wmin.entries[d].exact));
    rep.exact_sup = sup;
  }
  return rep;
}

const mpz_class& JointWeightLaw::count(int a, int b, int c) const {
  if (std::min({a, b, c}) < 0 || std::max({a, b, c}) > cap_) throw ParameterError("weight outside the table");
  const std::size_t w = cap_ + 1;
  return counts_[(a * w + b) * w + c];
}

mpq_class JointWeightLaw::prob(int a, int b, int c) const {
  mpq_class p(count(a, b, c), total_);
  p.canonicalize();
  return p;
}

mpq_class JointWeightLaw::prob_all_at_most(int d) const {
  if (d < 0 || d > cap_) throw ParameterError("d outside 0..cap");
  mpz_class acc = 0;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      for (int c = 0; c <= d; ++c) acc += count(a, b, c);
  mpq_class p(acc, total_);
  p.canonicalize();
  return p;
}

JointWeightLaw joint_weight_triple(unsigned q, int n, int cap) {
  if (q < 2) throw ParameterError("q must be >= 2");
  if (n < 1 || n > 512) throw ParameterError("n must satisfy 1 <= n <= 512");
  if (cap < 0 || cap > n) cap = n;
  const std::size_t w = cap + 1;
  if (w * w * w > kJointStateBudget) throw BudgetError("joint weight table too large; lower the cap");

  // Per coordinate (y1, y2, y1 + y2) is zero/nonzero in one of five
  // patterns, with these multiplicities out of q^2.
  struct Move {
    int da, db, dc;
    unsigned long mult;
  };
  const Move moves[] = {{0, 0, 0, 1}, {0, 1, 1, q - 1}, {1, 0, 1, q - 1}, {1, 1, 0, q - 1}, {1, 1, 1, (q - 1) * (q - 2)}};

  std::vector<mpz_class> cur(w * w * w), next(w * w * w);
  cur[0] = 1;
  for (int t = 0; t < n; ++t) {
    for (auto& x : next) x = 0;
    const int lim = std::min(t, cap);
    for (int a = 0; a <= lim; ++a)
      for (int b = 0; b <= lim; ++b)
        for (int c = 0; c <= lim; ++c) {
          const auto& v = cur[(a * w + b) * w + c];
          if (v == 0) continue;
          for (const auto& m : moves) {
            if (m.mult == 0) continue;
            const int a2 = a + m.da, b2 = b + m.db, c2 = c + m.dc;
            if (a2 > cap || b2 > cap || c2 > cap) continue;
            next[(a2 * w + b2) * w + c2] += v * m.mult;
          }
        }
    std::swap(cur, next);
  }
  JointWeightLaw law;
  law.q_ = q;
  law.n_ = n;
  law.cap_ = cap;
  law.total_ = ipow(mpz_class(q), 2ul * n);
  law.counts_ = std::move(cur);
  return law;
}

namespace {

// Recursively fills the n columns of X (each a vector of F_q^k) and counts
// the outcomes where every tracked codeword has weight <= d.
struct BruteForce {
  int n, d, s;
  std::vector<std::vector<bool>> nonzero;  // [column value][i]: <v_i, y> != 0
  std::vector<int> weight;
  std::uint64_t hits = 0;

  void run(int col) {
    if (col == n) {
      ++hits;
      return;
    }
    for (const auto& nz : nonzero) {
      bool ok = true;
      for (int i = 0; i < s; ++i) {
        weight[i] += nz[i];
        ok = ok && weight[i] <= d;
      }
      // Weights only grow, so a failing prefix has no hits below it.
      if (ok) run(col + 1);
      for (int i = 0; i < s; ++i) weight[i] -= nz[i];
    }
  }
};

}  // namespace

IndicatorProduct indicator_product_exact(unsigned q, int n, int d, const std::vector<FqVector>& vectors,
                                         std::uint64_t budget) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (d < 0 || d > n) throw ParameterError("d must satisfy 0 <= d <= n");
  if (vectors.empty()) throw ParameterError("need at least one vector");
  const int k = static_cast<int>(vectors[0].size());
  if (k < 1) throw ParameterError("vectors must be nonempty");
  const Field f = Field::of_order(q);

  std::set<std::vector<Elem>> classes;
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != k) throw ParameterError("vectors differ in length");
    std::vector<Elem> e(v.entries().begin(), v.entries().end());
    const auto lead = std::find_if(e.begin(), e.end(), [](Elem x) { return x != 0; });
    if (lead == e.end()) continue;  // zero codeword: weight 0 <= d always
    const Elem scale = f.inv(*lead);
    for (auto& x : e) x = f.mul(x, scale);
    classes.insert(e);
  }
  const int s = static_cast<int>(classes.size());
  if (s == 0) return {ExactProb(1), IndicatorRoute::brute_force};
  const std::vector<std::vector<Elem>> reps(classes.begin(), classes.end());

  if (const auto outcomes = bounded_pow(q, static_cast<long>(n) * k, budget)) {
    const auto columns = *bounded_pow(q, k, budget);
    BruteForce bf{n, d, s, {}, std::vector<int>(s, 0)};
    for (std::uint64_t y = 0; y < columns; ++y) {
      std::vector<Elem> col(k);
      std::uint64_t x = y;
      for (int j = 0; j < k; ++j) {
        col[j] = static_cast<Elem>(x % q);
        x /= q;
      }
      std::vector<bool> nz(s);
      for (int i = 0; i < s; ++i) {
        Elem acc = 0;
        for (int j = 0; j < k; ++j) acc = f.add(acc, f.mul(reps[i][j], col[j]));
        nz[i] = acc != 0;
      }
      bf.nonzero.push_back(std::move(nz));
    }
    bf.run(0);
    mpq_class p(mpz_class(std::to_string(bf.hits)), mpz_class(std::to_string(*outcomes)));
    p.canonicalize();
    return {ExactProb(p), IndicatorRoute::brute_force};
  }

  FqMatrix m(s, k);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = reps[i][j];
  const int r = rank(GeneratorSet(f, std::move(m)));
  if (r == s) {
    const mpq_class rho_d = rho(q, n, d).value();
    mpq_class p(ipow(rho_d.get_num(), s), ipow(rho_d.get_den(), s));
    p.canonicalize();
    return {ExactProb(p), IndicatorRoute::independent};
  }
  if (s == 3 && r == 2)
    return {ExactProb(joint_weight_triple(q, n, d).prob_all_at_most(d)), IndicatorRoute::triple};
  throw BudgetError("dependency structure not reducible and q^(nk) exceeds the brute-force budget");
}

}  // namespace rlc
