#include "rlc/min_distance.hpp"

#include <algorithm>
#include <limits>

namespace rlc {

namespace {

// Systematic generator matrices with disjoint new-pivot sets.
template <class Matrix>
struct InfoSets {
  int rank = 0;
  std::vector<Matrix> mats;
  std::vector<int> fresh;  // |N_j|
};

template <class Matrix, class Reduce>
InfoSets<Matrix> build_info_sets(Matrix basis, Reduce&& reduce) {
  InfoSets<Matrix> s;
  const int n = basis.cols();
  auto pivots = reduce(basis, std::span<const int>{});
  s.rank = static_cast<int>(pivots.size());
  if (s.rank == 0) return s;
  basis.truncate(s.rank);
  std::vector<char> covered(n, 0);
  for (int c : pivots) covered[c] = 1;
  s.mats.push_back(basis);
  s.fresh.push_back(s.rank);

  while (true) {
    std::vector<int> order;
    order.reserve(n);
    for (int c = 0; c < n; ++c)
      if (!covered[c]) order.push_back(c);
    if (order.empty()) break;
    for (int c = 0; c < n; ++c)
      if (covered[c]) order.push_back(c);
    Matrix m = s.mats.back();
    pivots = reduce(m, order);
    int added = 0;
    for (int c : pivots)
      if (!covered[c]) {
        covered[c] = 1;
        ++added;
      }
    if (added == 0) break;
    s.mats.push_back(std::move(m));
    s.fresh.push_back(added);
  }
  return s;
}

// Lower bound on the weight of any codeword not yet produced, after all
// messages of weight <= w have been tried in matrices [0, done) and weight
// <= w-1 in the rest.
int lower_bound(const std::vector<int>& fresh, int rank, int w, std::size_t done) {
  int lb = 0;
  for (std::size_t j = 0; j < fresh.size(); ++j) {
    const int tried = j < done ? w : w - 1;
    lb += std::max(0, tried + 1 - (rank - fresh[j]));
  }
  return lb;
}

struct SearchState {
  int best = std::numeric_limits<int>::max();
  int stop_below = 0;  // stop once best < stop_below (threshold mode)
  std::uint64_t visited = 0;
  bool stopped = false;

  void offer(int w) {
    ++visited;
    if (w > 0 && w < best) best = w;
    if (stop_below > 0 && best < stop_below) stopped = true;
  }
};

// Enumerates all weight-w subsets of the rows of a binary matrix.
class BinaryEnumerator {
 public:
  explicit BinaryEnumerator(const BitMatrix& m) : m_(m), words_(m.words()) {}

  void run(int w, SearchState& st) {
    acc_.assign(static_cast<std::size_t>(w + 1) * words_, 0);
    recurse(0, 0, w, st);
  }

 private:
  void recurse(int start, int depth, int w, SearchState& st) {
    const std::uint64_t* cur = acc_.data() + static_cast<std::size_t>(depth) * words_;
    std::uint64_t* nxt = acc_.data() + static_cast<std::size_t>(depth + 1) * words_;
    const int last = m_.rows() - (w - depth - 1);
    for (int i = start; i < last && !st.stopped; ++i) {
      const auto r = m_.row(i);
      for (int x = 0; x < words_; ++x) nxt[x] = cur[x] ^ r[x];
      if (depth + 1 == w) {
        int weight = 0;
        for (int x = 0; x < words_; ++x) weight += std::popcount(nxt[x]);
        st.offer(weight);
      } else {
        recurse(i + 1, depth + 1, w, st);
      }
    }
  }

  const BitMatrix& m_;
  int words_;
  std::vector<std::uint64_t> acc_;
};

// Weight-w messages over F_q with leading coefficient 1.
class FieldEnumerator {
 public:
  FieldEnumerator(const Field& f, const FqMatrix& m) : f_(f), rows_(m.rows()), n_(m.cols()), q_(f.q()) {
    scaled_.resize(static_cast<std::size_t>(rows_) * (q_ - 1) * n_);
    for (int i = 0; i < rows_; ++i)
      for (unsigned c = 1; c < q_; ++c) {
        Elem* dst = scaled(i, static_cast<Elem>(c));
        const auto src = m.row(i);
        for (int t = 0; t < n_; ++t) dst[t] = f_.mul(static_cast<Elem>(c), src[t]);
      }
  }

  void run(int w, SearchState& st) {
    acc_.assign(static_cast<std::size_t>(w + 1) * n_, 0);
    recurse(0, 0, w, st);
  }

 private:
  Elem* scaled(int row, Elem c) {
    return scaled_.data() + (static_cast<std::size_t>(row) * (q_ - 1) + (c - 1)) * n_;
  }

  void recurse(int start, int depth, int w, SearchState& st) {
    const Elem* cur = acc_.data() + static_cast<std::size_t>(depth) * n_;
    Elem* nxt = acc_.data() + static_cast<std::size_t>(depth + 1) * n_;
    const int last = rows_ - (w - depth - 1);
    const unsigned top = depth == 0 ? 1 : q_ - 1;
    for (int i = start; i < last && !st.stopped; ++i) {
      for (unsigned c = 1; c <= top && !st.stopped; ++c) {
        const Elem* r = scaled(i, static_cast<Elem>(c));
        for (int t = 0; t < n_; ++t) nxt[t] = f_.add(cur[t], r[t]);
        if (depth + 1 == w) {
          int weight = 0;
          for (int t = 0; t < n_; ++t) weight += (nxt[t] != 0);
          st.offer(weight);
        } else {
          recurse(i + 1, depth + 1, w, st);
        }
      }
    }
  }

  const Field& f_;
  int rows_, n_;
  unsigned q_;
  std::vector<Elem> scaled_;
  std::vector<Elem> acc_;
};

// threshold <= 0: compute the exact distance. Otherwise decide >= threshold.
template <class Matrix, class Enumerator>
std::pair<int, bool> search(const InfoSets<Matrix>& sets, std::vector<Enumerator>& enums, int threshold,
                            std::uint64_t& visited) {
  SearchState st;
  st.stop_below = threshold;
  const int r = sets.rank;
  for (int w = 1; w <= r; ++w) {
    for (std::size_t j = 0; j < enums.size(); ++j) {
      enums[j].run(w, st);
      visited = st.visited;
      if (st.stopped) return {st.best, false};
      // All classes seen once weight r is done in any single matrix.
      if (w == r) return {st.best, st.best >= threshold};
      const int lb = lower_bound(sets.fresh, r, w, j + 1);
      if (threshold > 0 && lb >= threshold) return {st.best, true};
      if (st.best <= lb) return {st.best, st.best >= threshold};
    }
  }
  return {st.best, st.best >= threshold};
}

template <class Fn>
auto dispatch(const GeneratorSet& g, int threshold, Fn&& finish) {
  std::uint64_t visited = 0;
  if (g.field().q() == 2) {
    auto sets = build_info_sets(to_bits(g.matrix()), [](BitMatrix& m, std::span<const int> o) { return reduce_rows(m, o); });
    if (sets.rank == 0) return finish(0, threshold <= 0, visited);
    std::vector<BinaryEnumerator> enums;
    for (const auto& m : sets.mats) enums.emplace_back(m);
    auto [d, ok] = search(sets, enums, threshold, visited);
    return finish(d, ok, visited);
  }
  const Field& f = g.field();
  auto sets = build_info_sets(g.matrix(), [&](FqMatrix& m, std::span<const int> o) { return reduce_rows(f, m, o); });
  if (sets.rank == 0) return finish(0, threshold <= 0, visited);
  std::vector<FieldEnumerator> enums;
  for (const auto& m : sets.mats) enums.emplace_back(f, m);
  auto [d, ok] = search(sets, enums, threshold, visited);
  return finish(d, ok, visited);
}

}  // namespace

MinDistanceResult min_distance(const GeneratorSet& g) {
  return dispatch(g, 0, [](int d, bool, std::uint64_t v) { return MinDistanceResult{d, v}; });
}

ThresholdResult min_distance_at_least(const GeneratorSet& g, int d) {
  if (d <= 0) return {true, 0};
  return dispatch(g, d, [](int, bool ok, std::uint64_t v) { return ThresholdResult{ok, v}; });
}

}  // namespace rlc
