#include "rlc/linalg.hpp"

#include <numeric>
#include <utility>

#include "rlc/errors.hpp"

namespace rlc {

namespace {

std::vector<int> natural_order(int cols, std::span<const int> order) {
  if (!order.empty()) return {order.begin(), order.end()};
  std::vector<int> all(cols);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

void FqMatrix::swap_rows(int a, int b) noexcept {
  if (a == b) return;
  auto ra = row(a), rb = row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

void BitMatrix::swap_rows(int a, int b) noexcept {
  if (a == b) return;
  auto ra = row(a), rb = row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

BitMatrix to_bits(const FqMatrix& m) {
  BitMatrix b(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c)) b.set(r, c, true);
  return b;
}

FqMatrix from_bits(const BitMatrix& b) {
  FqMatrix m(b.rows(), b.cols());
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) m(r, c) = b.get(r, c) ? 1 : 0;
  return m;
}

std::vector<int> reduce_rows(const Field& f, FqMatrix& m, std::span<const int> column_order) {
  const auto order = natural_order(m.cols(), column_order);
  std::vector<int> pivots;
  int r = 0;
  for (int c : order) {
    if (r == m.rows()) break;
    int found = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        found = i;
        break;
      }
    if (found < 0) continue;
    m.swap_rows(found, r);
    const Elem s = f.inv(m(r, c));
    for (auto& x : m.row(r)) x = f.mul(x, s);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = f.neg(m(i, c));
      auto dst = m.row(i);
      auto src = m.row(r);
      for (int j = 0; j < m.cols(); ++j)
        if (src[j]) dst[j] = f.add(dst[j], f.mul(factor, src[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<int> reduce_rows(BitMatrix& m, std::span<const int> column_order) {
  const auto order = natural_order(m.cols(), column_order);
  std::vector<int> pivots;
  int r = 0;
  for (int c : order) {
    if (r == m.rows()) break;
    int found = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.get(i, c)) {
        found = i;
        break;
      }
    if (found < 0) continue;
    m.swap_rows(found, r);
    const auto src = m.row(r);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || !m.get(i, c)) continue;
      auto dst = m.row(i);
      for (int w = 0; w < m.words(); ++w) dst[w] ^= src[w];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

GeneratorSet::GeneratorSet(Field field, const std::vector<FqVector>& rows) : field_(std::move(field)) {
  const int n = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  rows_ = FqMatrix(static_cast<int>(rows.size()), n);
  for (int i = 0; i < rows_.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw ParameterError("generator rows have different lengths");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] >= field_.q()) throw ParameterError("generator entry outside the field");
      rows_(i, j) = rows[i][j];
    }
  }
}

FqVector GeneratorSet::row(int i) const {
  const auto r = rows_.row(i);
  return FqVector(std::vector<Elem>(r.begin(), r.end()));
}

int GeneratorSet::rank() const {
  if (!rank_) {
    if (field_.q() == 2) {
      auto b = to_bits(rows_);
      rank_ = static_cast<int>(reduce_rows(b).size());
    } else {
      auto m = rows_;
      rank_ = static_cast<int>(reduce_rows(field_, m).size());
    }
  }
  return *rank_;
}

int rank(const GeneratorSet& g) { return g.rank(); }

FqVector encode(const GeneratorSet& g, std::span<const Elem> message) {
  if (static_cast<int>(message.size()) != g.k()) throw ParameterError("message length differs from k");
  const Field& f = g.field();
  std::vector<Elem> c(g.n(), 0);
  for (int i = 0; i < g.k(); ++i) {
    if (message[i] == 0) continue;
    const auto row = g.matrix().row(i);
    for (int j = 0; j < g.n(); ++j) c[j] = f.add(c[j], f.mul(message[i], row[j]));
  }
  return FqVector(std::move(c));
}

}  // namespace rlc
