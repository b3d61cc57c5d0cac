#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rlc/field.hpp"

namespace rlc {

/// A vector in F_q^n. The Hamming weight is computed on first use and cached.
class FqVector {
 public:
  FqVector() = default;
  explicit FqVector(std::size_t n) : v_(n, 0) {}
  explicit FqVector(std::vector<Elem> v) : v_(std::move(v)) {}
  FqVector(std::initializer_list<Elem> v) : v_(v) {}

  std::size_t size() const noexcept { return v_.size(); }
  Elem operator[](std::size_t i) const noexcept { return v_[i]; }
  void set(std::size_t i, Elem x) {
    v_[i] = x;
    weight_.reset();
  }
  std::span<const Elem> entries() const noexcept { return v_; }

  int weight() const {
    if (!weight_) {
      int w = 0;
      for (Elem x : v_) w += (x != 0);
      weight_ = w;
    }
    return *weight_;
  }

  friend bool operator==(const FqVector& a, const FqVector& b) noexcept { return a.v_ == b.v_; }

 private:
  std::vector<Elem> v_;
  mutable std::optional<int> weight_;
};

/// Dense row-major matrix over F_q.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Elem& operator()(int r, int c) noexcept { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem operator()(int r, int c) const noexcept { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<Elem> row(int r) noexcept { return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Elem> row(int r) const noexcept {
    return {a_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  void swap_rows(int a, int b) noexcept;
  // Keeps the first `rows` rows.
  void truncate(int rows) {
    rows_ = rows;
    a_.resize(static_cast<std::size_t>(rows) * cols_);
  }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

/// Row-major matrix over F_2, each row packed into 64-bit words (bit c of the
/// row is column c). Bits past the last column are always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), a_(static_cast<std::size_t>(rows) * words_, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int words() const noexcept { return words_; }
  std::span<std::uint64_t> row(int r) noexcept {
    return {a_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }
  std::span<const std::uint64_t> row(int r) const noexcept {
    return {a_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }
  bool get(int r, int c) const noexcept { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(int r, int c, bool v) noexcept {
    auto& w = row(r)[c >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  void swap_rows(int a, int b) noexcept;
  void truncate(int rows) {
    rows_ = rows;
    a_.resize(static_cast<std::size_t>(rows) * words_);
  }
  // Mask of valid bits in the last word.
  std::uint64_t tail_mask() const noexcept {
    return (cols_ % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (cols_ % 64)) - 1);
  }

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> a_;
};

inline int popcount(std::span<const std::uint64_t> w) noexcept {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

BitMatrix to_bits(const FqMatrix& m);
FqMatrix from_bits(const BitMatrix& m);

/// Row-reduces `m` in place to reduced echelon form, choosing pivots by
/// scanning columns in `column_order` (all columns when empty). Nonzero rows
/// come first, each with a 1 in its pivot column and zeros in every other
/// pivot column. Returns the pivot columns in row order; their count is the
/// rank.
std::vector<int> reduce_rows(const Field& f, FqMatrix& m, std::span<const int> column_order = {});
std::vector<int> reduce_rows(BitMatrix& m, std::span<const int> column_order = {});

/// k generator rows X_1..X_k in F_q^n. A value type; the rank is computed
/// lazily by Gaussian elimination and cached.
class GeneratorSet {
 public:
  GeneratorSet(Field field, FqMatrix rows) : field_(std::move(field)), rows_(std::move(rows)) {}
  GeneratorSet(Field field, const std::vector<FqVector>& rows);

  const Field& field() const noexcept { return field_; }
  int k() const noexcept { return rows_.rows(); }
  int n() const noexcept { return rows_.cols(); }
  const FqMatrix& matrix() const noexcept { return rows_; }
  FqVector row(int i) const;

  int rank() const;
  bool is_full_rank() const { return rank() == k(); }

 private:
  Field field_;
  FqMatrix rows_;
  mutable std::optional<int> rank_;
};

int rank(const GeneratorSet& g);

/// Codeword sum_i a_i X_i.
FqVector encode(const GeneratorSet& g, std::span<const Elem> message);

}  // namespace rlc
