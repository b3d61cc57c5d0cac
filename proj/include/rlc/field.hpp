#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace rlc {

using Elem = std::uint16_t;

/// The finite field F_q, q = p^e <= 2^16.
///
/// Elements are the integers 0..q-1; the base-p digits of an element are the
/// coefficients of its polynomial representative (least significant digit is
/// the constant term). 0 is the additive and 1 the multiplicative identity.
///
/// The modulus is a monic primitive polynomial of degree e, so x is a
/// generator of the multiplicative group and the log/antilog tables are
/// indexed by powers of x. For p = 2 the modulus comes from a built-in list
/// of standard primitive polynomials; for odd p (and any (p,e) missing from
/// the list) it is the lexicographically smallest monic primitive
/// polynomial, comparing coefficient vectors from the constant term upwards.
///
/// Full addition and multiplication tables are kept for q <= 256. Larger
/// fields multiply through the log tables and add digit-wise.
///
/// Field is a cheap-to-copy handle to immutable tables.
class Field {
 public:
  static Field make(unsigned p, unsigned e);
  // Factors q as p^e; throws ParameterError if q is not a prime power.
  static Field of_order(unsigned q);

  unsigned q() const noexcept { return t_->q; }
  unsigned characteristic() const noexcept { return t_->p; }
  unsigned degree() const noexcept { return t_->e; }
  bool has_full_tables() const noexcept { return !t_->add.empty(); }

  // Coefficients of the modulus, constant term first, leading 1 included.
  std::span<const unsigned> modulus() const noexcept { return t_->modulus; }

  Elem add(Elem a, Elem b) const noexcept {
    if (t_->p == 2) return static_cast<Elem>(a ^ b);
    if (!t_->add.empty()) return t_->add[static_cast<std::size_t>(a) * t_->q + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept { return t_->neg[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, t_->neg[b]); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (!t_->mul.empty()) return t_->mul[static_cast<std::size_t>(a) * t_->q + b];
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  // Precondition: a != 0.
  Elem inv(Elem a) const noexcept { return t_->inv[a]; }
  Elem div(Elem a, Elem b) const noexcept { return mul(a, t_->inv[b]); }

  // Row a of the tables (q <= 256 only).
  std::span<const Elem> add_row(Elem a) const noexcept {
    return {t_->add.data() + static_cast<std::size_t>(a) * t_->q, t_->q};
  }
  std::span<const Elem> mul_row(Elem a) const noexcept {
    return {t_->mul.data() + static_cast<std::size_t>(a) * t_->q, t_->q};
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || (a.q() == b.q() && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    unsigned q = 0, p = 0, e = 0;
    std::vector<unsigned> modulus;
    std::vector<Elem> add, mul;  // q*q, only for q <= 256
    std::vector<Elem> neg, inv;
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Elem> exp;           // length 2(q-1)
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  Elem add_digits(Elem a, Elem b) const noexcept;

  std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned p) noexcept;

}  // namespace rlc
