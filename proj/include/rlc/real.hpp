#pragma once

#include <mpfr.h>

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>

namespace rlc {

/// Binary precision carrying at least `digits` significant decimal digits
/// plus 16 guard bits.
mpfr_prec_t bits_for_digits(int digits) noexcept;

/// Owning MPFR value with an explicit precision. Results of binary
/// operations take the larger operand precision; nothing reads MPFR's
/// global default, so values may be used from any thread.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 256) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const mpz_class& x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  Real(const mpq_class& x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  friend Real operator+(const Real& a, const Real& b) { return apply(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return apply(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return apply(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return apply(a, b, mpfr_div); }
  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const Real& a, const Real& b) noexcept { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) noexcept { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) noexcept { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) noexcept { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

 private:
  template <class Op>
  static Real apply(const Real& a, const Real& b, Op op) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real abs(const Real& x);

}  // namespace rlc
