#pragma once

#include <mpfr.h>

#include <string>

#include "blues/rational.hpp"

namespace blues {

// Thin value wrapper around mpfr_t. Precision is fixed per instance and
// expressed in significant decimal digits; binary operations use the wider
// precision of the two operands.
class Real {
 public:
  explicit Real(int digits = 50);
  Real(const Rational& q, int digits = 50);
  Real(long v, int digits = 50);
  static Real from_double(double v, int digits = 50);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  int digits() const { return digits_; }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;

  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }
  bool operator==(const Real& o) const { return cmp(o) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Round-to-nearest decimal string with the given significant digits
  // (defaults to the instance precision). Deterministic.
  std::string str(int sig_digits = 0) const;

  friend Real exp(const Real& x);
  friend Real log10(const Real& x);
  friend Real abs(const Real& x);
  friend Real pow_ui(const Real& x, unsigned long e);
  friend Rational rational_approx(const Real& x, const Rational& tol);

 private:
  static mpfr_prec_t bits_for(int digits);
  mpfr_t v_;
  int digits_;
};

Real exp(const Real& x);
Real log10(const Real& x);
Real abs(const Real& x);
Real pow_ui(const Real& x, unsigned long e);

// Nearest-fraction approximation via continued fractions: the returned value
// differs from x by less than tol.
Rational rational_approx(const Real& x, const Rational& tol);

}  // namespace blues
