#include "blues/real.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace blues {

mpfr_prec_t Real::bits_for(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1 digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 24;
}

Real::Real(int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Rational& q, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(long v, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for(digits));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real Real::from_double(double v, int digits) {
  Real r(digits);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real::Real(const Real& o) : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : digits_(o.digits_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
    digits_ = o.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  if (this != &o) {
    mpfr_swap(v_, o.v_);
    digits_ = o.digits_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {
int wider(const Real& a, const Real& b) { return std::max(a.digits(), b.digits()); }
}  // namespace

Real Real::operator+(const Real& o) const {
  Real r(wider(*this, o));
  mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(wider(*this, o));
  mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(wider(*this, o));
  mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  Real r(wider(*this, o));
  mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(digits_);
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int sig_digits) const {
  if (sig_digits <= 0) sig_digits = digits_;
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", sig_digits, v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real exp(const Real& x) {
  Real r(x.digits_);
  mpfr_exp(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real log10(const Real& x) {
  Real r(x.digits_);
  mpfr_log10(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real abs(const Real& x) {
  Real r(x.digits_);
  mpfr_abs(r.v_, x.v_, MPFR_RNDN);
  return r;
}

Real pow_ui(const Real& x, unsigned long e) {
  Real r(x.digits_);
  mpfr_pow_ui(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

Rational rational_approx(const Real& x, const Rational& tol) {
  // The mpfr value is itself a rational p*2^e; recover it exactly, then walk
  // the continued-fraction convergents until one is within tol.
  if (x.is_zero()) return Rational(0);
  mpz_class mant;
  mpfr_exp_t e2 = mpfr_get_z_2exp(mant.get_mpz_t(), x.v_);
  Rational exact(mant);
  if (e2 >= 0) {
    mpz_class two27;
    mpz_ui_pow_ui(two27.get_mpz_t(), 2, static_cast<unsigned long>(e2));
    exact *= Rational(two27);
  } else {
    mpz_class two27;
    mpz_ui_pow_ui(two27.get_mpz_t(), 2, static_cast<unsigned long>(-e2));
    exact /= Rational(two27);
  }

  // Continued fraction on |exact|.
  bool neg = exact < 0;
  Rational y = neg ? Rational(-exact) : exact;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational frac = y;
  for (int iter = 0; iter < 200; ++iter) {
    mpz_class a = frac.get_num() / frac.get_den();  // floor (frac >= 0)
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    Rational conv(p2, q2);
    conv.canonicalize();
    if (abs(conv - y) < tol) return neg ? Rational(-conv) : conv;
    Rational rem = frac - Rational(a);
    if (rem == 0) return neg ? Rational(-conv) : conv;
    frac = Rational(1) / rem;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return neg ? Rational(-exact) : exact;
}

}  // namespace blues
