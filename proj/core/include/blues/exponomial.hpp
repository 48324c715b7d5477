#pragma once

#include <map>
#include <string>
#include <vector>

#include "blues/expconst.hpp"
#include "blues/parampoly.hpp"
#include "blues/real.hpp"

namespace blues {

// One e^{mu t} * (polynomial in t) term; coeffs[m] multiplies t^m.
struct ExpTerm {
  Rational rate;
  std::vector<ParamPoly> coeffs;
};

// Exact sum of e^{mu t} * polynomial(t) terms with pairwise distinct rates,
// closed under addition, multiplication, d/dt, definite integration from 0
// and convolution against e^{-a t}. Forms a commutative ring with unit.
class Exponomial {
 public:
  Exponomial() : params_(no_params()) {}
  explicit Exponomial(ParamSet ps) : params_(std::move(ps)) {}

  static Exponomial constant(ParamSet ps, Rational c);
  // coeff * e^{rate*t} * t^tpow
  static Exponomial monomial(ParamSet ps, Rational rate, unsigned tpow, ParamPoly coeff);
  static Exponomial monomial(ParamSet ps, Rational rate, unsigned tpow, Rational coeff);

  bool is_zero() const { return terms_.empty(); }
  const ParamSet& params() const { return params_; }
  const std::vector<ExpTerm>& terms() const { return terms_; }

  Exponomial operator+(const Exponomial& o) const;
  Exponomial operator-(const Exponomial& o) const;
  Exponomial operator*(const Exponomial& o) const;
  Exponomial operator-() const;
  Exponomial scaled(const ParamPoly& c) const;
  Exponomial scaled(const Rational& c) const;
  bool operator==(const Exponomial& o) const;

  Exponomial diff_t() const;
  // Exact antiderivative over [0, t]; evaluates to zero at t = 0.
  Exponomial integrate_0t() const;
  // Multiplies by e^{delta * t}.
  Exponomial rate_shift(const Rational& delta) const;
  // int_0^t e^{-a(t-s)} f(s) ds, exact (resonant rates handled by the
  // rate-0 polynomial branch of integrate_0t).
  Exponomial convolve_green(const Rational& a) const;

  Exponomial substitute(const std::map<std::string, Rational>& bindings) const;
  unsigned degree_in(const std::string& name) const;
  Exponomial with_params(const ParamSet& superset) const;

  // Exact integral over [0, T], one ExpConst per parameter monomial.
  std::map<ParamPoly::Multidegree, ExpConst> definite_integral(const Rational& T) const;

  // All parameters must be numeric (constant).
  Real eval(const Real& t, int digits) const;

  std::string str() const;

 private:
  void add_term(const ExpTerm& term);
  void canonicalize();
  ParamSet params_;
  std::vector<ExpTerm> terms_;  // sorted by descending rate
};

// Renders a t-polynomial with sign folding, e.g. "1 - t + 1/2*t^2".
std::string poly_to_string(const std::vector<ParamPoly>& coeffs);

}  // namespace blues
