#pragma once

#include <map>
#include <string>

#include "blues/rational.hpp"
#include "blues/real.hpp"

namespace blues {

// Exact exponential-rational constant: a finite sum sum_j c_j * e^{q_j} with
// rational c_j and pairwise distinct rational q_j. These arise from definite
// integrals of e^{mu t} t^m over [0, T] and stay symbolic until a minimizer
// needs a decimal value.
class ExpConst {
 public:
  ExpConst() = default;
  explicit ExpConst(Rational c) { add(c, Rational(0)); }

  static ExpConst exp_term(Rational c, Rational q) {
    ExpConst r;
    r.add(std::move(c), std::move(q));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  // True when the value is a plain rational (single e^0 term or zero).
  bool is_rational() const;
  Rational rational_value() const;

  const std::map<Rational, Rational>& terms() const { return terms_; }

  ExpConst operator+(const ExpConst& o) const;
  ExpConst operator-(const ExpConst& o) const;
  ExpConst operator*(const ExpConst& o) const;
  ExpConst operator*(const Rational& c) const;
  ExpConst operator-() const;
  bool operator==(const ExpConst& o) const { return terms_ == o.terms_; }

  Real eval(int digits) const;
  std::string str() const;

 private:
  void add(Rational c, Rational q);
  std::map<Rational, Rational> terms_;  // exponent q -> coefficient c
};

}  // namespace blues
