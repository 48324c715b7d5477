#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "blues/rational.hpp"

namespace blues {

// Ordered list of declared control-parameter names, shared between all
// values of one computation.
using ParamSet = std::shared_ptr<const std::vector<std::string>>;

ParamSet no_params();
ParamSet make_params(std::vector<std::string> names);
bool same_params(const ParamSet& a, const ParamSet& b);

// Multivariate polynomial in the declared parameters over exact rationals.
// The coefficient scalar of the whole algebra: plain numbers are the
// 0-parameter (constant) case.
class ParamPoly {
 public:
  // Exponent vector aligned with the declared name list.
  using Multidegree = std::vector<unsigned>;

  ParamPoly() : params_(no_params()) {}
  explicit ParamPoly(ParamSet ps) : params_(std::move(ps)) {}

  static ParamPoly constant(ParamSet ps, Rational c);
  static ParamPoly variable(ParamSet ps, const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Requires is_constant().
  Rational constant_value() const;

  const ParamSet& params() const { return params_; }
  const std::map<Multidegree, Rational>& terms() const { return terms_; }

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator-() const;
  ParamPoly operator*(const Rational& c) const;
  bool operator==(const ParamPoly& o) const;

  // Binds a subset of the declared parameters; unbound names stay symbolic.
  // Binding an undeclared name throws std::invalid_argument.
  ParamPoly substitute(const std::map<std::string, Rational>& bindings) const;

  unsigned degree_in(const std::string& name) const;

  // Re-homes this polynomial onto a parameter set that contains every
  // declared name of the current one.
  ParamPoly rebased(const ParamSet& superset) const;

  std::string str() const;

 private:
  friend ParamPoly align_add(const ParamPoly&, const ParamPoly&, bool);
  std::size_t index_of(const std::string& name) const;
  void add_term(Multidegree deg, const Rational& c);

  ParamSet params_;
  std::map<Multidegree, Rational> terms_;
};

// Brings two polynomials onto a common parameter set, promoting a constant
// (0-parameter) operand when necessary. Throws std::invalid_argument for
// genuinely different declared sets.
std::pair<ParamPoly, ParamPoly> align(const ParamPoly& a, const ParamPoly& b);

}  // namespace blues
