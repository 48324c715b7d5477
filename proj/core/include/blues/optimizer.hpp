#pragma once

#include <map>
#include <string>
#include <vector>

#include "blues/expconst.hpp"
#include "blues/iteration.hpp"

namespace blues {

struct ErrorFunctionalConfig {
  Rational horizon{1};  // T of the residual square-error functional
};

// The residual square-error functional as an exact polynomial in the control
// parameters, with exponential-rational coefficients.
class ErrorPolynomial {
 public:
  ErrorPolynomial() : params_(no_params()) {}
  explicit ErrorPolynomial(ParamSet ps) : params_(std::move(ps)) {}
  ErrorPolynomial(ParamSet ps, std::map<ParamPoly::Multidegree, ExpConst> terms)
      : params_(std::move(ps)), terms_(std::move(terms)) {}

  const ParamSet& params() const { return params_; }
  const std::map<ParamPoly::Multidegree, ExpConst>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned degree_in(const std::string& name) const;
  bool constant_in_all_but(const std::string& name) const;

  ErrorPolynomial scaled(const Rational& c) const;

  // Dense coefficient list (degree ascending) of the univariate polynomial in
  // `name` obtained by evaluating every other parameter at `others`.
  std::vector<Real> univariate_coeffs(const std::string& name,
                                      const std::map<std::string, Real>& others,
                                      int digits) const;

  Real eval(const std::map<std::string, Real>& point, int digits) const;

 private:
  std::size_t index_of(const std::string& name) const;
  ParamSet params_;
  std::map<ParamPoly::Multidegree, ExpConst> terms_;
};

// (1/T) * int_0^T (channel-1 t-part of N u)^2 dt, exact. The residual of u
// must be single-channel; anything else signals an iterate outside the
// closed family and throws std::logic_error.
ErrorPolynomial error_functional(const Field& u, const ProblemConfig& cfg,
                                 const ErrorFunctionalConfig& efc);

struct OptimizationResult {
  int step = 0;
  // name -> (high-precision optimum, rational approximation within 1e-15)
  std::vector<std::pair<std::string, std::pair<Real, Rational>>> bindings;
  Real achieved{50};  // E at the optimum
  ErrorPolynomial error_poly;
  std::pair<Rational, Rational> box;
  bool degenerate = false;
  // 1d: all interior critical points found (ascending), for diagnostics.
  std::vector<Real> critical_points;
};

inline std::pair<Rational, Rational> default_box() {
  return {Rational(-1, 2), Rational(5, 2)};
}

// Global minimizer over the box: isolates real roots of dE/dparam by
// sign-change bisection at high precision, compares E at every critical
// point and both endpoints; ties within 1e-12 break toward the smaller
// parameter value. The quadratic case is additionally solved in closed form
// and cross-checked.
OptimizationResult minimize_1d(const ErrorPolynomial& E, const std::string& param,
                               std::pair<Rational, Rational> box = default_box(),
                               int digits = 50);

// Coordinate descent with exact per-coordinate quadratic minimization, from
// (1,1) plus 8 box corners/edge-midpoints; requires E biquadratic.
OptimizationResult minimize_2d(const ErrorPolynomial& E,
                               std::pair<std::string, std::string> names,
                               std::pair<Rational, Rational> box = default_box(),
                               int digits = 50);

struct GreedyOutcome {
  std::vector<OptimizationResult> steps;
  IterationTrace trace;      // fully numeric trace at the optimized parameters
  ExpConst picard_E;         // E of the Picard iterate at the same step count
};

// Per-step greedy optimization for Mann/Ishikawa (earlier steps frozen at
// their optima); one shared lambda minimized at the final step for HybridPK.
GreedyOutcome greedy_schedule(ProcedureSpec::Kind kind, MethodKind method,
                              const ProblemConfig& cfg, const ErrorFunctionalConfig& efc,
                              int steps,
                              std::pair<Rational, Rational> box = default_box(),
                              int digits = 50);

}  // namespace blues
