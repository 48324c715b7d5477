#include "blues/optimizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace blues {

std::size_t ErrorPolynomial::index_of(const std::string& name) const {
  auto it = std::find(params_->begin(), params_->end(), name);
  if (it == params_->end())
    throw std::invalid_argument("undeclared parameter: " + name);
  return static_cast<std::size_t>(it - params_->begin());
}

unsigned ErrorPolynomial::degree_in(const std::string& name) const {
  std::size_t idx = index_of(name);
  unsigned deg = 0;
  for (const auto& [d, c] : terms_) deg = std::max(deg, d[idx]);
  return deg;
}

bool ErrorPolynomial::constant_in_all_but(const std::string& name) const {
  std::size_t idx = index_of(name);
  for (const auto& [d, c] : terms_)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (j != idx && d[j] > 0) return false;
  return true;
}

ErrorPolynomial ErrorPolynomial::scaled(const Rational& c) const {
  std::map<ParamPoly::Multidegree, ExpConst> out;
  for (const auto& [d, v] : terms_) {
    ExpConst s = v * c;
    if (!s.is_zero()) out.emplace(d, std::move(s));
  }
  return ErrorPolynomial(params_, std::move(out));
}

std::vector<Real> ErrorPolynomial::univariate_coeffs(const std::string& name,
                                                     const std::map<std::string, Real>& others,
                                                     int digits) const {
  std::size_t idx = index_of(name);
  std::vector<Real> coeffs(degree_in(name) + 1, Real(digits));
  for (const auto& [d, c] : terms_) {
    Real v = c.eval(digits);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j == idx || d[j] == 0) continue;
      auto it = others.find((*params_)[j]);
      if (it == others.end())
        throw std::invalid_argument("missing value for parameter " + (*params_)[j]);
      v *= pow_ui(it->second, d[j]);
    }
    coeffs[d[idx]] += v;
  }
  return coeffs;
}

Real ErrorPolynomial::eval(const std::map<std::string, Real>& point, int digits) const {
  Real sum(digits);
  for (const auto& [d, c] : terms_) {
    Real v = c.eval(digits);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j] == 0) continue;
      auto it = point.find((*params_)[j]);
      if (it == point.end())
        throw std::invalid_argument("missing value for parameter " + (*params_)[j]);
      v *= pow_ui(it->second, d[j]);
    }
    sum += v;
  }
  return sum;
}

ErrorPolynomial error_functional(const Field& u, const ProblemConfig& cfg,
                                 const ErrorFunctionalConfig& efc) {
  if (efc.horizon <= 0) throw std::invalid_argument("horizon T must be > 0");
  Field r = pde_residual(u, cfg);
  for (const auto& [k, e] : r.channels())
    if (k != 1)
      throw std::logic_error("residual has channel " + std::to_string(k) +
                             "; iterate left the closed single-channel family");
  Exponomial tpart = r.channel(1);
  Exponomial squared = tpart * tpart;
  auto integral = squared.definite_integral(efc.horizon);
  return ErrorPolynomial(squared.params(), std::move(integral))
      .scaled(Rational(1) / efc.horizon);
}

namespace {

Real horner(const std::vector<Real>& coeffs, const Real& x, int digits) {
  Real v(digits);
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

// Degree with numerically-zero leading coefficients stripped.
std::size_t effective_degree(const std::vector<Real>& coeffs, int digits) {
  // Relative threshold against the largest coefficient magnitude.
  Real maxmag(digits);
  for (const auto& c : coeffs) {
    Real m = abs(c);
    if (m > maxmag) maxmag = m;
  }
  if (maxmag.is_zero()) return 0;
  // Relative cutoff 10^-(digits-10).
  Real thresh = maxmag;
  for (int i = 0; i < std::max(1, digits - 10); ++i)
    thresh = thresh / Real(10L, digits);
  std::size_t d = coeffs.size() - 1;
  while (d > 0 && abs(coeffs[d]) < thresh) --d;
  return d;
}

std::vector<Real> derivative(const std::vector<Real>& coeffs, int digits) {
  std::vector<Real> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    d.push_back(coeffs[i] * Real(static_cast<long>(i), digits));
  if (d.empty()) d.push_back(Real(digits));
  return d;
}

// All roots of `poly` inside [lo, hi] found by dense sampling plus bisection.
std::vector<Real> isolate_roots(const std::vector<Real>& poly, const Real& lo,
                                const Real& hi, std::size_t degree, int digits) {
  std::vector<Real> roots;
  if (degree == 0) return roots;
  const std::size_t n = 64 * degree;
  Real width = hi - lo;
  Real step = width / Real(static_cast<long>(n), digits);
  Real eps = width;
  for (int i = 0; i < 4 * digits; ++i) eps = eps / Real(2L, digits);

  Real x0 = lo;
  Real f0 = horner(poly, x0, digits);
  for (std::size_t i = 1; i <= n; ++i) {
    Real x1 = lo + step * Real(static_cast<long>(i), digits);
    Real f1 = horner(poly, x1, digits);
    if (f0.is_zero()) {
      roots.push_back(x0);
    } else if (f0.sign() * f1.sign() < 0) {
      Real a = x0, b = x1, fa = f0;
      while (b - a > eps) {
        Real mid = (a + b) / Real(2L, digits);
        if (mid <= a || mid >= b) break;  // hit the working-precision floor
        Real fm = horner(poly, mid, digits);
        if (fm.is_zero()) { a = mid; b = mid; break; }
        if (fa.sign() * fm.sign() < 0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      roots.push_back((a + b) / Real(2L, digits));
    }
    x0 = x1;
    f0 = f1;
  }
  Real fend = horner(poly, hi, digits);
  if (fend.is_zero()) roots.push_back(hi);
  return roots;
}

Rational bind_rational(const Real& v) {
  return rational_approx(v, Rational(1, 1000000000000000000L) / Rational(100));  // 1e-20
}

}  // namespace

OptimizationResult minimize_1d(const ErrorPolynomial& E, const std::string& param,
                               std::pair<Rational, Rational> box, int digits) {
  if (box.first >= box.second) throw std::invalid_argument("empty search box");
  if (!E.constant_in_all_but(param))
    throw std::invalid_argument("error polynomial is not univariate in " + param);

  OptimizationResult result;
  result.error_poly = E;
  result.box = box;

  std::vector<Real> coeffs = E.univariate_coeffs(param, {}, digits);
  std::size_t degree = effective_degree(coeffs, digits);
  Real lo(box.first, digits), hi(box.second, digits);

  if (degree == 0) {
    result.degenerate = true;
    result.bindings.emplace_back(param, std::make_pair(lo, box.first));
    result.achieved = coeffs.empty() ? Real(digits) : coeffs[0];
    return result;
  }

  std::vector<Real> dcoeffs = derivative(coeffs, digits);
  std::size_t ddeg = effective_degree(dcoeffs, digits);
  std::vector<Real> roots = isolate_roots(dcoeffs, lo, hi, ddeg, digits);
  result.critical_points = roots;

  std::vector<Real> candidates = roots;
  candidates.push_back(lo);
  candidates.push_back(hi);

  // Tie tolerance 1e-12.
  Real tie = Real(1L, digits);
  for (int i = 0; i < 12; ++i) tie = tie / Real(10L, digits);

  Real best_x = candidates.front();
  Real best_E = horner(coeffs, best_x, digits);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Real v = horner(coeffs, candidates[i], digits);
    if (v < best_E - tie || (abs(v - best_E) <= tie && candidates[i] < best_x)) {
      best_x = candidates[i];
      best_E = v;
    }
  }

  if (degree == 2) {
    // Closed-form cross-check: the vertex of the parabola.
    Real vertex = -coeffs[1] / (coeffs[2] * Real(2L, digits));
    if (vertex >= lo && vertex <= hi && coeffs[2].sign() > 0) {
      if (abs(vertex - best_x) > tie)
        throw std::logic_error("quadratic closed form disagrees with root isolation");
      best_x = vertex;  // the algebraically cleaner value
      best_E = horner(coeffs, best_x, digits);
    }
  }

  result.bindings.emplace_back(param, std::make_pair(best_x, bind_rational(best_x)));
  result.achieved = best_E;
  return result;
}

OptimizationResult minimize_2d(const ErrorPolynomial& E,
                               std::pair<std::string, std::string> names,
                               std::pair<Rational, Rational> box, int digits) {
  if (box.first >= box.second) throw std::invalid_argument("empty search box");
  if (E.degree_in(names.first) > 2 || E.degree_in(names.second) > 2)
    throw std::invalid_argument("error polynomial is not biquadratic");

  const Real lo(box.first, digits), hi(box.second, digits);
  const Real mid = (lo + hi) / Real(2L, digits);
  const Real one(1L, digits);

  Real sweep_tol = Real(1L, digits);
  for (int i = 0; i < 13; ++i) sweep_tol = sweep_tol / Real(10L, digits);

  auto coordinate_min = [&](const std::string& var, const std::string& other,
                            const Real& other_value, const Real& current,
                            bool& degenerate) -> Real {
    auto c = E.univariate_coeffs(var, {{other, other_value}}, digits);
    if (effective_degree(c, digits) < 2 || c.back().sign() <= 0) {
      degenerate = true;
      return current;
    }
    Real x = -c[1] / (c[2] * Real(2L, digits));
    if (x < lo) x = lo;
    if (x > hi) x = hi;
    return x;
  };

  struct Candidate {
    Real x, y, value;
    bool degenerate;
  };
  std::vector<Candidate> finished;

  std::vector<std::pair<Real, Real>> starts = {
      {one, one}, {lo, lo}, {lo, hi}, {hi, lo}, {hi, hi},
      {mid, lo},  {mid, hi}, {lo, mid}, {hi, mid}};

  for (const auto& [sx, sy] : starts) {
    Real x = sx, y = sy;
    bool degenerate = false;
    bool converged = false;
    for (int sweep = 0; sweep < 200; ++sweep) {
      Real nx = coordinate_min(names.first, names.second, y, x, degenerate);
      Real ny = coordinate_min(names.second, names.first, nx, y, degenerate);
      if (abs(nx - x) < sweep_tol && abs(ny - y) < sweep_tol) {
        x = nx;
        y = ny;
        converged = true;
        break;
      }
      x = nx;
      y = ny;
    }
    if (!converged) continue;
    Real v = E.eval({{names.first, x}, {names.second, y}}, digits);
    finished.push_back({x, y, v, degenerate});
  }

  if (finished.empty())
    throw std::runtime_error("coordinate descent failed to converge from all starts");

  const Candidate* best = &finished.front();
  for (const auto& c : finished)
    if (c.value < best->value) best = &c;

  // Stationarity check: both partial derivatives small at the result.
  if (!best->degenerate) {
    Real grad_tol = Real(1L, digits);
    for (int i = 0; i < 10; ++i) grad_tol = grad_tol / Real(10L, digits);
    auto ca = E.univariate_coeffs(names.first, {{names.second, best->y}}, digits);
    auto cb = E.univariate_coeffs(names.second, {{names.first, best->x}}, digits);
    Real da = horner(derivative(ca, digits), best->x, digits);
    Real db = horner(derivative(cb, digits), best->y, digits);
    if (abs(da) > grad_tol || abs(db) > grad_tol)
      throw std::logic_error("coordinate descent result is not stationary");
  }

  OptimizationResult result;
  result.error_poly = E;
  result.box = box;
  result.degenerate = best->degenerate;
  result.bindings.emplace_back(names.first, std::make_pair(best->x, bind_rational(best->x)));
  result.bindings.emplace_back(names.second, std::make_pair(best->y, bind_rational(best->y)));
  result.achieved = best->value;
  return result;
}

namespace {

ExpConst constant_value_of(const ErrorPolynomial& E) {
  ExpConst v;
  for (const auto& [d, c] : E.terms()) {
    for (unsigned e : d)
      if (e > 0) throw std::logic_error("expected a constant error polynomial");
    v = v + c;
  }
  return v;
}

}  // namespace

GreedyOutcome greedy_schedule(ProcedureSpec::Kind kind, MethodKind method,
                              const ProblemConfig& cfg, const ErrorFunctionalConfig& efc,
                              int steps, std::pair<Rational, Rational> box, int digits) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");

  GreedyOutcome outcome;
  outcome.picard_E = constant_value_of(error_functional(
      run(ProcedureSpec::picard(), method, cfg, steps).iterates.back(), cfg, efc));

  Operator T = [&](const Field& u) { return apply_T(method, u, cfg); };

  switch (kind) {
    case ProcedureSpec::Kind::Picard:
      throw std::invalid_argument("picard has no control parameters to optimize");

    case ProcedureSpec::Kind::Mann:
    case ProcedureSpec::Kind::Krasnoselskii: {
      if (kind == ProcedureSpec::Kind::Krasnoselskii && steps != 1)
        throw std::invalid_argument(
            "krasnoselskii shares one alpha across steps; optimize via steps=1 "
            "or use mann");
      std::vector<std::string> names;
      for (int k = 1; k <= steps; ++k) names.push_back("alpha" + std::to_string(k));
      ParamSet ps = make_params(names);
      Field u = method_start(method, cfg, ps);
      std::vector<ParamValue> bound;
      for (int k = 0; k < steps; ++k) {
        ParamPoly alpha = ParamPoly::variable(ps, names[static_cast<std::size_t>(k)]);
        Field u_sym = mann_step(T, u, alpha);
        ErrorPolynomial E = error_functional(u_sym, cfg, efc);
        OptimizationResult res =
            minimize_1d(E, names[static_cast<std::size_t>(k)], box, digits);
        res.step = k + 1;
        const Rational& value = res.bindings.front().second.second;
        bound.emplace_back(value);
        u = u_sym.substitute({{names[static_cast<std::size_t>(k)], value}});
        outcome.steps.push_back(std::move(res));
      }
      outcome.trace = run(ProcedureSpec::mann(bound), method, cfg, steps);
      break;
    }

    case ProcedureSpec::Kind::Ishikawa: {
      std::vector<std::string> names;
      for (int k = 1; k <= steps; ++k) names.push_back("alpha" + std::to_string(k));
      for (int k = 1; k <= steps; ++k) names.push_back("beta" + std::to_string(k));
      ParamSet ps = make_params(names);
      Field u = method_start(method, cfg, ps);
      std::vector<ParamValue> alphas, betas;
      for (int k = 0; k < steps; ++k) {
        std::string an = "alpha" + std::to_string(k + 1);
        std::string bn = "beta" + std::to_string(k + 1);
        auto [v_sym, u_sym] = ishikawa_step(T, u, ParamPoly::variable(ps, an),
                                            ParamPoly::variable(ps, bn));
        ErrorPolynomial E = error_functional(u_sym, cfg, efc);
        OptimizationResult res = minimize_2d(E, {an, bn}, box, digits);
        res.step = k + 1;
        Rational av = res.bindings[0].second.second;
        Rational bv = res.bindings[1].second.second;
        alphas.emplace_back(av);
        betas.emplace_back(bv);
        u = u_sym.substitute({{an, av}, {bn, bv}});
        outcome.steps.push_back(std::move(res));
      }
      outcome.trace = run(ProcedureSpec::ishikawa(alphas, betas), method, cfg, steps);
      break;
    }

    case ProcedureSpec::Kind::HybridPK: {
      ParamSet ps = make_params({"lambda"});
      ParamPoly lambda = ParamPoly::variable(ps, "lambda");
      Field u = method_start(method, cfg, ps);
      for (int k = 0; k < steps; ++k) u = hybrid_pk_step(T, u, lambda).second;
      ErrorPolynomial E = error_functional(u, cfg, efc);
      OptimizationResult res = minimize_1d(E, "lambda", box, digits);
      res.step = steps;
      Rational value = res.bindings.front().second.second;
      outcome.steps.push_back(std::move(res));
      outcome.trace = run(ProcedureSpec::hybrid_pk(ParamValue(value)), method, cfg, steps);
      break;
    }
  }

  // Optimized E never exceeds the Picard-point E (the Picard point lies in
  // the default box; with a custom box this still must hold per step).
  for (const auto& res : outcome.steps) {
    Rational picard_point = kind == ProcedureSpec::Kind::HybridPK ? Rational(0) : Rational(1);
    if (picard_point >= res.box.first && picard_point <= res.box.second) {
      std::map<std::string, Real> point;
      for (const auto& [name, v] : res.bindings) {
        bool is_beta = name.rfind("beta", 0) == 0;
        Rational pp = kind == ProcedureSpec::Kind::HybridPK ? Rational(0)
                      : is_beta                             ? Rational(0)
                                                            : Rational(1);
        point.emplace(name, Real(pp, digits));
      }
      Real at_picard = res.error_poly.eval(point, digits);
      if (res.achieved > at_picard)
        throw std::logic_error("optimized E exceeds the Picard-point E");
    }
  }

  return outcome;
}

}  // namespace blues
