#include "blues/iteration.hpp"

#include <algorithm>
#include <stdexcept>

namespace blues {

ProcedureSpec ProcedureSpec::picard() { return {}; }

ProcedureSpec ProcedureSpec::mann(std::vector<ParamValue> alphas) {
  ProcedureSpec s;
  s.kind = Kind::Mann;
  s.alphas = std::move(alphas);
  return s;
}

ProcedureSpec ProcedureSpec::krasnoselskii(ParamValue alpha) {
  ProcedureSpec s;
  s.kind = Kind::Krasnoselskii;
  s.alphas = {std::move(alpha)};
  return s;
}

ProcedureSpec ProcedureSpec::ishikawa(std::vector<ParamValue> alphas, std::vector<ParamValue> betas) {
  ProcedureSpec s;
  s.kind = Kind::Ishikawa;
  s.alphas = std::move(alphas);
  s.betas = std::move(betas);
  return s;
}

ProcedureSpec ProcedureSpec::hybrid_pk(ParamValue lambda) {
  ProcedureSpec s;
  s.kind = Kind::HybridPK;
  s.lambda = std::move(lambda);
  return s;
}

Field picard_step(const Operator& T, const Field& u) { return T(u); }

Field mann_step(const Operator& T, const Field& u, const ParamPoly& alpha) {
  ParamPoly one_minus = ParamPoly::constant(alpha.params(), Rational(1)) - alpha;
  return u.scaled(one_minus) + T(u).scaled(alpha);
}

std::pair<Field, Field> ishikawa_step(const Operator& T, const Field& u,
                                      const ParamPoly& alpha, const ParamPoly& beta) {
  Field v = mann_step(T, u, beta);
  ParamPoly one_minus = ParamPoly::constant(alpha.params(), Rational(1)) - alpha;
  Field next = u.scaled(one_minus) + T(v).scaled(alpha);
  return {std::move(v), std::move(next)};
}

std::pair<Field, Field> hybrid_pk_step(const Operator& T, const Field& u,
                                       const ParamPoly& lambda) {
  Field v = mann_step(T, u, lambda);
  Field next = T(v);
  return {std::move(v), std::move(next)};
}

namespace {

void collect_symbols(const std::vector<ParamValue>& values, std::vector<std::string>& names) {
  for (const auto& v : values)
    if (const auto* s = std::get_if<std::string>(&v)) {
      if (std::find(names.begin(), names.end(), *s) != names.end())
        throw std::invalid_argument("duplicate symbolic parameter: " + *s);
      names.push_back(*s);
    }
}

ParamPoly as_poly(const ParamSet& ps, const ParamValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return ParamPoly::constant(ps, *r);
  return ParamPoly::variable(ps, std::get<std::string>(v));
}

const ParamValue& at_step(const std::vector<ParamValue>& values, int step,
                          const char* what) {
  if (step >= static_cast<int>(values.size()))
    throw std::invalid_argument(std::string("insufficient ") + what + " parameters");
  return values[static_cast<std::size_t>(step)];
}

}  // namespace

IterationTrace run(const ProcedureSpec& spec, MethodKind method,
                   const ProblemConfig& cfg, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");

  std::vector<std::string> names;
  collect_symbols(spec.alphas, names);
  collect_symbols(spec.betas, names);
  if (spec.lambda) collect_symbols({*spec.lambda}, names);
  ParamSet ps = names.empty() ? no_params() : make_params(std::move(names));

  Operator T = [&](const Field& u) { return apply_T(method, u, cfg); };

  IterationTrace trace;
  trace.spec = spec;
  trace.method = method;
  trace.iterates.push_back(method_start(method, cfg, ps));

  for (int n = 0; n < steps; ++n) {
    const Field& u = trace.iterates.back();
    switch (spec.kind) {
      case ProcedureSpec::Kind::Picard:
        trace.iterates.push_back(picard_step(T, u));
        break;
      case ProcedureSpec::Kind::Mann:
        trace.iterates.push_back(mann_step(T, u, as_poly(ps, at_step(spec.alphas, n, "alpha"))));
        break;
      case ProcedureSpec::Kind::Krasnoselskii:
        trace.iterates.push_back(mann_step(T, u, as_poly(ps, at_step(spec.alphas, 0, "alpha"))));
        break;
      case ProcedureSpec::Kind::Ishikawa: {
        auto [v, next] = ishikawa_step(T, u, as_poly(ps, at_step(spec.alphas, n, "alpha")),
                                       as_poly(ps, at_step(spec.betas, n, "beta")));
        trace.auxiliary.push_back(std::move(v));
        trace.iterates.push_back(std::move(next));
        break;
      }
      case ProcedureSpec::Kind::HybridPK: {
        if (!spec.lambda) throw std::invalid_argument("hybrid-pk requires lambda");
        auto [v, next] = hybrid_pk_step(T, u, as_poly(ps, *spec.lambda));
        trace.auxiliary.push_back(std::move(v));
        trace.iterates.push_back(std::move(next));
        break;
      }
    }
  }
  return trace;
}

}  // namespace blues
