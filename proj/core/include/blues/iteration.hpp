#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blues/problem.hpp"

namespace blues {

// A control parameter entry: a number, or a named symbol to be carried
// through the algebra and optimized later.
using ParamValue = std::variant<Rational, std::string>;

struct ProcedureSpec {
  enum class Kind { Picard, Mann, Krasnoselskii, Ishikawa, HybridPK };

  Kind kind = Kind::Picard;
  std::vector<ParamValue> alphas;  // Mann/Ishikawa: per step; Krasnoselskii: single
  std::vector<ParamValue> betas;   // Ishikawa: per step
  std::optional<ParamValue> lambda;  // HybridPK: single shared value

  static ProcedureSpec picard();
  static ProcedureSpec mann(std::vector<ParamValue> alphas);
  static ProcedureSpec krasnoselskii(ParamValue alpha);
  static ProcedureSpec ishikawa(std::vector<ParamValue> alphas, std::vector<ParamValue> betas);
  static ProcedureSpec hybrid_pk(ParamValue lambda);
};

struct IterationTrace {
  std::vector<Field> iterates;   // u_0 .. u_n
  std::vector<Field> auxiliary;  // v_0 .. v_{n-1} for Ishikawa/HybridPK
  ProcedureSpec spec;
  MethodKind method = MethodKind::VIM;
};

using Operator = std::function<Field(const Field&)>;

Field picard_step(const Operator& T, const Field& u);
Field mann_step(const Operator& T, const Field& u, const ParamPoly& alpha);
// Returns (v_n, u_{n+1}).
std::pair<Field, Field> ishikawa_step(const Operator& T, const Field& u,
                                      const ParamPoly& alpha, const ParamPoly& beta);
std::pair<Field, Field> hybrid_pk_step(const Operator& T, const Field& u,
                                       const ParamPoly& lambda);

// Runs `steps` iterations of the procedure for the given method. Symbolic
// parameters must have pairwise distinct names; the trace's parameter set is
// assembled from them. Throws std::invalid_argument when the spec does not
// provide enough per-step parameters.
IterationTrace run(const ProcedureSpec& spec, MethodKind method,
                   const ProblemConfig& cfg, int steps);

}  // namespace blues
