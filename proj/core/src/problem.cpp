#include "blues/problem.hpp"

namespace blues {

Field initial_field(ParamSet ps) {
  return Field::term(std::move(ps), 1, Rational(0), 0, Rational(1));
}

Field exact_solution(const ProblemConfig& cfg, ParamSet ps) {
  return Field::term(std::move(ps), 1, Rational(1) - cfg.a, 0, Rational(1));
}

Field pde_residual(const Field& u, const ProblemConfig& cfg) {
  return u.diff_t() - u.diff_x().diff_x() + u * u.diff_x() + u * u + u.scaled(cfg.a);
}

Field residual_op(const Field& u, const ProblemConfig&) {
  return u.diff_x().diff_x() - u * u.diff_x() - u * u;
}

Field blues_zeroth(const ProblemConfig& cfg, ParamSet ps) {
  return Field::term(std::move(ps), 1, -cfg.a, 0, Rational(1));
}

Field blues_T(const Field& u, const ProblemConfig& cfg) {
  return blues_zeroth(cfg, u.params()) + residual_op(u, cfg).convolve_green(cfg.a);
}

Field vim_T(const Field& u, const ProblemConfig& cfg) {
  return u - pde_residual(u, cfg).integrate_0t();
}

Field method_start(MethodKind method, const ProblemConfig& cfg, ParamSet ps) {
  return method == MethodKind::BLUES ? blues_zeroth(cfg, std::move(ps))
                                     : initial_field(std::move(ps));
}

Field apply_T(MethodKind method, const Field& u, const ProblemConfig& cfg) {
  return method == MethodKind::BLUES ? blues_T(u, cfg) : vim_T(u, cfg);
}

}  // namespace blues
