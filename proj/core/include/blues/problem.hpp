#pragma once

#include "blues/field.hpp"

namespace blues {

// Reaction parameter a of u_t - u_xx + u u_x + u(u + a) = 0. The exact
// solution decays in t only for a > 1; the model accepts any rational a.
struct ProblemConfig {
  Rational a{2};
};

enum class MethodKind { BLUES, VIM };

// u(x,0) = e^{-x}
Field initial_field(ParamSet ps = no_params());

// u(x,t) = e^{-x} e^{-(a-1)t}
Field exact_solution(const ProblemConfig& cfg, ParamSet ps = no_params());

// N u = u_t - u_xx + u u_x + u^2 + a u, computed with the full nonlinear
// channel algebra. The k=2 parts of u u_x and u^2 cancel for single-channel
// inputs; that cancellation is left to the algebra on purpose.
Field pde_residual(const Field& u, const ProblemConfig& cfg);

// R u = u_xx - u u_x - u^2 (residual operator of the linear splitting
// L u = u_t + a u).
Field residual_op(const Field& u, const ProblemConfig& cfg);

// e^{-a t - x}: the linear problem's propagation of the initial condition.
Field blues_zeroth(const ProblemConfig& cfg, ParamSet ps = no_params());

// T[u] = blues_zeroth + G * R u with G(t) = e^{-a t} Theta(t).
Field blues_T(const Field& u, const ProblemConfig& cfg);

// T[u] = u - int_0^t N u ds (Lagrange multiplier -1).
Field vim_T(const Field& u, const ProblemConfig& cfg);

Field method_start(MethodKind method, const ProblemConfig& cfg, ParamSet ps = no_params());
Field apply_T(MethodKind method, const Field& u, const ProblemConfig& cfg);

}  // namespace blues
