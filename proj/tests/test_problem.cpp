#include <doctest.h>

#include "blues/problem.hpp"

using namespace blues;

namespace {

// Independently rebuilt closed forms of the plain re-substitution iterates:
// VIM:   u_n = e^{-x} sum_{k<=n} ((1-a) t)^k / k!
// BLUES: u_n = e^{-x} e^{-a t} sum_{k<=n} t^k / k!
Field vim_closed_form(int n, const Rational& a) {
  ParamSet ps = no_params();
  Field u(ps);
  Rational c(1), factor = Rational(1) - a;
  for (int k = 0; k <= n; ++k) {
    u = u + Field::term(ps, 1, Rational(0), static_cast<unsigned>(k), c);
    c *= factor;
    c /= k + 1;
  }
  return u;
}

Field blues_closed_form(int n, const Rational& a) {
  ParamSet ps = no_params();
  Field u(ps);
  Rational c(1);
  for (int k = 0; k <= n; ++k) {
    u = u + Field::term(ps, 1, -a, static_cast<unsigned>(k), c);
    c /= k + 1;
  }
  return u;
}

}  // namespace

TEST_CASE("initial condition and exact solution") {
  CHECK(initial_field().str() == "exp(-x)");
  ProblemConfig cfg{Rational(2)};
  CHECK(exact_solution(cfg).str() == "exp(-x)*exp(-t)");
  CHECK(exact_solution(cfg).at_t0() == initial_field());
}

TEST_CASE("exact solution annihilates the equation structurally") {
  for (const Rational& a : {Rational(2), Rational(3), Rational(7, 2)}) {
    ProblemConfig cfg{a};
    CHECK(pde_residual(exact_solution(cfg), cfg).is_zero());
  }
}

TEST_CASE("zeroth iterates") {
  ProblemConfig cfg{Rational(2)};
  CHECK(method_start(MethodKind::VIM, cfg) == initial_field());
  CHECK(blues_zeroth(cfg).str() == "exp(-x)*exp(-2*t)");
  CHECK(method_start(MethodKind::BLUES, cfg) == blues_zeroth(cfg));
}

TEST_CASE("first applications of the method operators") {
  ProblemConfig cfg{Rational(2)};
  CHECK(vim_T(initial_field(), cfg).str() == "exp(-x)*(1 - t)");
  CHECK(blues_T(blues_zeroth(cfg), cfg).str() == "exp(-x)*exp(-2*t)*(1 + t)");
}

TEST_CASE("re-substitution iterates equal the truncated exponential series") {
  for (const Rational& a : {Rational(2), Rational(3)}) {
    ProblemConfig cfg{a};
    Field uv = method_start(MethodKind::VIM, cfg);
    Field ub = method_start(MethodKind::BLUES, cfg);
    for (int n = 0; n <= 6; ++n) {
      CHECK(uv == vim_closed_form(n, a));
      CHECK(ub == blues_closed_form(n, a));
      uv = apply_T(MethodKind::VIM, uv, cfg);
      ub = apply_T(MethodKind::BLUES, ub, cfg);
    }
  }
}

TEST_CASE("the exact solution is a fixed point of both operators") {
  for (const Rational& a : {Rational(2), Rational(3)}) {
    ProblemConfig cfg{a};
    Field star = exact_solution(cfg);
    CHECK(vim_T(star, cfg) == star);
    CHECK(blues_T(star, cfg) == star);
  }
}

TEST_CASE("residual keeps single-channel iterates single-channel") {
  ProblemConfig cfg{Rational(2)};
  Field u = apply_T(MethodKind::VIM, initial_field(), cfg);
  Field r = pde_residual(u, cfg);
  REQUIRE(r.channels().size() == 1);
  CHECK(r.channels().begin()->first == 1);
  // u_1 = e^{-x}(1 - t): residual t-part is g' + (a-1) g = -t.
  CHECK(r == Field::term(no_params(), 1, Rational(0), 1, Rational(-1)));
}
