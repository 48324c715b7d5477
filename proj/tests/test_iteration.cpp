#include <doctest.h>

#include "blues/iteration.hpp"

using namespace blues;

namespace {

ParamValue sym(const char* name) { return ParamValue(std::string(name)); }

Operator op(MethodKind method, const ProblemConfig& cfg) {
  return [method, &cfg](const Field& u) { return apply_T(method, u, cfg); };
}

}  // namespace

TEST_CASE("symbolic first steps match the hand expansions") {
  ProblemConfig cfg{Rational(2)};

  SUBCASE("mann on the direct-substitution operator") {
    auto trace = run(ProcedureSpec::mann({sym("alpha")}), MethodKind::VIM, cfg, 1);
    CHECK(trace.iterates.back().str() == "exp(-x)*(1 - alpha*t)");
  }
  SUBCASE("mann on the propagator-convolution operator") {
    auto trace = run(ProcedureSpec::mann({sym("alpha")}), MethodKind::BLUES, cfg, 1);
    CHECK(trace.iterates.back().str() == "exp(-x)*exp(-2*t)*(1 + alpha*t)");
  }
  SUBCASE("ishikawa routes the blend through the auxiliary iterate") {
    auto trace =
        run(ProcedureSpec::ishikawa({sym("alpha")}, {sym("beta")}), MethodKind::VIM, cfg, 1);
    REQUIRE(trace.auxiliary.size() == 1);
    CHECK(trace.auxiliary[0].str() == "exp(-x)*(1 - beta*t)");
    // u_1 = (1 - alpha) u_0 + alpha T[v_0] = e^{-x}(1 - alpha t + (alpha beta / 2) t^2)
    ParamSet ps = trace.iterates.back().params();
    ParamPoly al = ParamPoly::variable(ps, "alpha");
    ParamPoly be = ParamPoly::variable(ps, "beta");
    Field expect = Field::term(ps, 1, Rational(0), 0, Rational(1)) -
                   Field::term(ps, 1, Rational(0), 1, al) +
                   Field::term(ps, 1, Rational(0), 2, al * be * Rational(1, 2));
    CHECK(trace.iterates.back() == expect);
  }
}

TEST_CASE("reduction lattice between the procedures") {
  for (MethodKind method : {MethodKind::VIM, MethodKind::BLUES}) {
    ProblemConfig cfg{Rational(2)};
    const int n = 3;
    Field picard = run(ProcedureSpec::picard(), method, cfg, n).iterates.back();

    // Mann with every alpha = 1 is plain re-substitution.
    std::vector<ParamValue> ones(n, ParamValue(Rational(1)));
    CHECK(run(ProcedureSpec::mann(ones), method, cfg, n).iterates.back() == picard);

    // Ishikawa with beta = 0 collapses to Mann.
    std::vector<ParamValue> alphas{ParamValue(Rational(2, 3)), ParamValue(Rational(1, 2)),
                                   ParamValue(Rational(4, 5))};
    std::vector<ParamValue> zeros(n, ParamValue(Rational(0)));
    CHECK(run(ProcedureSpec::ishikawa(alphas, zeros), method, cfg, n).iterates.back() ==
          run(ProcedureSpec::mann(alphas), method, cfg, n).iterates.back());

    // Krasnoselskii is Mann with a constant schedule.
    std::vector<ParamValue> constant(n, ParamValue(Rational(3, 4)));
    CHECK(run(ProcedureSpec::krasnoselskii(ParamValue(Rational(3, 4))), method, cfg, n)
              .iterates.back() ==
          run(ProcedureSpec::mann(constant), method, cfg, n).iterates.back());

    // The hybrid blend interpolates between one and two operator
    // applications per step.
    CHECK(run(ProcedureSpec::hybrid_pk(ParamValue(Rational(0))), method, cfg, n)
              .iterates.back() == picard);
    Field picard2 = run(ProcedureSpec::picard(), method, cfg, 2 * n).iterates.back();
    CHECK(run(ProcedureSpec::hybrid_pk(ParamValue(Rational(1))), method, cfg, n)
              .iterates.back() == picard2);
  }
}

TEST_CASE("parameter degrees stay within the affine bounds") {
  ProblemConfig cfg{Rational(2)};

  // Each Mann step is affine in its own alpha: total degree 1 per name.
  auto mann = run(ProcedureSpec::mann({sym("a1"), sym("a2"), sym("a3")}),
                  MethodKind::BLUES, cfg, 3);
  for (const char* name : {"a1", "a2", "a3"})
    CHECK(mann.iterates.back().degree_in(name) <= 1);

  // A shared hybrid lambda accumulates one degree per step.
  auto hybrid = run(ProcedureSpec::hybrid_pk(sym("lambda")), MethodKind::VIM, cfg, 3);
  CHECK(hybrid.iterates.back().degree_in("lambda") == 3);
  CHECK(hybrid.iterates[1].degree_in("lambda") == 1);
}

TEST_CASE("procedure validation") {
  ProblemConfig cfg{Rational(2)};
  // Too few per-step parameters.
  CHECK_THROWS_AS(run(ProcedureSpec::mann({sym("a1")}), MethodKind::VIM, cfg, 2),
                  std::invalid_argument);
  // Duplicate symbolic names across steps.
  CHECK_THROWS_AS(run(ProcedureSpec::mann({sym("a"), sym("a")}), MethodKind::VIM, cfg, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(run(ProcedureSpec::picard(), MethodKind::VIM, cfg, 0),
                  std::invalid_argument);
}

TEST_CASE("traces record every iterate in order") {
  ProblemConfig cfg{Rational(2)};
  auto trace = run(ProcedureSpec::picard(), MethodKind::VIM, cfg, 4);
  REQUIRE(trace.iterates.size() == 5);
  CHECK(trace.iterates[0] == initial_field());
  Operator T = op(MethodKind::VIM, cfg);
  for (std::size_t i = 0; i + 1 < trace.iterates.size(); ++i)
    CHECK(trace.iterates[i + 1] == T(trace.iterates[i]));
}
