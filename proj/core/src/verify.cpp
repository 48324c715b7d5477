#include "blues/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "blues/quadrature.hpp"

namespace blues {

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

namespace {

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  Rational rational(int max_num = 6, int max_den = 3) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational r(num(gen_), den(gen_));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(int max_num = 6, int max_den = 3) {
    Rational r = rational(max_num, max_den);
    return r == 0 ? Rational(1) : r;
  }

  Rational rate() {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Rational r(num(gen_), den(gen_));
    r.canonicalize();
    return r;
  }

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
  }

  Exponomial exponomial(const ParamSet& ps, int max_terms = 2, int max_tpow = 3) {
    Exponomial e(ps);
    int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i)
      e = e + Exponomial::monomial(ps, rate(), static_cast<unsigned>(uniform(0, max_tpow)),
                                   rational());
    return e;
  }

  Field field(const ParamSet& ps, int max_channels = 2) {
    Field f(ps);
    int chans = uniform(1, max_channels);
    for (int k = 1; k <= chans; ++k) f.set_channel(k, f.channel(k) + exponomial(ps));
    return f;
  }

  Field single_channel_field(const ParamSet& ps) {
    Field f(ps);
    f.set_channel(1, exponomial(ps));
    return f;
  }

 private:
  std::mt19937 gen_;
};

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, ok ? "" : detail});
  }
};

bool rel_close(double got, double want, double tol) {
  return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want));
}

Field picard_vim_closed_form(const Rational& a, int n) {
  // e^{-x} sum_{i<=n} (-(a-1) t)^i / i!
  Field f(no_params());
  Exponomial e(no_params());
  Rational c(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) c *= (Rational(1) - a) / Rational(i);
    e = e + Exponomial::monomial(no_params(), Rational(0), static_cast<unsigned>(i), c);
  }
  f.set_channel(1, e);
  return f;
}

Field picard_blues_closed_form(const Rational& a, int n) {
  // e^{-a t - x} sum_{i<=n} t^i / i!
  Field f(no_params());
  Exponomial e(no_params());
  Rational c(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) c /= Rational(i);
    e = e + Exponomial::monomial(no_params(), -a, static_cast<unsigned>(i), c);
  }
  f.set_channel(1, e);
  return f;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite suite;
  Rng rng(options.seed);
  const ProblemConfig cfg{options.a};
  const int digits = options.digits;

  // --- exponomial ring laws ---
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < options.samples && ok; ++i) {
      Exponomial a = rng.exponomial(no_params());
      Exponomial b = rng.exponomial(no_params());
      Exponomial c = rng.exponomial(no_params());
      Exponomial unit = Exponomial::constant(no_params(), Rational(1));
      if (!(a + b == b + a)) { ok = false; detail = "add not commutative"; }
      else if (!((a + b) + c == a + (b + c))) { ok = false; detail = "add not associative"; }
      else if (!(a * b == b * a)) { ok = false; detail = "mul not commutative"; }
      else if (!((a * b) * c == a * (b * c))) { ok = false; detail = "mul not associative"; }
      else if (!(a * (b + c) == a * b + a * c)) { ok = false; detail = "not distributive"; }
      else if (!(a * unit == a)) { ok = false; detail = "unit law"; }
    }
    suite.check("exponomial-ring-laws", ok, detail);
  }

  // --- diff_t . integrate_0t identity ---
  {
    bool ok = true;
    for (int i = 0; i < options.samples && ok; ++i) {
      Field f = rng.field(no_params());
      ok = f.integrate_0t().diff_t() == f && f.integrate_0t().at_t0().is_zero();
    }
    suite.check("integrate-diff-roundtrip", ok, "d/dt of the 0..t integral must return the integrand");
  }

  // --- integration vs adaptive quadrature ---
  {
    bool ok = true;
    std::string detail;
    const double xs = 1.0;
    for (int i = 0; i < options.samples / 2 && ok; ++i) {
      Field f = rng.field(no_params());
      Field F = f.integrate_0t();
      for (double tv : {0.5, 1.0, 2.0}) {
        auto integrand = [&](double s) {
          return f.eval_numeric(Real::from_double(xs, digits), Real::from_double(s, digits), digits)
              .to_double();
        };
        double want = adaptive_simpson(integrand, 0.0, tv, 1e-13);
        double got = F.eval_numeric(Real::from_double(xs, digits), Real::from_double(tv, digits), digits)
                         .to_double();
        if (!rel_close(got, want, 1e-10)) {
          ok = false;
          std::ostringstream os;
          os << "integral mismatch at t=" << tv << ": exact " << got << " vs quadrature " << want;
          detail = os.str();
          break;
        }
      }
    }
    suite.check("integration-quadrature", ok, detail);
  }

  // --- convolution identity: (d/dt + a)(G*f) = f, zero at t=0 ---
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < options.samples && ok; ++i) {
      Field f = rng.field(no_params());
      Field g = f.convolve_green(cfg.a);
      if (options.convolution_tamper) g = options.convolution_tamper(g);
      if (!(g.diff_t() + g.scaled(cfg.a) == f)) {
        ok = false;
        detail = "(d/dt + a)(G*f) != f";
      } else if (!g.at_t0().is_zero()) {
        ok = false;
        detail = "G*f nonzero at t=0";
      }
    }
    suite.check("convolution-identity", ok, detail);
  }

  // --- substitute commutes with the algebra ---
  {
    bool ok = true;
    std::string detail;
    ParamSet ps = make_params({"p", "q"});
    for (int i = 0; i < options.samples && ok; ++i) {
      Field f0 = rng.field(no_params()).with_params(ps);
      Field g0 = rng.field(no_params()).with_params(ps);
      ParamPoly mixer = ParamPoly::variable(ps, "p") * rng.rational() +
                        ParamPoly::variable(ps, "q") * rng.rational() +
                        ParamPoly::constant(ps, rng.rational());
      Field f = f0.scaled(mixer);
      Field g = g0.scaled(ParamPoly::variable(ps, "q") * rng.rational() +
                          ParamPoly::constant(ps, Rational(1)));
      std::map<std::string, Rational> bind{{"p", rng.rational()}, {"q", rng.rational()}};
      auto sub = [&](const Field& h) { return h.substitute(bind); };
      if (!(sub(f + g) == sub(f) + sub(g))) { ok = false; detail = "substitute vs add"; }
      else if (!(sub(f * g) == sub(f) * sub(g))) { ok = false; detail = "substitute vs mul"; }
      else if (!(sub(f.diff_t()) == sub(f).diff_t())) { ok = false; detail = "substitute vs diff_t"; }
      else if (!(sub(f.diff_x()) == sub(f).diff_x())) { ok = false; detail = "substitute vs diff_x"; }
      else if (!(sub(f.integrate_0t()) == sub(f).integrate_0t())) { ok = false; detail = "substitute vs integrate"; }
      else if (!(sub(f.convolve_green(cfg.a)) == sub(f).convolve_green(cfg.a))) {
        ok = false; detail = "substitute vs convolution";
      }
    }
    suite.check("substitute-commutes", ok, detail);
  }

  // --- channel-2 cancellation for single-channel inputs ---
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < options.samples && ok; ++i) {
      Field u = rng.single_channel_field(no_params());
      for (const Field& r : {pde_residual(u, cfg), residual_op(u, cfg)}) {
        for (const auto& [k, e] : r.channels()) {
          if (k != 1) {
            ok = false;
            detail = "residual picked up channel " + std::to_string(k);
          }
        }
      }
    }
    suite.check("channel-cancellation", ok, detail);
  }

  // --- exact solution solves the PDE ---
  {
    bool ok = true;
    std::string detail;
    for (const Rational& av : {cfg.a, Rational(3), Rational(7, 2)}) {
      ProblemConfig c{av};
      if (!pde_residual(exact_solution(c), c).is_zero()) {
        ok = false;
        detail = "nonzero residual at a=" + to_string(av);
      }
    }
    suite.check("exact-solution-residual", ok, detail);
  }

  // --- fixed point of both method operators ---
  {
    Field star = exact_solution(cfg);
    bool ok = vim_T(star, cfg) == star && blues_T(star, cfg) == star;
    suite.check("method-fixed-point", ok, "T[exact] != exact");
  }

  // --- Picard closed forms, n <= 6 ---
  {
    bool ok = true;
    std::string detail;
    for (const Rational& av : {cfg.a, Rational(3)}) {
      ProblemConfig c{av};
      auto vim_trace = run(ProcedureSpec::picard(), MethodKind::VIM, c, 6);
      auto blues_trace = run(ProcedureSpec::picard(), MethodKind::BLUES, c, 6);
      for (int n = 0; n <= 6; ++n) {
        if (!(vim_trace.iterates[static_cast<std::size_t>(n)] == picard_vim_closed_form(av, n))) {
          ok = false;
          detail = "vim closed form failed at n=" + std::to_string(n) + ", a=" + to_string(av);
        }
        if (!(blues_trace.iterates[static_cast<std::size_t>(n)] == picard_blues_closed_form(av, n))) {
          ok = false;
          detail = "blues closed form failed at n=" + std::to_string(n) + ", a=" + to_string(av);
        }
      }
    }
    suite.check("picard-closed-forms", ok, detail);
  }

  // --- reduction lattice ---
  {
    bool ok = true;
    std::string detail;
    for (MethodKind method : {MethodKind::VIM, MethodKind::BLUES}) {
      Rational alpha = rng.nonzero_rational(3, 4);
      auto picard = run(ProcedureSpec::picard(), method, cfg, 3);
      auto mann1 = run(ProcedureSpec::mann({Rational(1), Rational(1), Rational(1)}), method, cfg, 3);
      auto mann_a = run(ProcedureSpec::mann({alpha, alpha, alpha}), method, cfg, 3);
      auto kras = run(ProcedureSpec::krasnoselskii(alpha), method, cfg, 3);
      auto ish = run(ProcedureSpec::ishikawa({alpha, alpha, alpha},
                                             {Rational(0), Rational(0), Rational(0)}),
                     method, cfg, 3);
      auto hybrid0 = run(ProcedureSpec::hybrid_pk(Rational(0)), method, cfg, 3);
      auto hybrid1 = run(ProcedureSpec::hybrid_pk(Rational(1)), method, cfg, 1);
      auto picard2 = run(ProcedureSpec::picard(), method, cfg, 2);
      auto eq = [](const IterationTrace& a, const IterationTrace& b) {
        if (a.iterates.size() != b.iterates.size()) return false;
        for (std::size_t i = 0; i < a.iterates.size(); ++i)
          if (!(a.iterates[i] == b.iterates[i])) return false;
        return true;
      };
      if (!eq(mann1, picard)) { ok = false; detail = "mann(1) != picard"; }
      else if (!eq(ish, mann_a)) { ok = false; detail = "ishikawa(beta=0) != mann"; }
      else if (!eq(kras, mann_a)) { ok = false; detail = "krasnoselskii != constant mann"; }
      else if (!eq(hybrid0, picard)) { ok = false; detail = "hybrid(0) != picard"; }
      else if (!(hybrid1.iterates.back() == picard2.iterates.back())) {
        ok = false;
        detail = "hybrid(1) step != picard^2";
      }
      // every iterate keeps the initial condition
      Field ic = initial_field();
      for (const auto* tr : {&picard, &mann_a, &ish, &hybrid0})
        for (const auto& u : tr->iterates)
          if (!(u.at_t0() == ic)) { ok = false; detail = "iterate broke u(x,0)=e^{-x}"; }
    }
    suite.check("reduction-lattice", ok, detail);
  }

  // --- symbolic degree bounds ---
  {
    bool ok = true;
    std::string detail;
    for (MethodKind method : {MethodKind::VIM, MethodKind::BLUES}) {
      auto mann = run(ProcedureSpec::mann({ParamValue(std::string("a1")), ParamValue(std::string("a2")), ParamValue(std::string("a3"))}),
                      method, cfg, 3);
      for (const std::string& name : {"a1", "a2", "a3"})
        if (mann.iterates.back().degree_in(name) > 1) {
          ok = false;
          detail = "mann iterate degree > 1 in " + name;
        }
      auto ish = run(ProcedureSpec::ishikawa({ParamValue(std::string("a1")), ParamValue(std::string("a2"))},
                                             {ParamValue(std::string("b1")), ParamValue(std::string("b2"))}),
                     method, cfg, 2);
      for (const std::string& name : {"a1", "a2", "b1", "b2"})
        if (ish.iterates.back().degree_in(name) > 1) {
          ok = false;
          detail = "ishikawa iterate degree > 1 in " + name;
        }
      auto hyb = run(ProcedureSpec::hybrid_pk(ParamValue(std::string("lam"))), method, cfg, 3);
      if (hyb.iterates.back().degree_in("lam") > 3) {
        ok = false;
        detail = "hybrid iterate degree > n in lambda";
      }
      // E degree bounds
      ErrorFunctionalConfig efc;
      ErrorPolynomial Eh = error_functional(hyb.iterates.back(), cfg, efc);
      if (Eh.degree_in("lam") > 6) { ok = false; detail = "hybrid E degree > 2n"; }
      ErrorPolynomial Em = error_functional(mann.iterates.back(), cfg, efc);
      if (Em.degree_in("a3") > 2) { ok = false; detail = "mann E degree > 2"; }
      ErrorPolynomial Ei = error_functional(ish.iterates.back(), cfg, efc);
      if (Ei.degree_in("a2") > 2 || Ei.degree_in("b2") > 2) {
        ok = false;
        detail = "ishikawa E degree > 2";
      }
    }
    suite.check("parameter-degree-bounds", ok, detail);
  }

  // --- error functional vs adaptive quadrature ---
  {
    bool ok = true;
    std::string detail;
    ErrorFunctionalConfig efc;
    for (MethodKind method : {MethodKind::VIM, MethodKind::BLUES}) {
      for (int n : {1, 2, 3}) {
        Field u = run(ProcedureSpec::picard(), method, cfg, n).iterates.back();
        ErrorPolynomial E = error_functional(u, cfg, efc);
        double exact = E.eval({}, digits).to_double();
        Field r = pde_residual(u, cfg);
        Exponomial tpart = r.channel(1);
        auto integrand = [&](double s) {
          double v = tpart.eval(Real::from_double(s, digits), digits).to_double();
          return v * v;
        };
        double quad = adaptive_simpson(integrand, 0.0, 1.0, 1e-14);
        if (!rel_close(exact, quad, 1e-10)) {
          ok = false;
          std::ostringstream os;
          os << "E mismatch n=" << n << ": exact " << exact << " vs quadrature " << quad;
          detail = os.str();
        }
      }
    }
    suite.check("error-functional-quadrature", ok, detail);
  }

  return suite.results;
}

}  // namespace blues
