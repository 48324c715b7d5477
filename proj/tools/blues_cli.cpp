// Command-line front end: reproduces the convergence-control parameter
// tables, the closed-form approximants and the error curves, and runs the
// self-verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "blues/optimizer.hpp"
#include "blues/verify.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace blues;

namespace {

struct Options {
  std::string a = "2";
  std::string T = "1";
  int n = 3;
  std::string method = "vim";
  std::string procedure;
  std::string x = "1";
  std::string t_grid;  // start:stop:count
  int precision = 50;
  std::string out = ".";
  std::string fixed_params;
  unsigned seed = 12345;
  bool corrupt_convolution = false;  // negative-control hook for `verify`
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--a", opt.a, "reaction parameter a (rational, e.g. 2 or 7/2)");
  cmd->add_option("--T", opt.T, "horizon T of the residual error functional");
  cmd->add_option("--n", opt.n, "number of iteration steps");
  cmd->add_option("--method", opt.method, "vim | blues")
      ->check(CLI::IsMember({"vim", "blues"}));
  cmd->add_option("--procedure", opt.procedure,
                  "picard | mann | krasnoselskii | ishikawa | hybrid-pk")
      ->check(CLI::IsMember({"picard", "mann", "krasnoselskii", "ishikawa", "hybrid-pk"}));
  cmd->add_option("--x", opt.x, "spatial coordinate for error curves (rational)");
  cmd->add_option("--t-grid", opt.t_grid, "error-curve grid as start:stop:count");
  cmd->add_option("--precision", opt.precision, "significant decimal digits")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", opt.out, "output directory");
  cmd->add_option("--fixed-params", opt.fixed_params,
                  "JSON parameter file (as emitted by `params`) to use instead of optimizing");
  cmd->set_config("--config")->configurable(false);
}

MethodKind parse_method(const std::string& m) {
  return m == "blues" ? MethodKind::BLUES : MethodKind::VIM;
}

ProcedureSpec::Kind parse_procedure(const std::string& p) {
  if (p == "picard") return ProcedureSpec::Kind::Picard;
  if (p == "mann") return ProcedureSpec::Kind::Mann;
  if (p == "krasnoselskii") return ProcedureSpec::Kind::Krasnoselskii;
  if (p == "ishikawa") return ProcedureSpec::Kind::Ishikawa;
  if (p == "hybrid-pk") return ProcedureSpec::Kind::HybridPK;
  throw CLI::ValidationError("--procedure", "unknown procedure: " + p);
}

struct GridSpec {
  Rational start, stop;
  int count = 0;
};

GridSpec parse_grid(const Options& opt, MethodKind method) {
  if (opt.t_grid.empty()) {
    if (method == MethodKind::BLUES) return {Rational(0), Rational(10), 501};
    return {Rational(0), Rational(4), 201};
  }
  auto first = opt.t_grid.find(':');
  auto second = opt.t_grid.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw CLI::ValidationError("--t-grid", "expected start:stop:count");
  GridSpec g;
  g.start = rational_from_string(opt.t_grid.substr(0, first));
  g.stop = rational_from_string(opt.t_grid.substr(first + 1, second - first - 1));
  g.count = std::stoi(opt.t_grid.substr(second + 1));
  if (g.count < 2) throw CLI::ValidationError("--t-grid", "count must be >= 2");
  if (g.stop <= g.start) throw CLI::ValidationError("--t-grid", "stop must exceed start");
  return g;
}

// Reads the per-step parameter rationals out of a `params` JSON file.
std::map<std::string, Rational> load_fixed_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixed-params file: " + path);
  json j = json::parse(in);
  std::map<std::string, Rational> values;
  for (const auto& step : j.at("steps"))
    for (const auto& [name, entry] : step.at("params").items())
      values[name] = rational_from_string(entry.at("rational").get<std::string>());
  return values;
}

ProcedureSpec spec_from_values(ProcedureSpec::Kind kind, int n,
                               const std::map<std::string, Rational>& values) {
  auto get = [&](const std::string& name) {
    auto it = values.find(name);
    if (it == values.end())
      throw std::runtime_error("fixed-params file lacks parameter " + name);
    return it->second;
  };
  switch (kind) {
    case ProcedureSpec::Kind::Picard:
      return ProcedureSpec::picard();
    case ProcedureSpec::Kind::Krasnoselskii:
      return ProcedureSpec::krasnoselskii(get("alpha1"));
    case ProcedureSpec::Kind::Mann: {
      std::vector<ParamValue> alphas;
      for (int k = 1; k <= n; ++k) alphas.emplace_back(get("alpha" + std::to_string(k)));
      return ProcedureSpec::mann(std::move(alphas));
    }
    case ProcedureSpec::Kind::Ishikawa: {
      std::vector<ParamValue> alphas, betas;
      for (int k = 1; k <= n; ++k) {
        alphas.emplace_back(get("alpha" + std::to_string(k)));
        betas.emplace_back(get("beta" + std::to_string(k)));
      }
      return ProcedureSpec::ishikawa(std::move(alphas), std::move(betas));
    }
    case ProcedureSpec::Kind::HybridPK:
      return ProcedureSpec::hybrid_pk(get("lambda"));
  }
  throw std::logic_error("unreachable");
}

std::string procedure_slug(const std::string& p) {
  std::string s = p;
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

ExpConst constant_E(const Field& u, const ProblemConfig& cfg, const ErrorFunctionalConfig& efc) {
  ErrorPolynomial E = error_functional(u, cfg, efc);
  ExpConst v;
  for (const auto& [d, c] : E.terms()) v = v + c;
  return v;
}

// Obtains a fully numeric trace for (method, procedure): fixed parameters if
// given, greedy optimization otherwise, plain run for picard.
IterationTrace numeric_trace(const Options& opt, const std::string& procedure,
                             const ProblemConfig& cfg, const ErrorFunctionalConfig& efc) {
  MethodKind method = parse_method(opt.method);
  ProcedureSpec::Kind kind = parse_procedure(procedure);
  if (kind == ProcedureSpec::Kind::Picard)
    return run(ProcedureSpec::picard(), method, cfg, opt.n);
  if (!opt.fixed_params.empty()) {
    auto values = load_fixed_params(opt.fixed_params);
    return run(spec_from_values(kind, opt.n, values), method, cfg, opt.n);
  }
  if (kind == ProcedureSpec::Kind::Krasnoselskii)
    throw std::runtime_error(
        "krasnoselskii has no per-step optimization schedule; pass --fixed-params");
  return greedy_schedule(kind, method, cfg, efc, opt.n, default_box(), opt.precision).trace;
}

int cmd_params(const Options& opt) {
  if (opt.procedure.empty() || opt.procedure == "picard")
    throw std::runtime_error("`params` needs --procedure other than picard");
  ProblemConfig cfg{rational_from_string(opt.a)};
  ErrorFunctionalConfig efc{rational_from_string(opt.T)};
  MethodKind method = parse_method(opt.method);
  ProcedureSpec::Kind kind = parse_procedure(opt.procedure);
  const int digits = opt.precision;

  json j;
  j["method"] = opt.method;
  j["procedure"] = opt.procedure;
  j["a"] = to_string(cfg.a);
  j["T"] = to_string(efc.horizon);
  j["n"] = opt.n;
  j["steps"] = json::array();

  Real picard_E(digits), optimized_E(digits);

  if (!opt.fixed_params.empty()) {
    auto values = load_fixed_params(opt.fixed_params);
    ProcedureSpec spec = spec_from_values(kind, opt.n, values);
    IterationTrace trace = run(spec, method, cfg, opt.n);
    optimized_E = constant_E(trace.iterates.back(), cfg, efc).eval(digits);
    json step;
    step["step"] = opt.n;
    step["params"] = json::object();
    for (const auto& [name, value] : values) {
      json p;
      p["value_5"] = Real(value, digits).str(5);
      p["value_12"] = Real(value, digits).str(12);
      p["rational"] = to_string(value);
      step["params"][name] = p;
    }
    step["E"] = optimized_E.str(20);
    j["steps"].push_back(step);
    std::cout << opt.method << "/" << opt.procedure << " with fixed parameters:\n";
    for (const auto& [name, value] : values)
      std::cout << "  " << name << " = " << Real(value, digits).str(12) << "\n";
  } else {
    GreedyOutcome outcome =
        greedy_schedule(kind, method, cfg, efc, opt.n, default_box(), digits);
    optimized_E = outcome.steps.back().achieved;
    std::cout << opt.method << "/" << opt.procedure << ", a = " << to_string(cfg.a)
              << ", T = " << to_string(efc.horizon) << ":\n";
    for (const auto& res : outcome.steps) {
      json step;
      step["step"] = res.step;
      step["params"] = json::object();
      for (const auto& [name, pair] : res.bindings) {
        json p;
        p["value_5"] = pair.first.str(5);
        p["value_12"] = pair.first.str(12);
        p["rational"] = to_string(pair.second);
        step["params"][name] = p;
        std::cout << "  step " << res.step << ": " << name << " = " << pair.first.str(12)
                  << "  (" << pair.first.str(5) << ")\n";
      }
      step["E"] = res.achieved.str(20);
      if (res.degenerate) step["degenerate"] = true;
      j["steps"].push_back(step);
    }
  }

  picard_E = constant_E(run(ProcedureSpec::picard(), method, cfg, opt.n).iterates.back(),
                        cfg, efc)
                 .eval(digits);
  j["picard_E"] = picard_E.str(20);
  j["optimized_E"] = optimized_E.str(20);
  bool improves = !(optimized_E > picard_E);
  j["improves_on_picard"] = improves;
  std::cout << "  E(optimized) = " << optimized_E.str(12)
            << ", E(picard) = " << picard_E.str(12) << "\n";
  if (!improves)
    throw std::runtime_error("optimized E exceeds the Picard E; optimization is broken");

  fs::create_directories(opt.out);
  fs::path file = fs::path(opt.out) /
                  ("params_" + opt.method + "_" + procedure_slug(opt.procedure) + ".json");
  std::ofstream(file) << j.dump(2) << "\n";
  std::cout << "wrote " << file.string() << "\n";
  return 0;
}

int cmd_approx(const Options& opt) {
  ProblemConfig cfg{rational_from_string(opt.a)};
  ErrorFunctionalConfig efc{rational_from_string(opt.T)};
  std::string procedure = opt.procedure.empty() ? "picard" : opt.procedure;
  IterationTrace trace = numeric_trace(opt, procedure, cfg, efc);
  for (std::size_t i = 0; i < trace.iterates.size(); ++i)
    std::cout << "u_" << i << " = " << trace.iterates[i].str() << "\n";
  return 0;
}

int cmd_errors(const Options& opt) {
  ProblemConfig cfg{rational_from_string(opt.a)};
  ErrorFunctionalConfig efc{rational_from_string(opt.T)};
  MethodKind method = parse_method(opt.method);
  const int digits = opt.precision;
  GridSpec grid = parse_grid(opt, method);
  Rational x = rational_from_string(opt.x);
  Field exact = exact_solution(cfg);

  std::vector<std::string> procedures;
  if (!opt.procedure.empty()) procedures.push_back(opt.procedure);
  else procedures = {"picard", "mann", "ishikawa", "hybrid-pk"};

  fs::create_directories(opt.out);
  for (const auto& procedure : procedures) {
    IterationTrace trace = numeric_trace(opt, procedure, cfg, efc);
    const Field& u = trace.iterates.back();
    fs::path file = fs::path(opt.out) /
                    ("errors_" + opt.method + "_" + procedure_slug(procedure) + ".csv");
    std::ofstream out(file);
    out << "t,approx,exact,log10_abs_err\n";
    Rational span = grid.stop - grid.start;
    for (int i = 0; i < grid.count; ++i) {
      Rational t = grid.start + span * Rational(i, grid.count - 1);
      t.canonicalize();
      Real approx = u.eval_numeric(x, t, digits);
      Real truth = exact.eval_numeric(x, t, digits);
      Real diff = abs(approx - truth);
      out << Real(t, digits).str(17) << "," << approx.str(digits) << ","
          << truth.str(digits) << ",";
      if (diff.is_zero()) out << "-inf";
      else out << log10(diff).str(digits);
      out << "\n";
    }
    std::cout << "wrote " << file.string() << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  VerifyOptions vo;
  vo.a = rational_from_string(opt.a);
  vo.digits = opt.precision;
  vo.seed = opt.seed;
  if (opt.corrupt_convolution) {
    vo.convolution_tamper = [](const Field& g) {
      return g + Field::term(g.params(), 1, Rational(0), 1, Rational(1, 7));
    };
  }
  auto results = run_verification(vo);
  bool ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.passed) {
      std::cout << "  (" << r.detail << ")";
      ok = false;
    }
    std::cout << "\n";
  }
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-analytic iteration engine for a nonlinear reaction-diffusion-advection PDE"};
  app.require_subcommand(1);

  Options opt;
  auto* params = app.add_subcommand("params", "optimize and print convergence-control parameters");
  auto* approx = app.add_subcommand("approx", "print the closed-form approximants");
  auto* errors = app.add_subcommand("errors", "emit error curves as CSV");
  auto* verify = app.add_subcommand("verify", "run the self-verification suite");
  for (auto* cmd : {params, approx, errors, verify}) add_common(cmd, opt);
  verify->add_option("--seed", opt.seed, "seed for the randomized property checks");
  verify->add_flag("--corrupt-convolution", opt.corrupt_convolution,
                   "negative control: tamper with the convolution before checking it")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (params->parsed()) return cmd_params(opt);
    if (approx->parsed()) return cmd_approx(opt);
    if (errors->parsed()) return cmd_errors(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
