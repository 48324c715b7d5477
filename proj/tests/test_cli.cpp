#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BLUES_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::path(BLUES_TEST_TMPDIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("approx prints the closed-form iterates") {
  RunResult r = run_cli("approx --method vim --procedure picard --n 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "u_0 = exp(-x)\n"));
  CHECK(contains(r.output, "u_1 = exp(-x)*(1 - t)\n"));
  CHECK(contains(r.output, "u_2 = exp(-x)*(1 - t + 1/2*t^2)\n"));

  RunResult b = run_cli("approx --method blues --procedure picard --n 1");
  CHECK(b.exit_code == 0);
  CHECK(contains(b.output, "u_1 = exp(-x)*exp(-2*t)*(1 + t)\n"));
}

TEST_CASE("params emits the optimized schedule as JSON") {
  fs::path dir = scratch_dir("params_mann");
  RunResult r =
      run_cli("params --method vim --procedure mann --n 3 --out " + dir.string());
  REQUIRE(r.exit_code == 0);

  fs::path file = dir / "params_vim_mann.json";
  REQUIRE(fs::exists(file));
  json j = json::parse(slurp(file));
  CHECK(j.at("method") == "vim");
  CHECK(j.at("procedure") == "mann");
  CHECK(j.at("a") == "2");
  CHECK(j.at("n") == 3);
  REQUIRE(j.at("steps").size() == 3);
  CHECK(j["steps"][0]["params"]["alpha1"]["rational"] == "9/14");
  CHECK(j["steps"][0]["params"]["alpha1"]["value_5"] == "0.64286");
  CHECK(j["steps"][1]["params"]["alpha2"]["value_5"] == "0.8499");
  CHECK(j["steps"][2]["params"]["alpha3"]["value_5"] == "0.74308");
  CHECK(j.at("improves_on_picard") == true);

  SUBCASE("the file round-trips as fixed parameters") {
    RunResult again = run_cli("params --method vim --procedure mann --n 3 --out " +
                              (dir / "echo").string() + " --fixed-params " + file.string());
    REQUIRE(again.exit_code == 0);
    json e = json::parse(slurp(dir / "echo" / "params_vim_mann.json"));
    CHECK(e.at("optimized_E") == j.at("optimized_E"));
    CHECK(e.at("picard_E") == j.at("picard_E"));
  }
}

TEST_CASE("params refuses a procedure without control parameters") {
  RunResult r = run_cli("params --method vim --procedure picard --n 3");
  CHECK(r.exit_code != 0);
}

TEST_CASE("errors writes one CSV per procedure") {
  fs::path dir = scratch_dir("errors");
  RunResult r = run_cli("errors --method vim --procedure picard --t-grid 0:1:5 --out " +
                        dir.string());
  REQUIRE(r.exit_code == 0);
  std::string csv = slurp(dir / "errors_vim_picard.csv");
  CHECK(csv.rfind("t,approx,exact,log10_abs_err\n", 0) == 0);
  // 5 grid points plus the header.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  // All iterates agree with the exact solution at t = 0.
  std::string first_row = csv.substr(csv.find('\n') + 1);
  first_row = first_row.substr(0, first_row.find('\n'));
  CHECK(first_row.rfind("0,", 0) == 0);
  CHECK(contains(first_row, "-inf"));

  SUBCASE("output is deterministic, byte for byte") {
    fs::path dir2 = scratch_dir("errors_again");
    RunResult r2 = run_cli("errors --method vim --procedure picard --t-grid 0:1:5 --out " +
                           dir2.string());
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(dir2 / "errors_vim_picard.csv") == csv);
  }
}

TEST_CASE("errors with fixed parameters reproduces the optimized curves") {
  fs::path dir = scratch_dir("fixed_roundtrip");
  REQUIRE(run_cli("params --method blues --procedure hybrid-pk --n 3 --out " + dir.string())
              .exit_code == 0);
  std::string common = "errors --method blues --procedure hybrid-pk --t-grid 0:2:9 ";
  REQUIRE(run_cli(common + "--out " + (dir / "opt").string()).exit_code == 0);
  REQUIRE(run_cli(common + "--out " + (dir / "fix").string() + " --fixed-params " +
                  (dir / "params_blues_hybrid_pk.json").string())
              .exit_code == 0);
  CHECK(slurp(dir / "opt" / "errors_blues_hybrid_pk.csv") ==
        slurp(dir / "fix" / "errors_blues_hybrid_pk.csv"));
}

TEST_CASE("krasnoselskii curves require explicit parameters") {
  fs::path dir = scratch_dir("kras");
  RunResult r = run_cli("errors --method vim --procedure krasnoselskii --t-grid 0:1:3 --out " +
                        dir.string());
  CHECK(r.exit_code != 0);
  CHECK(contains(r.output, "fixed-params"));
}

TEST_CASE("grid validation") {
  CHECK(run_cli("errors --method vim --procedure picard --t-grid 0:1:1 --out .").exit_code != 0);
  CHECK(run_cli("errors --method vim --procedure picard --t-grid 1:0:5 --out .").exit_code != 0);
  CHECK(run_cli("errors --method vim --procedure picard --t-grid nonsense --out .").exit_code != 0);
}

TEST_CASE("verify exits zero and reports every suite") {
  RunResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "all checks passed"));
  for (const char* name : {"exponomial-ring-laws", "convolution-identity",
                           "channel-cancellation", "reduction-lattice",
                           "parameter-degree-bounds", "error-functional-quadrature"})
    CHECK(contains(r.output, std::string("PASS  ") + name));

  SUBCASE("the negative control trips the convolution check") {
    RunResult bad = run_cli("verify --corrupt-convolution");
    CHECK(bad.exit_code != 0);
    CHECK(contains(bad.output, "FAIL  convolution-identity"));
  }
}
