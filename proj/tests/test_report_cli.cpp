#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>

#include "gup1d/report.hpp"
#include "gup1d/verify.hpp"

using namespace gup1d;
using namespace gup1d::report;

namespace {

#ifdef GUP1D_CLI_PATH
struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GUP1D_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
#endif

}  // namespace

TEST_SUITE_BEGIN("report_cli");

TEST_CASE("format_value: plain inside [1e-3, 1e6), scientific outside, zero bare") {
  CHECK(format_value(0.0) == "0");
  CHECK(format_value(0.5) == "0.5");
  CHECK(format_value(1.0) == "1");
  CHECK(format_value(-2.25) == "-2.25");
  CHECK(format_value(1e-4).find('e') != std::string::npos);
  CHECK(format_value(1e7).find('e') != std::string::npos);
  CHECK(format_value(999999.5).find('e') == std::string::npos);
}

TEST_CASE("csv round-trip is bit exact for random magnitudes") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  Table t;
  t.columns = {{"a", false}, {"b", false}, {"c", false}};
  for (int i = 0; i < 200; ++i) {
    std::vector<double> row;
    for (int c = 0; c < 3; ++c) {
      row.push_back(mantissa(rng) * std::pow(10.0, expo(rng)));
    }
    t.rows.push_back(row);
  }
  const Table back = parse_csv(to_csv(t));
  REQUIRE(back.rows.size() == t.rows.size());
  for (size_t r = 0; r < t.rows.size(); ++r) {
    for (size_t c = 0; c < 3; ++c) {
      CHECK(back.rows[r][c] == t.rows[r][c]);
    }
  }
}

TEST_CASE("csv carries notes as comments and rejects ragged rows") {
  Table t;
  t.columns = {{"x", false}};
  t.rows = {{1.5}};
  t.notes = {"context line"};
  const std::string text = to_csv(t);
  CHECK(text.rfind("# context line", 0) == 0);
  const Table back = parse_csv(text);
  CHECK(back.notes.size() == 1);
  CHECK_THROWS_AS(parse_csv("a,b\n1.0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("a\nnot_a_number\n"), std::invalid_argument);
}

TEST_CASE("json envelope is stable and ordered") {
  Table t;
  t.columns = {{"n", true}, {"e", false}};
  t.rows = {{1.0, -0.5}};
  const std::string j = to_json("coulomb", {{"mass", 1.0}}, t, {{"chk", 0.0, 1.0, true}});
  const size_t c = j.find("\"command\"");
  const size_t p = j.find("\"params\"");
  const size_t r = j.find("\"rows\"");
  const size_t k = j.find("\"checks\"");
  REQUIRE(c != std::string::npos);
  REQUIRE(p != std::string::npos);
  REQUIRE(r != std::string::npos);
  REQUIRE(k != std::string::npos);
  CHECK(c < p);
  CHECK(p < r);
  CHECK(r < k);
  CHECK(j.find("\"n\": 1") != std::string::npos);
}

TEST_CASE("verify check groups pass standalone") {
  // The heavyweight grid checks run in the acceptance suite; here the cheap
  // groups guard against regressions in the checks themselves.
  for (const auto& group : {verify::report_checks(), verify::scattering_checks()}) {
    for (const auto& c : group) {
      INFO(c.name, " measured=", c.measured, " tol=", c.tolerance);
      CHECK(c.pass);
    }
  }
}

#ifdef GUP1D_CLI_PATH

TEST_CASE("cli: linear defaults emit five rows with the known ground level") {
  const CliResult r = run_cli("linear");
  CHECK(r.exit_code == 0);
  const Table t = parse_csv(r.output);
  REQUIRE(t.rows.size() == 5);
  REQUIRE(t.columns.size() == 4);
  CHECK(t.columns[1].name == "energy_analytic");
  CHECK(std::abs(t.rows[0][1] - 1.85576) < 1e-5);
  // Oracle column agrees to discretization accuracy at the default grid.
  CHECK(t.rows[0][3] < 1e-3);
}

TEST_CASE("cli: lambda shifts every linear level by -lambda^2/2m") {
  const Table t0 = parse_csv(run_cli("linear").output);
  const Table t1 = parse_csv(run_cli("linear --lambda 1").output);
  REQUIRE(t0.rows.size() == t1.rows.size());
  for (size_t i = 0; i < t0.rows.size(); ++i) {
    CHECK(t1.rows[i][1] - t0.rows[i][1] == doctest::Approx(-0.5).epsilon(1e-12));
  }
}

TEST_CASE("cli: identical configuration gives byte-identical output") {
  const std::string args = "barrier --energy-steps 7 --lambda 0.4 --format json";
  CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("cli: barrier row at the symmetric point") {
  const CliResult r = run_cli(
      "barrier --energy-min 0.5 --energy-max 0.5 --energy-steps 1");
  CHECK(r.exit_code == 0);
  const Table t = parse_csv(r.output);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][1] == doctest::Approx(0.5).epsilon(1e-14));  // T
  CHECK(t.rows[0][2] == doctest::Approx(0.5).epsilon(1e-14));  // Rc
}

TEST_CASE("cli: coulomb analytic column") {
  const Table t = parse_csv(run_cli("coulomb --n-max 3").output);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0][1] == doctest::Approx(-0.5));
  CHECK(t.rows[1][1] == doctest::Approx(-0.125));
  CHECK(t.rows[2][1] == doctest::Approx(-1.0 / 18.0));
}

TEST_CASE("cli: stark row reproduces the unit-parameter element") {
  const Table t = parse_csv(run_cli("stark --n-max 1 --field 1").output);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][3] == doctest::Approx(0.75).epsilon(1e-12));  // h12
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("linear --slope -1").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("linear --format yaml").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli: filtered verify passes and emits the json envelope") {
  const CliResult r = run_cli("verify --filter report");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"command\": \"verify\"") != std::string::npos);
  CHECK(r.output.find("\"checks\"") != std::string::npos);
  CHECK(r.output.find("report.csv_roundtrip") != std::string::npos);
  // Unknown filter matches nothing: usage error.
  CHECK(run_cli("verify --filter nonexistent_check").exit_code == 2);
}

#endif  // GUP1D_CLI_PATH

TEST_SUITE_END();
