// End-to-end checks of the command-line surface: flags, JSON schema, exit
// codes, and determinism. Talks to the real binary over a pipe.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <regex>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(DD_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip_wall_time(std::string text) {
  static const std::regex re("\"wall_time_ms\": [0-9.eE+-]+");
  return std::regex_replace(text, re, "\"wall_time_ms\": X");
}

}  // namespace

TEST_CASE("eval: finite value at the removable zeta point") {
  const RunResult r = run("eval --base 10 --digits 0-9 --s 0,0");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["command"] == "eval");
  CHECK(doc["input"]["base"] == 10);
  CHECK(doc["input"]["digits"].size() == 10);
  CHECK(doc["result"]["value"]["re"].get<double>() == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(doc["result"]["value"].contains("im"));
  CHECK(doc["result"]["method"] == "geo");
  CHECK(doc["result"]["nearest_pole"]["distance"].get<double>() == 0.0);
  CHECK(doc.contains("wall_time_ms"));
}

TEST_CASE("eval: method selection is reported") {
  const json direct = json::parse(run("eval --base 10 --digits 0-8 --s 4,0").out);
  CHECK(direct["result"]["method"] == "direct");
  const json geo = json::parse(run("eval --base 10 --digits 0-8 --s 0.3,0").out);
  CHECK(geo["result"]["method"] == "geo");
  const json feq =
      json::parse(run("eval --base 10 --digits 0-8 --s -1.2,0.5 --method feq").out);
  CHECK(feq["result"]["method"] == "feq");
  CHECK(feq["result"]["tail_estimate"].get<double>() > 0.0);
}

TEST_CASE("kempner digits") {
  const RunResult r = run("kempner --base 10 --digits 0-8");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["value"]["re"].get<double>() ==
        doctest::Approx(22.920676619).epsilon(1e-10));
  CHECK(doc["result"]["method"] == "geo");
}

TEST_CASE("bernoulli rationals, decimal-free") {
  const RunResult r = run("bernoulli --base 2 --digits 0-1 --order 4");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  const auto values = doc["result"]["values"];
  REQUIRE(values.size() == 5);
  CHECK(values[0] == "1");
  CHECK(values[1] == "-1/2");
  CHECK(values[2] == "1/6");
  CHECK(values[3] == "0");
  CHECK(values[4] == "-1/30");
}

TEST_CASE("neg-values") {
  const json doc =
      json::parse(run("neg-values --base 10 --digits 1-9 --order 2").out);
  CHECK(doc["result"]["values"][0] == "-9/8");
  CHECK(doc["result"]["values"][1] == "45/712");
}

TEST_CASE("mgf taylor output carries the EGF convention") {
  const json doc =
      json::parse(run("mgf --base 10 --digits 0-8 --order 3 --t 1,0").out);
  CHECK(doc["result"]["convention"] == "egf");
  CHECK(doc["result"]["E_coeffs"][1] == "4/9");
  CHECK(doc["result"]["B_coeffs"][0] == "1");
  CHECK(doc["result"]["E"].contains("re"));
  CHECK(doc["result"]["B"].contains("im"));
}

TEST_CASE("residues row") {
  const json doc = json::parse(run("residues --base 10 --digits 0-8 --order 3").out);
  CHECK(doc["result"]["k"] == 0);
  CHECK(doc["result"]["entire"].size() == 4);
  CHECK(doc["result"]["row"].size() == 4);
  CHECK(doc["result"]["mu_rational"].size() == 4);
  CHECK(doc["result"]["entire"][0]["re"].get<double>() ==
        doctest::Approx(1.0223448966).epsilon(1e-6));
  // Off-lattice normalization identities are covered in core tests; here just
  // check the entire/row routes agree through the machine interface.
  for (int m = 0; m <= 3; ++m) {
    CHECK(doc["result"]["entire"][m]["re"].get<double>() ==
          doctest::Approx(doc["result"]["row"][m]["re"].get<double>()).epsilon(1e-6));
  }
}

TEST_CASE("determinism: identical requests give identical JSON") {
  const std::string args = "eval --base 3 --digits 0,2 --s -1.487,1 --tol 1e-11";
  const std::string a = strip_wall_time(run(args).out);
  const std::string b = strip_wall_time(run(args).out);
  CHECK(a == b);
  const std::string v1 = strip_wall_time(run("verify --quick --seed 7").out);
  const std::string v2 = strip_wall_time(run("verify --quick --seed 7").out);
  CHECK(v1 == v2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("eval --base 10 --digits 0-9").exit_code == 1);      // missing --s
  CHECK(run("eval --digits 0-9 --s 1,0").exit_code == 1);        // missing --base
  CHECK(run("eval --base 10 --digits 0-9 --s 2,0 --method bogus").exit_code == 1);
  CHECK(run("eval --base 10 --digits 3-1 --s 2,0").exit_code == 1);  // bad range
  CHECK(run("eval --base 10 --digits 0-9 --s nope").exit_code == 1);
  CHECK(run("frobnicate").exit_code == 1);
  CHECK(run("").exit_code == 1);
}

TEST_CASE("domain errors exit 2") {
  CHECK(run("eval --base 10 --digits 0-9 --s 1,0").exit_code == 2);   // pole
  CHECK(run("kempner --base 10 --digits 0-9").exit_code == 2);        // zeta case
  CHECK(run("neg-values --base 10 --digits 0-9 --order 3").exit_code == 2);
  CHECK(run("eval --base 10 --digits 9 --s 2,0").exit_code == 0);
  CHECK(run("eval --base 10 --digits 0 --s 2,0").exit_code == 2);     // {0}
  // Direct summation refused when the cap makes the tolerance unreachable.
  CHECK(run("eval --base 10 --digits 0-8 --s 1.2,0 --method direct --tol 1e-12")
            .exit_code == 2);
}

TEST_CASE("enumeration cap honors the environment") {
  const std::string args = "eval --base 10 --digits 0-8 --s 4,0 --method direct";
  CHECK(run(args).exit_code == 0);
  CHECK(run(args, "DD_ENUM_CAP=50").exit_code == 2);
}

TEST_CASE("text format renders without JSON") {
  const RunResult r = run("eval --base 10 --digits 0-8 --s 2,0 --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("value") != std::string::npos);
  CHECK(r.out.find("method") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("verify --quick passes and reports per check") {
  const RunResult r = run("verify --quick");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["failed"] == 0);
  CHECK(doc["result"]["passed"].get<int>() >= 15);
  for (const auto& c : doc["result"]["checks"]) {
    CHECK(c["pass"].get<bool>());
    CHECK(!c["name"].get<std::string>().empty());
  }
}
