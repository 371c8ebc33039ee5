#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(POLYCURV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(POLYCURV_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("curvature of the square") {
  RunResult r = run("curvature " + data("square.json") + " -k 0");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("value").get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("intrinsic volume table of the square") {
  RunResult r = run("curvature " + data("square.json") + " --all");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  auto table = j.at("intrinsic_volumes");
  REQUIRE(table.size() == 3);
  CHECK(table[0].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(table[1].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(table[2].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("curvature of the cube at order one") {
  RunResult r = run("curvature " + data("cube.json") + " -k 1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("value").get<double>() == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("mixed measure of two squares") {
  RunResult r = run("mixed " + data("square.json") + " " + data("square.json") +
                    " --orders 1,1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("value").get<double>() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(j.at("contributions").size() == 8);
}

TEST_CASE("order sum violation exits with the validation code") {
  RunResult r = run("mixed " + data("square.json") + " " + data("square.json") +
                    " --orders 0,1");
  CHECK(r.exit_code == 3);
}

TEST_CASE("malformed json exits with the parse code") {
  RunResult r = run("curvature " + data("bad.json") + " -k 0");
  CHECK(r.exit_code == 2);
}

TEST_CASE("missing subcommand is a usage error") {
  CHECK(run("").exit_code == 2);
}

TEST_CASE("verify signs passes") {
  RunResult r = run("verify signs");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("passed").get<bool>());
}

TEST_CASE("unknown verify suite exits with the usage code") {
  CHECK(run("verify bogus").exit_code == 2);
}

TEST_CASE("reports are byte identical for identical configs") {
  const std::string args = "verify mu --seed 99 --samples 20000";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("csv report format") {
  RunResult r = run("verify signs --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("name,passed,observed,bound", 0) == 0);
}

TEST_CASE("tif spec document round trip") {
  RunResult r = run("tif " + data("tif_squares.json"));
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("rhs").at("value").get<double>() == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(j.at("discrepancy_sigma").get<double>() <= 5.0);
}
