#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QCSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze") {
  const Run r = run("analyze --family rose-petal --a 0.9");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "analyze");
  CHECK(j["K"].get<double>() == 2.0);
  CHECK(j["K_J_sup"].get<double>() == doctest::Approx(0.81));
  CHECK(j["growth_gap"].get<double>() == doctest::Approx(1.357).epsilon(1e-3));

  const json e = json::parse(run("analyze --family epicycloid --A 0.2 --B 0.05 --n 3").out);
  CHECK(e["K"].get<double>() == doctest::Approx(5.0 / 3.0));
  CHECK(e["J_sup_analytic"].get<double>() == doctest::Approx(0.15));
  CHECK(e["growth_gap"].get<double>() == doctest::Approx(3 * 5.78318596295).epsilon(1e-10));

  const json d = json::parse(run("analyze --family ellipse --a 0").out);
  CHECK(d["qc_lower"].get<double>() == doctest::Approx(d["faber_krahn"].get<double>()));
  CHECK(d["qc_lower"].get<double>() == doctest::Approx(5.78318596295));
}

TEST_CASE("bad input exits with 2") {
  CHECK(run("analyze --family ellipse --a 0 --bogus 1").code == 2);
  CHECK(run("analyze --family ellipse").code == 2);
  CHECK(run("analyze --family ellipse --a -1").code == 2);
  CHECK(run("analyze --family ellipse --a 0.1 --A 0.3").code == 2);
  CHECK(run("analyze --family hexagon --a 0.1").code == 2);
  CHECK(run("analyze --family epicycloid --A 0.2 --B 0.2 --n 3").code == 2);
  CHECK(run("analyze --family rose-petal --a 0.5 --grid-radial 8").code == 2);
  CHECK(run("verify --family identity --rings 1").code == 2);
  CHECK(run("sweep --family ellipse --param a --from 0.5 --to 0.5 --step 0.1").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("negative tolerance is rejected as bad input") {
  CHECK(run("verify --family identity --rings 8 --tol -1").code == 2);
}

TEST_CASE("verify") {
  const Run r = run("verify --family ellipse --a 0.125 --rings 32");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["fem_lambda"].get<double>() >= 4.5072);
  CHECK(j["margin"].get<double>() >= 0.0);
  CHECK(j["passed"].get<bool>());

  const json d = json::parse(run("verify --family identity --rings 64").out);
  CHECK(d["fem_lambda"].get<double>() >= 5.7832);
  CHECK(d["fem_lambda"].get<double>() <= 5.86);
}

TEST_CASE("formats and output file") {
  const Run csv = run("analyze --family identity --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("family,params,K,", 0) == 0);
  const Run md = run("analyze --family identity --format md");
  CHECK(md.out.rfind("| key | value |", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "qcspec_cli_test.json";
  std::filesystem::remove(path);
  const Run r = run("analyze --family identity --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream is(path);
  const json j = json::parse(is);
  CHECK(j["family"] == "identity");
  std::filesystem::remove(path);
}

TEST_CASE("sweep") {
  const Run r = run("sweep --family ellipse --param a --from 0 --to 0.5 --step 0.025 --format csv");
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  std::string line;
  int lines = 0;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 22);  // header + 21 rows
}

TEST_CASE("mesh export") {
  const Run r = run("mesh --family rose-petal --a 0.5 --rings 3");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("37 54\n", 0) == 0);
}
