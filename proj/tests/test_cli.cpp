// End-to-end checks of the command line surface: outputs, file formats and
// the exit code contract (0 ok, 1 violations, 2 usage, 3 hypothesis
// failure).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = std::string(CLIQUENORM_CLI_PATH) + " " + args +
                              " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/cliquenorm_cli_test_") + name;
}

}  // namespace

TEST_CASE("bound command") {
  const RunResult r = run("bound --p 1 --t 3 --C 12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("bound: 4") != std::string::npos);
  CHECK(r.output.find("regime: subcritical") != std::string::npos);

  const RunResult super = run("bound --p 3 --t 3 --C 4.932424");
  CHECK(super.exit_code == 0);
  CHECK(super.output.find("s_int: 3") != std::string::npos);
  CHECK(super.output.find("bound: 4.9999") != std::string::npos);

  const RunResult hyper = run("bound --p 1 --t 4 --r 3 --j 1 --C 30");
  CHECK(hyper.exit_code == 0);
  CHECK(hyper.output.find("bound: 5") != std::string::npos);
}

TEST_CASE("bound json output parses and has the contract fields") {
  const RunResult r = run("bound --p 2.5 --t 3 --C 10 --json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("regime") == "supercritical");
  CHECK(j.at("s_int") == 4);
  CHECK(j.at("bound").is_number());
}

TEST_CASE("exit code 2 on bad usage") {
  CHECK(run("bound --p 1 --t 3").exit_code == 2);         // missing --C
  CHECK(run("bound --p -1 --t 3 --C 2").exit_code == 2);  // bad p
  CHECK(run("bound --p inf --t 3 --C 2").exit_code == 2); // p=inf refused
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("count --input /nonexistent --t 3").exit_code == 2);
}

TEST_CASE("exit code 3 on a fixed-n hypothesis failure") {
  // C^3 = 95 < 96 = n (s_real - 1)^p
  CHECK(run("bound --n 12 --p 3 --t 3 --C 4.5629").exit_code == 3);
  CHECK(run("bound --n 12 --p 3 --t 3 --C 6.868285455").exit_code == 0);
}

TEST_CASE("construct then count round trip") {
  const std::string graph_file = temp_path("gls.txt");
  CHECK(run("construct --type gls --n 10 --delta 4 --out " + graph_file)
            .exit_code == 0);
  const RunResult count = run("count --input " + graph_file + " --t 3");
  CHECK(count.exit_code == 0);
  CHECK(count.output == "20\n");

  const std::string disjoint_file = temp_path("disjoint.txt");
  CHECK(run("construct --type disjoint --sizes 3,3,3,3,3 --out " +
            disjoint_file)
            .exit_code == 0);
  std::ifstream in(disjoint_file);
  int n = 0, m = 0;
  in >> n >> m;
  CHECK(n == 15);
  CHECK(m == 15);
  const RunResult k3 = run("count --input " + disjoint_file + " --t 3");
  CHECK(k3.output == "5\n");

  const std::string hyper_file = temp_path("hyper.txt");
  CHECK(run("construct --type hyper-complete --u 5 --r 3 --out " + hyper_file)
            .exit_code == 0);
  const RunResult k4 =
      run("count --input " + hyper_file + " --t 4 --hyper");
  CHECK(k4.output == "5\n");
}

TEST_CASE("verify exits 0 without violations and prints a report") {
  const RunResult r = run("verify --suite graphs-exhaustive --n 4 --t 3 "
                          "--p-list 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("violations: 0") != std::string::npos);
  CHECK(r.output.find("result: PASS") != std::string::npos);

  const RunResult tight = run(
      "verify --suite tightness --construction disjoint --u 3 --m 5 --t 3 "
      "--p 3");
  CHECK(tight.exit_code == 0);
  CHECK(tight.output.find("ratio: 1") != std::string::npos);

  const RunResult prop9 = run("verify --suite prop9 --p 3 --t 3");
  CHECK(prop9.exit_code == 0);
  CHECK(prop9.output.find("s_real: 3") != std::string::npos);

  // non-extremal tightness specs are usage errors, not failures
  CHECK(run("verify --suite tightness --construction disjoint --u 7 --m 2 "
            "--t 3 --p 3")
            .exit_code == 2);
}

TEST_CASE("verify json round trips through the report schema") {
  const RunResult r = run("verify --suite graphs-exhaustive --n 4 --t 3 "
                          "--p-list 1,3 --json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("suite") == "graphs-exhaustive");
  CHECK(j.at("instances_checked") == 64);
  CHECK(j.at("violation_count") == 0);
  CHECK(j.at("per_p").size() == 2);
}

TEST_CASE("entropy command") {
  const std::string file = temp_path("k4.txt");
  REQUIRE(run("construct --type clique --u 4 --out " + file).exit_code == 0);
  const RunResult r = run("entropy --input " + file + " --t 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("x: 4 3 2") != std::string::npos);
  CHECK(r.output.find("chain: ok") != std::string::npos);
  CHECK(r.output.find("product: 24") != std::string::npos);

  const RunResult with_claims =
      run("entropy --input " + file + " --t 3 --p 1 --u 4");
  CHECK(with_claims.exit_code == 0);
  CHECK(with_claims.output.find("claim6:") != std::string::npos);
  CHECK(with_claims.output.find("claim5:") != std::string::npos);

  // no 4-clique in a triangle: exit 2
  const std::string tri = temp_path("tri.txt");
  REQUIRE(run("construct --type clique --u 3 --out " + tri).exit_code == 0);
  CHECK(run("entropy --input " + tri + " --t 4").exit_code == 2);

  // hypergraph route with the subcritical diagnostic
  const std::string hyper = temp_path("k5_hyper.txt");
  REQUIRE(run("construct --type hyper-complete --u 5 --r 3 --out " + hyper)
              .exit_code == 0);
  const RunResult hyper_chain = run("entropy --input " + hyper +
                                    " --t 4 --hyper --r 3 --j 1 --p 1 --u 4.5");
  CHECK(hyper_chain.exit_code == 0);
  CHECK(hyper_chain.output.find("x: 5 4 3 2") != std::string::npos);
  CHECK(hyper_chain.output.find("ok: yes") != std::string::npos);
}

TEST_CASE("sweep emits ordered CSV with one regime flip") {
  const std::string csv = temp_path("sweep.csv");
  const RunResult r = run("sweep --t 3 --C 12 --p-from 0.5 --p-to 5 "
                          "--steps 10 --out " + csv);
  CHECK(r.exit_code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,regime,u,bound");
  int flips = 0;
  std::string prev_regime;
  double prev_p = 0.0;
  std::string line;
  int rows = 0;
  bool saw_p1_bound4 = false;
  while (std::getline(in, line)) {
    ++rows;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const auto c3 = line.find(',', c2 + 1);
    const double p = std::stod(line.substr(0, c1));
    const std::string regime = line.substr(c1 + 1, c2 - c1 - 1);
    const double bound = std::stod(line.substr(c3 + 1));
    CHECK(p > prev_p);
    prev_p = p;
    if (!prev_regime.empty() && regime != prev_regime) ++flips;
    prev_regime = regime;
    CHECK((regime == "sub") == (p <= 2.0));
    if (p == 1.0) saw_p1_bound4 = bound > 3.999 && bound < 4.001;
  }
  CHECK(rows == 10);
  CHECK(flips == 1);
  CHECK(saw_p1_bound4);

  CHECK(run("sweep --t 3 --C 12 --p-from 5 --p-to 1 --steps 3 --out -")
            .exit_code == 2);
}
