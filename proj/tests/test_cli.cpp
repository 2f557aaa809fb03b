#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QIPM_CLI_PATH) + " " + args + " 2>cli_stderr.txt";
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("solve writes the optimum") {
  put("cli_lp.json", R"({"A": [[1, 1]], "b": [1], "c": [1, 2]})");
  CHECK(run_cli("solve --input cli_lp.json --output cli_sol.json --trace cli_trace.csv") == 0);
  const auto doc = nlohmann::json::parse(slurp("cli_sol.json"));
  CHECK(doc.at("status") == "Optimal");
  CHECK(doc.at("primal_objective").get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(doc.at("trace_path") == "cli_trace.csv");
  CHECK(count_lines(slurp("cli_trace.csv")) == doc.at("iterations").get<int>() + 1);
}

TEST_CASE("qlsa traces are byte-identical per seed") {
  put("cli_lp.json", R"({"A": [[1, 1]], "b": [1], "c": [1, 2]})");
  const std::string base = "solve --input cli_lp.json --backend qlsa --epsilon 0.05 --seed 7 --output cli_q.json";
  CHECK(run_cli(base + " --trace cli_q1.csv") == 0);
  CHECK(run_cli(base + " --trace cli_q2.csv") == 0);
  const std::string a = slurp("cli_q1.csv");
  CHECK_FALSE(a.empty());
  CHECK(a == slurp("cli_q2.csv"));
}

TEST_CASE("exit codes for bad input and infeasibility") {
  CHECK(run_cli("solve --input does_not_exist.json") == 1);
  CHECK(run_cli("solve") == 1);
  put("cli_lp.json", R"({"A": [[1, 1]], "b": [1], "c": [1, 2]})");
  CHECK(run_cli("solve --input cli_lp.json --backend magic") == 1);
  put("cli_bad.json", R"({"A": [[1, 1], [2]], "b": [1, 1], "c": [1, 2]})");
  CHECK(run_cli("solve --input cli_bad.json") == 1);
  put("cli_inf.json", R"({"A": [[1]], "b": [-1], "c": [1]})");
  CHECK(run_cli("solve --input cli_inf.json --output cli_inf_out.json") == 2);
  CHECK(nlohmann::json::parse(slurp("cli_inf_out.json")).at("status") == "PrimalInfeasible");
  put("cli_unb.json", R"({"A": [[1, -1]], "b": [0], "c": [-1, 0]})");
  CHECK(run_cli("solve --input cli_unb.json --output cli_unb_out.json") == 2);
  CHECK(run_cli("solve --input cli_lp.json --max-iterations 2 --output cli_nc.json") == 3);
  CHECK(run_cli("--help > cli_help.txt") == 0);
}

TEST_CASE("sweep aggregates per size") {
  CHECK(run_cli("sweep --sizes 4,8 --count 3 --backend exact --output cli_sweep.csv --trace cli_sweep_trace.csv") ==
        0);
  const std::string csv = slurp("cli_sweep.csv");
  CHECK(csv.rfind("n,m,backend,median_iterations,median_cost,median_kappa\n", 0) == 0);
  CHECK(count_lines(csv) == 3);
  CHECK(csv.find("\n4,2,exact,") != std::string::npos);
  CHECK(csv.find("\n8,4,exact,") != std::string::npos);
  CHECK(slurp("cli_sweep_trace.csv").rfind("n,instance,backend,t,", 0) == 0);

  CHECK(run_cli("sweep --sizes 4,x --count 1") == 1);
}
