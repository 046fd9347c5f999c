/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "piqec/io.hpp"

using namespace piqec;

namespace {

const char* kScratch = "piqec_cli_scratch";

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string scratch_path(const std::string& name) {
  return std::string(kScratch) + "/" + name;
}

void write_file(const std::string& name, const std::string& content) {
  std::ofstream out(scratch_path(name));
  out << content;
}

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("PIQEC_CLI");
  REQUIRE(cli != nullptr);
  const std::string out_path = scratch_path("stdout.txt");
  const std::string err_path = scratch_path("stderr.txt");
  const std::string command =
      std::string(cli) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

void write_four_qubit_code(const std::string& name) {
  write_file(name, dump_deterministic(code_to_json(gnu_code(2, 2))));
}

}  // namespace

TEST_CASE("check evaluates conditions with spec-mandated exit codes") {
  write_four_qubit_code("code.json");

  const RunResult pass =
      run_cli("check " + scratch_path("code.json") + " --family insertion -t 1");
  CHECK(pass.code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);

  const RunResult fail =
      run_cli("check " + scratch_path("code.json") + " --family insertion -t 2");
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);

  const RunResult semi = run_cli("check " + scratch_path("code.json") +
                                 " --family semi-insdel -t 1 -s 1");
  CHECK(semi.code == 1);

  // Usage problems and bad input exit with 2.
  CHECK(run_cli("check " + scratch_path("code.json")).code == 2);
  CHECK(run_cli("check missing_file.json --family insertion -t 1").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("check " + scratch_path("code.json") +
                " --family no-such-family -t 1")
            .code == 2);
}

TEST_CASE("json output is parseable and byte-stable across runs") {
  write_four_qubit_code("code.json");
  const std::string args = "check " + scratch_path("code.json") +
                           " --family deletion -s 1 --format json";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  const Json parsed = Json::parse(first.out);
  CHECK(parsed["passed"] == true);
  CHECK(parsed["family"] == "deletion");
  CHECK(parsed["terms"].size() == 8);
}

TEST_CASE("oracle resolves the family from flags") {
  write_four_qubit_code("code.json");
  const std::string code = scratch_path("code.json");

  CHECK(run_cli("oracle " + code + " -t 1").code == 0);
  CHECK(run_cli("oracle " + code + " -s 2").code == 1);
  // Mixed counts need an explicit order.
  const RunResult ambiguous = run_cli("oracle " + code + " -t 1 -s 1");
  CHECK(ambiguous.code == 2);
  CHECK(ambiguous.err.find("--order") != std::string::npos);
  CHECK(run_cli("oracle " + code + " -t 1 -s 1 --order semi").code == 1);
  CHECK(run_cli("oracle " + code + " -t 1 -s 1 --order sideways").code == 2);

  const RunResult json =
      run_cli("oracle " + code + " -s 1 --format json");
  CHECK(json.code == 0);
  const Json parsed = Json::parse(json.out);
  CHECK(parsed["num_operators"] == 8);
  CHECK(parsed["passed"] == true);
}

TEST_CASE("equivalence handles single codes and batches") {
  write_four_qubit_code("code.json");
  const RunResult single = run_cli("equivalence " + scratch_path("code.json") +
                                   " -t 1 --format json");
  CHECK(single.code == 0);
  const Json report = Json::parse(single.out);
  CHECK(report["agree"] == true);
  CHECK(report["max_term_gap"] == 0.0);

  const RunResult with_oracle = run_cli(
      "equivalence " + scratch_path("code.json") + " -t 1 --with-oracle");
  CHECK(with_oracle.code == 0);

  // A batch mixes a passing and a failing code; verdict agreement holds for
  // both, so the run exits 0.
  Json batch = Json::array();
  batch.push_back(code_to_json(gnu_code(2, 2)));
  batch.push_back(code_to_json(gnu_code(1, 1)));
  write_file("batch.json", dump_deterministic(batch));
  const RunResult batched = run_cli("equivalence " + scratch_path("batch.json") +
                                    " -t 1 --format json");
  CHECK(batched.code == 0);
  const Json parsed = Json::parse(batched.out);
  CHECK(parsed["type"] == "equivalence_batch");
  CHECK(parsed["all_agree"] == true);
  CHECK(parsed["reports"].size() == 2);
  CHECK(parsed["reports"][0]["insertion_passed"] == true);
  CHECK(parsed["reports"][1]["insertion_passed"] == false);
}

TEST_CASE("swap-lemma certifies channels against states") {
  Json channel;
  channel["kind"] = "full-insdel";
  channel["t"] = 1;
  channel["s"] = 1;
  write_file("channel.json", dump_deterministic(channel));

  Json state;
  state["random_pi"] = Json{{"N", 2}, {"seed", 9}};
  write_file("state.json", dump_deterministic(state));

  const RunResult pass = run_cli("swap-lemma " + scratch_path("channel.json") +
                                 " --state " + scratch_path("state.json") +
                                 " --format json");
  CHECK(pass.code == 0);
  const Json cert = Json::parse(pass.out);
  CHECK(cert["passed"] == true);
  CHECK(cert["ell_weights"].size() == 2);

  // A non-invariant state is refused as invalid input: this one treats
  // |01> and |10> differently.
  Json zero4 = Json::array({Json::array({0.0, 0.0}), Json::array({0.0, 0.0}),
                            Json::array({0.0, 0.0}), Json::array({0.0, 0.0})});
  Json rho_rows = Json::array({zero4, zero4, zero4, zero4});
  rho_rows[0][0] = Json::array({0.7, 0.0});
  rho_rows[1][1] = Json::array({0.3, 0.0});
  Json biased;
  biased["dense"] = Json{{"N", 2}, {"rho", rho_rows}};
  write_file("biased.json", dump_deterministic(biased));
  Json tiny;
  tiny["kind"] = "full-insdel";
  tiny["t"] = 1;
  tiny["s"] = 1;
  write_file("tiny_channel.json", dump_deterministic(tiny));
  const RunResult rejected =
      run_cli("swap-lemma " + scratch_path("tiny_channel.json") + " --state " +
              scratch_path("biased.json"));
  CHECK(rejected.code == 2);
  CHECK(rejected.err.find("error:") != std::string::npos);
}

TEST_CASE("search writes result and code files") {
  Json trivial;
  trivial["N"] = 2;
  trivial["family"] = "deletion";
  trivial["s"] = 0;
  write_file("trivial_problem.json", dump_deterministic(trivial));
  const std::string result_path = scratch_path("result.json");
  const std::string code_path = scratch_path("found_code.json");
  const RunResult ok = run_cli("search " + scratch_path("trivial_problem.json") +
                               " -o " + result_path + " --code-output " +
                               code_path + " --format json");
  CHECK(ok.code == 0);
  const Json result = load_json_file(result_path);
  CHECK(result["converged"] == true);
  CHECK(Json::parse(ok.out) == result);
  // The emitted code file parses and passes validation on load.
  CHECK(code_from_json(load_json_file(code_path)).N == 2);

  Json infeasible;
  infeasible["N"] = 1;
  infeasible["family"] = "insertion";
  infeasible["t"] = 1;
  infeasible["num_starts"] = 2;
  infeasible["max_iterations"] = 60;
  write_file("infeasible_problem.json", dump_deterministic(infeasible));
  const std::string miss_path = scratch_path("miss.json");
  const RunResult miss = run_cli("search " +
                                 scratch_path("infeasible_problem.json") +
                                 " -o " + miss_path + " --seed 5");
  CHECK(miss.code == 1);
  const Json miss_result = load_json_file(miss_path);
  CHECK(miss_result["converged"] == false);
  CHECK(miss_result["starts"][0]["seed"] == 5);  // --seed override applies
}

TEST_CASE("families lists and materializes built-in codes") {
  const RunResult list = run_cli("families");
  CHECK(list.code == 0);
  CHECK(list.out.find("gnu") != std::string::npos);
  CHECK(list.out.find("four-qubit") != std::string::npos);
  CHECK(list.out.find("bare-qubit") != std::string::npos);

  const RunResult json_list = run_cli("families --format json");
  CHECK(Json::parse(json_list.out).size() == 3);

  const RunResult made = run_cli("families gnu --g 2 --n 3");
  CHECK(made.code == 0);
  const PICode code = code_from_json(Json::parse(made.out));
  CHECK(code.N == 6);

  CHECK(run_cli("families atlantis").code == 2);
}

TEST_CASE("max-qubits guard refuses oversized dense work") {
  write_four_qubit_code("code.json");
  const RunResult blocked =
      run_cli("oracle " + scratch_path("code.json") + " -t 11");
  CHECK(blocked.code == 2);
  CHECK(blocked.err.find("error:") != std::string::npos);

  // Raising the limit is allowed but warned about.
  const RunResult raised = run_cli("check " + scratch_path("code.json") +
                                   " --family insertion -t 1 --max-qubits 20");
  CHECK(raised.code == 0);
  CHECK(raised.err.find("warning:") != std::string::npos);
}

TEST_CASE("version flag reports the tool identity") {
  const RunResult version = run_cli("--version");
  CHECK(version.code == 0);
  CHECK(version.out.find("piqec") != std::string::npos);
}

int run_all(int argc, char** argv) {
  doctest::Context context(argc, argv);
  return context.run();
}

int main(int argc, char** argv) {
  std::filesystem::create_directories(kScratch);
  const int rc = run_all(argc, argv);
  std::error_code ignored;
  std::filesystem::remove_all(kScratch, ignored);
  return rc;
}
