/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "piqec/io.hpp"

namespace {

using namespace piqec;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Options {
  std::string code_file;
  std::string channel_file;
  std::string state_file;
  std::string problem_file;
  std::string result_file = "search_result.json";
  std::string code_output;
  std::string family = "insertion";
  std::string order;
  std::string format = "text";
  std::string family_name_arg;
  int t = 0;
  int s = 0;
  int g = 2;
  int n = 2;
  int max_qubits = kDefaultMaxQubits;
  std::uint64_t seed = 20260816;
  double tol_conditions = kConditionTol;
  double tol_oracle = kOracleTol;
  bool with_oracle = false;
  bool verbose = false;
  bool json() const { return format == "json"; }
};

void warn_max_qubits(const Options& opt) {
  if (opt.max_qubits > kDefaultMaxQubits)
    std::cerr << "warning: raising the dense-representation limit to "
              << opt.max_qubits
              << " qubits; memory and time grow exponentially\n";
}

void emit(const Json& value) {
  std::cout << dump_deterministic(value) << "\n";
}

int run_check(const Options& opt) {
  warn_max_qubits(opt);
  const PICode code =
      code_from_json(load_json_file(opt.code_file));
  const ConditionFamily family = family_from_name(opt.family);
  const ConditionReport report =
      eval_conditions(code, family, opt.t, opt.s, opt.tol_conditions);
  if (opt.json())
    emit(condition_report_to_json(report));
  else
    print_condition_report(std::cout, report, opt.verbose);
  return report.passed ? kExitPass : kExitFail;
}

int run_oracle(const Options& opt) {
  warn_max_qubits(opt);
  const PICode code = code_from_json(load_json_file(opt.code_file));
  ConditionFamily family;
  if (!opt.order.empty()) {
    if (opt.order == "semi")
      family = ConditionFamily::semi_insdel;
    else if (opt.order == "full")
      family = ConditionFamily::full_insdel;
    else
      throw std::runtime_error("--order must be semi or full");
  } else if (opt.t > 0 && opt.s > 0) {
    throw std::runtime_error(
        "both insertions and deletions requested: pass --order semi "
        "(delete first) or --order full (insert first)");
  } else {
    family = opt.s > 0 ? ConditionFamily::deletion
                       : ConditionFamily::insertion;
  }
  const KLResult result = oracle_check(code, family, opt.t, opt.s,
                                       opt.tol_oracle, opt.max_qubits);
  if (opt.json())
    emit(kl_result_to_json(result));
  else
    print_kl_result(std::cout, result);
  return result.passed ? kExitPass : kExitFail;
}

int run_equivalence(const Options& opt) {
  warn_max_qubits(opt);
  const Json input = load_json_file(opt.code_file);
  const std::vector<PICode> codes = codes_from_json(input);
  bool all_agree = true;
  Json rows = Json::array();
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const PICode& code = codes[i];
    const EquivalenceReport report =
        equivalence_check(code, opt.t, opt.tol_conditions);
    bool agree = report.agree;
    Json row = equivalence_report_to_json(report);
    if (opt.with_oracle) {
      const KLResult ins_oracle = oracle_insertion(
          code, opt.t, opt.tol_oracle, opt.max_qubits);
      bool oracle_matches = ins_oracle.passed == report.insertion_passed;
      Json per_s = Json::array();
      for (int s = 0; s <= opt.t; ++s) {
        const KLResult del_oracle =
            oracle_deletion(code, s, opt.tol_oracle, opt.max_qubits);
        per_s.push_back(del_oracle.passed);
        oracle_matches = oracle_matches &&
                         del_oracle.passed == report.deletions[s].passed;
      }
      row["oracle_insertion_passed"] = ins_oracle.passed;
      row["oracle_deletion_passed_per_s"] = std::move(per_s);
      row["oracle_matches"] = oracle_matches;
      agree = agree && oracle_matches;
    }
    all_agree = all_agree && agree;
    if (!opt.json()) {
      if (codes.size() > 1)
        std::cout << "--- code " << i << " ---\n";
      print_equivalence_report(std::cout, report, opt.verbose);
      if (opt.with_oracle)
        std::cout << "  oracle matches:       "
                  << (agree == report.agree ? "yes" : "no") << "\n";
    }
    rows.push_back(std::move(row));
  }
  if (opt.json()) {
    if (input.is_array()) {
      Json batch;
      batch["type"] = "equivalence_batch";
      batch["all_agree"] = all_agree;
      batch["reports"] = std::move(rows);
      emit(batch);
    } else {
      emit(rows[0]);
    }
  }
  return all_agree ? kExitPass : kExitFail;
}

int run_swap_lemma(const Options& opt) {
  warn_max_qubits(opt);
  const ChannelSpec spec =
      channel_spec_from_json(load_json_file(opt.channel_file));
  const Matrix rho =
      state_from_json(load_json_file(opt.state_file), opt.max_qubits);
  const SwapLemmaCertificate cert = swap_lemma_verify(
      rho, spec, opt.tol_oracle, opt.max_qubits, opt.seed);
  if (opt.json())
    emit(swap_certificate_to_json(cert, opt.verbose));
  else
    print_swap_certificate(std::cout, cert, opt.verbose);
  return cert.passed ? kExitPass : kExitFail;
}

int run_search(const Options& opt, bool seed_overridden) {
  warn_max_qubits(opt);
  SearchProblem problem =
      search_problem_from_json(load_json_file(opt.problem_file));
  if (seed_overridden)
    problem.seed = opt.seed;
  const SearchResult result = find_code(problem);
  write_json_file(opt.result_file, search_result_to_json(result));
  if (result.code && !opt.code_output.empty())
    write_json_file(opt.code_output, code_to_json(*result.code));
  if (opt.json())
    emit(search_result_to_json(result));
  else {
    print_search_result(std::cout, result);
    std::cout << "  result file:      " << opt.result_file << "\n";
    if (result.code && !opt.code_output.empty())
      std::cout << "  code file:        " << opt.code_output << "\n";
  }
  return result.converged ? kExitPass : kExitFail;
}

int run_families(const Options& opt) {
  if (opt.family_name_arg.empty()) {
    if (opt.json()) {
      Json rows = Json::array();
      for (const CodeFamily& family : code_registry()) {
        Json row;
        row["name"] = family.name;
        row["description"] = family.description;
        row["takes_parameters"] = family.takes_parameters;
        rows.push_back(std::move(row));
      }
      emit(rows);
    } else {
      for (const CodeFamily& family : code_registry())
        std::cout << family.name
                  << (family.takes_parameters ? " (parametric)" : "")
                  << ": " << family.description << "\n";
    }
    return kExitPass;
  }
  const CodeFamily* family = find_code_family(opt.family_name_arg);
  if (family == nullptr)
    throw std::runtime_error("unknown code family: " + opt.family_name_arg);
  const PICode code = family->make(opt.g, opt.n);
  emit(code_to_json(code));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification and discovery tools for permutation-invariant qubit "
      "codes under insertion and deletion errors"};
  app.set_version_flag("--version", "piqec 0.1.0");
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--max-qubits", opt.max_qubits,
                    "Dense-representation qubit limit")
        ->capture_default_str();
    cmd->add_flag("--verbose", opt.verbose, "Include full tables in output");
  };

  CLI::App* check = app.add_subcommand(
      "check", "Evaluate the closed-form correctability conditions");
  check->add_option("code", opt.code_file, "Code JSON file")->required();
  check->add_option("--family", opt.family,
                    "insertion | deletion | semi-insdel | full-insdel")
      ->required();
  check->add_option("-t", opt.t, "Number of insertions");
  check->add_option("-s", opt.s, "Number of deletions");
  check->add_option("--tol-conditions", opt.tol_conditions,
                    "Residual tolerance")
      ->capture_default_str();
  add_common(check);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Run the numerical correctability check over spanning sets");
  oracle->add_option("code", opt.code_file, "Code JSON file")->required();
  oracle->add_option("-t", opt.t, "Number of insertions");
  oracle->add_option("-s", opt.s, "Number of deletions");
  oracle->add_option("--order", opt.order,
                     "semi (delete first) | full (insert first)");
  oracle->add_option("--tol-oracle", opt.tol_oracle, "Violation tolerance")
      ->capture_default_str();
  add_common(oracle);

  CLI::App* equivalence = app.add_subcommand(
      "equivalence",
      "Compare t-insertion conditions against 0..t-deletion conditions");
  equivalence->add_option("code", opt.code_file,
                          "Code JSON file (object or array)")
      ->required();
  equivalence->add_option("-t", opt.t, "Number of insertions")->required();
  equivalence->add_flag("--with-oracle", opt.with_oracle,
                        "Also require oracle verdicts to match");
  equivalence->add_option("--tol-conditions", opt.tol_conditions,
                          "Residual tolerance")
      ->capture_default_str();
  equivalence->add_option("--tol-oracle", opt.tol_oracle,
                          "Oracle tolerance (with --with-oracle)")
      ->capture_default_str();
  add_common(equivalence);

  CLI::App* swap = app.add_subcommand(
      "swap-lemma",
      "Certify the deletion/insertion reordering identity on a state");
  swap->add_option("channel", opt.channel_file, "Channel JSON file")
      ->required();
  swap->add_option("--state", opt.state_file, "State JSON file")->required();
  swap->add_option("--tol-oracle", opt.tol_oracle, "Certificate tolerance")
      ->capture_default_str();
  swap->add_option("--seed", opt.seed,
                   "Seed for the permutation-invariance spot check")
      ->capture_default_str();
  add_common(swap);

  CLI::App* search = app.add_subcommand(
      "search", "Search for code coefficients by damped least squares");
  search->add_option("problem", opt.problem_file, "Problem JSON file")
      ->required();
  search->add_option("-o,--output", opt.result_file, "Result JSON file")
      ->capture_default_str();
  search->add_option("--code-output", opt.code_output,
                     "Also write the discovered code here");
  CLI::Option* seed_opt =
      search->add_option("--seed", opt.seed, "Override the problem seed");
  add_common(search);

  CLI::App* families = app.add_subcommand(
      "families", "List or materialize built-in code families");
  families->add_option("name", opt.family_name_arg,
                       "Family to materialize (omit to list)");
  families->add_option("--g", opt.g, "Spacing parameter")
      ->capture_default_str();
  families->add_option("--n", opt.n, "Level-count parameter")
      ->capture_default_str();
  add_common(families);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (app.got_subcommand(check))
      return run_check(opt);
    if (app.got_subcommand(oracle))
      return run_oracle(opt);
    if (app.got_subcommand(equivalence))
      return run_equivalence(opt);
    if (app.got_subcommand(swap))
      return run_swap_lemma(opt);
    if (app.got_subcommand(search))
      return run_search(opt, seed_opt->count() > 0);
    if (app.got_subcommand(families))
      return run_families(opt);
    std::cerr << "error: no command selected\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
