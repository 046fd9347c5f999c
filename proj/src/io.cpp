/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace piqec {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::runtime_error(message);
}

std::string format_double(double value) {
  if (!std::isfinite(value))
    fail("cannot serialize a non-finite number");
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  std::string out = buffer;
  // Keep floats recognizably floats across a round-trip.
  if (out.find_first_of(".eE") == std::string::npos)
    out += ".0";
  return out;
}

void dump_value(std::string& out, const Json& value, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1),
                           ' ');
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first)
          out += ",\n";
        first = false;
        out += pad_in + Json(key).dump() + ": ";
        dump_value(out, item, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& item : value) {
        if (!first)
          out += ",\n";
        first = false;
        out += pad_in;
        dump_value(out, item, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(value.get<double>());
      return;
    default:
      // Integers, strings, booleans and null have canonical spellings.
      out += value.dump();
      return;
  }
}

int require_int(const Json& value, const char* field) {
  if (!value.contains(field) || !value[field].is_number_integer())
    fail(std::string("missing or non-integer field \"") + field + "\"");
  return value[field].get<int>();
}

double number_or(const Json& value, const char* field, double fallback) {
  if (!value.contains(field))
    return fallback;
  if (!value[field].is_number())
    fail(std::string("field \"") + field + "\" must be a number");
  return value[field].get<double>();
}

int int_or(const Json& value, const char* field, int fallback) {
  if (!value.contains(field))
    return fallback;
  if (!value[field].is_number_integer())
    fail(std::string("field \"") + field + "\" must be an integer");
  return value[field].get<int>();
}

const char* verdict(bool passed) { return passed ? "PASS" : "FAIL"; }

std::string fmt(double value) { return format_double(value); }

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& err) {
    fail("cannot parse " + path + ": " + err.what());
  }
}

void write_json_file(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out)
    fail("cannot open file for writing: " + path);
  out << dump_deterministic(value) << "\n";
  if (!out)
    fail("write failed: " + path);
}

std::string dump_deterministic(const Json& value, int indent) {
  std::string out;
  dump_value(out, value, indent, 0);
  return out;
}

Complex complex_from_json(const Json& value) {
  if (value.is_number())
    return Complex(value.get<double>(), 0.0);
  if (value.is_array() && value.size() == 2 && value[0].is_number() &&
      value[1].is_number())
    return Complex(value[0].get<double>(), value[1].get<double>());
  fail("expected a number or an [re, im] pair");
}

Json complex_to_json(const Complex& value) {
  return Json::array({value.real(), value.imag()});
}

Vector complex_vector_from_json(const Json& value) {
  if (!value.is_array())
    fail("expected an array of complex entries");
  Vector out(value.size());
  Index at = 0;
  for (const Json& item : value)
    out(at++) = complex_from_json(item);
  return out;
}

Json complex_vector_to_json(const Vector& value) {
  Json out = Json::array();
  for (Index i = 0; i < value.size(); ++i)
    out.push_back(complex_to_json(value(i)));
  return out;
}

PICode code_from_json(const Json& value, double tol) {
  if (!value.is_object())
    fail("code document must be an object");
  const int N = require_int(value, "N");
  if (!value.contains("alpha") || !value.contains("beta"))
    fail("code document needs \"alpha\" and \"beta\" arrays");
  return make_pi_code(N, complex_vector_from_json(value["alpha"]),
                      complex_vector_from_json(value["beta"]), tol);
}

std::vector<PICode> codes_from_json(const Json& value, double tol) {
  std::vector<PICode> out;
  if (value.is_array()) {
    for (const Json& item : value)
      out.push_back(code_from_json(item, tol));
  } else {
    out.push_back(code_from_json(value, tol));
  }
  return out;
}

Json code_to_json(const PICode& code) {
  Json out;
  out["N"] = code.N;
  out["alpha"] = complex_vector_to_json(code.alpha);
  out["beta"] = complex_vector_to_json(code.beta);
  return out;
}

std::string family_name(ConditionFamily family) {
  switch (family) {
    case ConditionFamily::insertion:
      return "insertion";
    case ConditionFamily::deletion:
      return "deletion";
    case ConditionFamily::semi_insdel:
      return "semi-insdel";
    case ConditionFamily::full_insdel:
      return "full-insdel";
  }
  return "unknown";
}

ConditionFamily family_from_name(std::string_view name) {
  if (name == "insertion")
    return ConditionFamily::insertion;
  if (name == "deletion")
    return ConditionFamily::deletion;
  if (name == "semi-insdel")
    return ConditionFamily::semi_insdel;
  if (name == "full-insdel")
    return ConditionFamily::full_insdel;
  fail("unknown family: " + std::string(name) +
       " (expected insertion | deletion | semi-insdel | full-insdel)");
}

std::string channel_kind_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::insertion:
      return "insertion";
    case ChannelKind::deletion:
      return "deletion";
    case ChannelKind::semi_insdel:
      return "semi-insdel";
    case ChannelKind::full_insdel:
      return "full-insdel";
  }
  return "unknown";
}

ChannelKind channel_kind_from_name(std::string_view name) {
  if (name == "insertion")
    return ChannelKind::insertion;
  if (name == "deletion")
    return ChannelKind::deletion;
  if (name == "semi-insdel")
    return ChannelKind::semi_insdel;
  if (name == "full-insdel")
    return ChannelKind::full_insdel;
  fail("unknown channel kind: " + std::string(name));
}

ChannelSpec channel_spec_from_json(const Json& value) {
  if (!value.is_object())
    fail("channel document must be an object");
  if (!value.contains("kind") || !value["kind"].is_string())
    fail("channel document needs a \"kind\" string");
  ChannelSpec spec;
  spec.kind = channel_kind_from_name(value["kind"].get<std::string>());
  spec.t = int_or(value, "t", 0);
  spec.s = int_or(value, "s", 0);
  if (spec.t < 0 || spec.s < 0)
    fail("channel counts must be non-negative");

  if (value.contains("structures") && !value["structures"].is_string()) {
    if (!value["structures"].is_array())
      fail("\"structures\" must be \"uniform\" or an array");
    for (const Json& item : value["structures"]) {
      if (!item.contains("parts") || !item["parts"].is_array())
        fail("each structure needs a \"parts\" array");
      InsertionStructure a;
      for (const Json& part : item["parts"])
        a.parts.push_back(part.get<int>());
      spec.structure_distribution.emplace_back(std::move(a),
                                               number_or(item, "p", -1.0));
    }
  }
  if (value.contains("insertion_states") &&
      !value["insertion_states"].is_string()) {
    if (!value["insertion_states"].is_array())
      fail("\"insertion_states\" must be \"mixed\" or an array");
    for (const Json& item : value["insertion_states"]) {
      if (!item.contains("amplitudes"))
        fail("each insertion state needs an \"amplitudes\" array");
      InsertionState state{spec.t,
                           complex_vector_from_json(item["amplitudes"])};
      spec.insertion_states.emplace_back(std::move(state),
                                         number_or(item, "weight", -1.0));
    }
  }
  if (value.contains("deletions") && !value["deletions"].is_string()) {
    if (!value["deletions"].is_array())
      fail("\"deletions\" must be \"uniform\" or an array");
    for (const Json& item : value["deletions"]) {
      if (!item.contains("positions") || !item["positions"].is_array())
        fail("each deletion entry needs a \"positions\" array");
      DeletionSet d;
      for (const Json& pos : item["positions"])
        d.indices.push_back(pos.get<int>());
      spec.deletion_distribution.emplace_back(std::move(d),
                                              number_or(item, "p", -1.0));
    }
  }
  return spec;
}

Matrix state_from_json(const Json& value, int max_qubits) {
  if (!value.is_object() || value.size() != 1)
    fail("state document must be an object with exactly one of "
         "\"random_pi\", \"logical\", \"dicke\", \"dense\"");
  if (value.contains("random_pi")) {
    const Json& spec = value["random_pi"];
    const int N = require_int(spec, "N");
    Rng rng(static_cast<std::uint64_t>(require_int(spec, "seed")));
    return random_pi_density(N, rng, max_qubits);
  }
  if (value.contains("logical")) {
    const Json& spec = value["logical"];
    if (!spec.contains("code"))
      fail("\"logical\" state needs a \"code\" object");
    const PICode code = code_from_json(spec["code"]);
    const Complex c0 = complex_from_json(spec.value("c0", Json(1.0)));
    const Complex c1 = complex_from_json(spec.value("c1", Json(0.0)));
    const Vector psi = to_dense(logical_state(code, c0, c1), max_qubits);
    return psi * psi.adjoint();
  }
  if (value.contains("dicke")) {
    const Json& spec = value["dicke"];
    const int N = require_int(spec, "N");
    if (!spec.contains("matrix") || !spec["matrix"].is_array())
      fail("\"dicke\" state needs a \"matrix\" array of rows");
    Matrix coeff(N + 1, N + 1);
    if (static_cast<int>(spec["matrix"].size()) != N + 1)
      fail("\"dicke\" matrix must have N + 1 rows");
    for (int r = 0; r <= N; ++r) {
      const Vector row = complex_vector_from_json(spec["matrix"][r]);
      if (row.size() != N + 1)
        fail("\"dicke\" matrix must have N + 1 columns");
      coeff.row(r) = row.transpose();
    }
    return dicke_density(N, coeff, max_qubits);
  }
  if (value.contains("dense")) {
    const Json& spec = value["dense"];
    const int N = require_int(spec, "N");
    if (N > max_qubits)
      throw ResourceGuardError("dense state exceeds the qubit limit");
    const Index dim = dim_for(N);
    if (!spec.contains("rho") ||
        static_cast<Index>(spec["rho"].size()) != dim)
      fail("\"dense\" state needs a 2^N x 2^N \"rho\" array");
    Matrix rho(dim, dim);
    for (Index r = 0; r < dim; ++r) {
      const Vector row = complex_vector_from_json(spec["rho"][r]);
      if (row.size() != dim)
        fail("\"dense\" state needs a 2^N x 2^N \"rho\" array");
      rho.row(r) = row.transpose();
    }
    return rho;
  }
  fail("unrecognized state document");
}

SearchProblem search_problem_from_json(const Json& value) {
  if (!value.is_object())
    fail("problem document must be an object");
  SearchProblem problem;
  problem.N = require_int(value, "N");
  if (!value.contains("family") || !value["family"].is_string())
    fail("problem document needs a \"family\" string");
  problem.family = family_from_name(value["family"].get<std::string>());
  problem.t = int_or(value, "t", 0);
  problem.s = int_or(value, "s", 0);
  problem.penalty_weight = number_or(value, "penalty_weight", 1.0);
  problem.seed =
      static_cast<std::uint64_t>(int_or(value, "seed", 1));
  problem.num_starts = int_or(value, "num_starts", 8);
  problem.max_iterations = int_or(value, "max_iterations", 400);
  problem.success_threshold =
      number_or(value, "success_threshold", 1e-12);
  problem.condition_tol = number_or(value, "condition_tol", kConditionTol);
  problem.oracle_tol = number_or(value, "oracle_tol", kOracleTol);
  problem.max_qubits = int_or(value, "max_qubits", kDefaultMaxQubits);
  return problem;
}

Json condition_report_to_json(const ConditionReport& report) {
  Json out;
  out["type"] = "condition_report";
  out["family"] = family_name(report.family);
  out["N"] = report.N;
  out["t"] = report.t;
  out["s"] = report.s;
  out["tolerance"] = report.tolerance;
  out["passed"] = report.passed;
  out["max_residual"] = report.max_residual;
  Json terms = Json::array();
  for (const ConditionTerm& term : report.terms) {
    Json item;
    item["condition"] = term.condition;
    item["ell"] = term.ell;
    item["j"] = term.j;
    item["a"] = term.a;
    item["b"] = term.b;
    item["value"] = complex_to_json(term.value);
    item["residual"] = term.residual();
    terms.push_back(std::move(item));
  }
  out["terms"] = std::move(terms);
  if (!report.terms.empty()) {
    const ConditionTerm& worst = report.terms[report.worst_index];
    out["worst"] = Json{{"condition", worst.condition},
                        {"ell", worst.ell},
                        {"j", worst.j},
                        {"a", worst.a},
                        {"b", worst.b}};
  }
  return out;
}

Json kl_result_to_json(const KLResult& result) {
  Json out;
  out["type"] = "kl_result";
  out["passed"] = result.passed;
  out["num_operators"] = result.num_operators;
  out["tolerance"] = result.tolerance;
  out["max_orthogonality_violation"] = result.max_orthogonality_violation;
  out["max_deformation_violation"] = result.max_deformation_violation;
  out["worst_pair"] = Json::array(
      {result.worst_pair.first, result.worst_pair.second});
  return out;
}

Json equivalence_report_to_json(const EquivalenceReport& report) {
  Json out;
  out["type"] = "equivalence_report";
  out["N"] = report.N;
  out["t"] = report.t;
  out["tolerance"] = report.tolerance;
  out["insertion_passed"] = report.insertion_passed;
  Json per_s = Json::array();
  for (const ConditionReport& deletion : report.deletions)
    per_s.push_back(deletion.passed);
  out["deletion_passed_per_s"] = std::move(per_s);
  out["all_deletions_passed"] = report.all_deletions_passed;
  out["agree"] = report.agree;
  out["max_term_gap"] = report.max_term_gap;
  Json pairs = Json::array();
  for (const EquivalenceTermPair& pair : report.pairs) {
    Json item;
    item["condition"] = pair.condition;
    item["j"] = pair.j;
    item["a"] = pair.a;
    item["b"] = pair.b;
    item["insertion_value"] = complex_to_json(pair.insertion_value);
    item["deletion_value"] = complex_to_json(pair.deletion_value);
    item["gap"] = std::abs(pair.insertion_value - pair.deletion_value);
    pairs.push_back(std::move(item));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

Json swap_certificate_to_json(const SwapLemmaCertificate& cert,
                              bool include_phi_table) {
  Json out;
  out["type"] = "swap_lemma_certificate";
  out["N"] = cert.N;
  out["t"] = cert.t;
  out["s"] = cert.s;
  out["tolerance"] = cert.tolerance;
  out["passed"] = cert.passed;
  out["ell_weights"] = cert.ell_weights;
  out["weight_sum_error"] = cert.weight_sum_error;
  out["trace_distance"] = cert.trace_distance_value;
  out["max_group_error"] = cert.max_group_error;
  if (include_phi_table) {
    Json table = Json::array();
    for (const PhiTableRow& row : cert.phi_table) {
      Json item;
      item["structure"] = row.structure.parts;
      item["deletions"] = row.deletions.indices;
      item["ell"] = row.ell;
      item["reduced"] = row.reduced.parts;
      table.push_back(std::move(item));
    }
    out["phi_table"] = std::move(table);
  }
  return out;
}

Json search_result_to_json(const SearchResult& result) {
  Json out;
  out["type"] = "search_result";
  out["converged"] = result.converged;
  out["oracle_confirmed"] = result.oracle_confirmed;
  out["objective"] = result.objective;
  out["best_start"] = result.best_start;
  Json starts = Json::array();
  for (const StartTrace& trace : result.starts) {
    Json item;
    item["start"] = trace.start;
    item["seed"] = trace.seed;
    item["iterations"] = trace.iterations;
    item["objective"] = trace.objective;
    starts.push_back(std::move(item));
  }
  out["starts"] = std::move(starts);
  if (result.alpha.size() > 0) {
    out["alpha"] = complex_vector_to_json(result.alpha);
    out["beta"] = complex_vector_to_json(result.beta);
  }
  if (result.code)
    out["code"] = code_to_json(*result.code);
  return out;
}

void print_condition_report(std::ostream& out, const ConditionReport& report,
                            bool verbose) {
  out << "closed-form correctability check\n"
      << "  family:       " << family_name(report.family)
      << " (t=" << report.t << ", s=" << report.s << ")\n"
      << "  register:     N=" << report.N << "\n"
      << "  tolerance:    " << fmt(report.tolerance) << "\n"
      << "  terms:        " << report.terms.size() << "\n"
      << "  max residual: " << fmt(report.max_residual);
  if (!report.terms.empty()) {
    const ConditionTerm& worst = report.terms[report.worst_index];
    out << "  at (condition=" << worst.condition << ", ell=" << worst.ell
        << ", j=" << worst.j << ", a=" << worst.a << ", b=" << worst.b << ")";
  }
  out << "\n  verdict:      " << verdict(report.passed) << "\n";
  if (verbose) {
    out << "  cond ell   j   a   b  residual\n";
    for (const ConditionTerm& term : report.terms) {
      char line[128];
      std::snprintf(line, sizeof(line), "  %4d %3d %3d %3d %3d  %s\n",
                    term.condition, term.ell, term.j, term.a, term.b,
                    fmt(term.residual()).c_str());
      out << line;
    }
  }
}

void print_kl_result(std::ostream& out, const KLResult& result) {
  out << "numerical correctability check\n"
      << "  operators:                   " << result.num_operators << "\n"
      << "  tolerance:                   " << fmt(result.tolerance) << "\n"
      << "  max orthogonality violation: "
      << fmt(result.max_orthogonality_violation) << "\n"
      << "  max deformation violation:   "
      << fmt(result.max_deformation_violation) << "\n"
      << "  worst operator pair:         (" << result.worst_pair.first << ", "
      << result.worst_pair.second << ")\n"
      << "  verdict:                     " << verdict(result.passed) << "\n";
}

void print_equivalence_report(std::ostream& out,
                              const EquivalenceReport& report, bool verbose) {
  out << "insertion vs deletion equivalence (N=" << report.N
      << ", t=" << report.t << ")\n"
      << "  insertion conditions: " << verdict(report.insertion_passed)
      << "\n";
  for (std::size_t s = 0; s < report.deletions.size(); ++s)
    out << "  deletion s=" << s << ":         "
        << verdict(report.deletions[s].passed) << "\n";
  out << "  verdicts agree:       " << (report.agree ? "yes" : "no") << "\n"
      << "  matched terms:        " << report.pairs.size()
      << ", max gap " << fmt(report.max_term_gap) << "\n";
  if (verbose) {
    out << "  cond   j   a   b  insertion residual  deletion residual\n";
    for (const EquivalenceTermPair& pair : report.pairs) {
      char line[160];
      std::snprintf(line, sizeof(line), "  %4d %3d %3d %3d  %-19s %s\n",
                    pair.condition, pair.j, pair.a, pair.b,
                    fmt(std::abs(pair.insertion_value)).c_str(),
                    fmt(std::abs(pair.deletion_value)).c_str());
      out << line;
    }
  }
}

void print_swap_certificate(std::ostream& out,
                            const SwapLemmaCertificate& cert, bool verbose) {
  out << "channel reordering certificate (N=" << cert.N << ", t=" << cert.t
      << ", s=" << cert.s << ")\n  ell weights:    [";
  for (std::size_t i = 0; i < cert.ell_weights.size(); ++i)
    out << (i ? ", " : "") << fmt(cert.ell_weights[i]);
  out << "]\n"
      << "  weight sum err: " << fmt(cert.weight_sum_error) << "\n"
      << "  trace distance: " << fmt(cert.trace_distance_value) << "\n"
      << "  max group err:  " << fmt(cert.max_group_error) << "\n"
      << "  verdict:        " << verdict(cert.passed) << "\n";
  if (verbose) {
    out << "  structure -> deletions => ell, reduced\n";
    for (const PhiTableRow& row : cert.phi_table) {
      out << "  (";
      for (std::size_t i = 0; i < row.structure.parts.size(); ++i)
        out << (i ? "," : "") << row.structure.parts[i];
      out << ") -> {";
      for (std::size_t i = 0; i < row.deletions.indices.size(); ++i)
        out << (i ? "," : "") << row.deletions.indices[i];
      out << "} => ell=" << row.ell << ", (";
      for (std::size_t i = 0; i < row.reduced.parts.size(); ++i)
        out << (i ? "," : "") << row.reduced.parts[i];
      out << ")\n";
    }
  }
}

void print_search_result(std::ostream& out, const SearchResult& result) {
  out << "coefficient search\n"
      << "  start  seed        iterations  objective\n";
  for (const StartTrace& trace : result.starts) {
    char line[128];
    std::snprintf(line, sizeof(line), "  %5d  %-10llu  %10d  %s\n",
                  trace.start,
                  static_cast<unsigned long long>(trace.seed),
                  trace.iterations, fmt(trace.objective).c_str());
    out << line;
  }
  out << "  best start:       " << result.best_start << "\n"
      << "  best objective:   " << fmt(result.objective) << "\n"
      << "  converged:        " << (result.converged ? "yes" : "no") << "\n"
      << "  oracle confirmed: " << (result.oracle_confirmed ? "yes" : "no")
      << "\n";
}

}  // namespace piqec
