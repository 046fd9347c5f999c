/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_IO_HPP_
#define PIQEC_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "piqec/channels.hpp"
#include "piqec/conditions.hpp"
#include "piqec/kl_oracle.hpp"
#include "piqec/search.hpp"
#include "piqec/symmetric_space.hpp"

namespace piqec {

using Json = nlohmann::json;

// Read and parse a JSON document; throws std::runtime_error with the path
// and parser diagnostic on failure.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& value);

// Serialize with object keys sorted and every float printed with 17
// significant digits, so identical values yield identical bytes.
std::string dump_deterministic(const Json& value, int indent = 2);

// Complex numbers are stored as [re, im]; bare numbers are accepted on input
// as purely real.
Complex complex_from_json(const Json& value);
Json complex_to_json(const Complex& value);
Vector complex_vector_from_json(const Json& value);
Json complex_vector_to_json(const Vector& value);

// Code files: {"N": int, "alpha": [[re, im], ...], "beta": [[re, im], ...]}.
PICode code_from_json(const Json& value, double tol = kValidationTol);
std::vector<PICode> codes_from_json(const Json& value,
                                    double tol = kValidationTol);
Json code_to_json(const PICode& code);

// Channel files name the kind, counts, and optional explicit distributions:
//   {"kind": "full-insdel", "t": 1, "s": 1,
//    "structures": [{"parts": [...], "p": ...}, ...] | "uniform",
//    "insertion_states": [{"amplitudes": [...], "weight": ...}, ...] | "mixed",
//    "deletions": [{"positions": [...], "p": ...}, ...] | "uniform"}
ChannelSpec channel_spec_from_json(const Json& value);

// State files carry exactly one of:
//   {"random_pi": {"N": ..., "seed": ...}}
//   {"logical": {"code": {...}, "c0": [re, im], "c1": [re, im]}}
//   {"dicke": {"N": ..., "matrix": [[...], ...]}}
//   {"dense": {"N": ..., "rho": [[...], ...]}}
Matrix state_from_json(const Json& value, int max_qubits = kDefaultMaxQubits);

// Search problem files mirror SearchProblem (N and family required).
SearchProblem search_problem_from_json(const Json& value);

std::string family_name(ConditionFamily family);
ConditionFamily family_from_name(std::string_view name);
std::string channel_kind_name(ChannelKind kind);
ChannelKind channel_kind_from_name(std::string_view name);

// Report serialization.
Json condition_report_to_json(const ConditionReport& report);
Json kl_result_to_json(const KLResult& result);
Json equivalence_report_to_json(const EquivalenceReport& report);
Json swap_certificate_to_json(const SwapLemmaCertificate& cert,
                              bool include_phi_table);
Json search_result_to_json(const SearchResult& result);

// Human-readable report printers.
void print_condition_report(std::ostream& out, const ConditionReport& report,
                            bool verbose);
void print_kl_result(std::ostream& out, const KLResult& result);
void print_equivalence_report(std::ostream& out,
                              const EquivalenceReport& report, bool verbose);
void print_swap_certificate(std::ostream& out,
                            const SwapLemmaCertificate& cert, bool verbose);
void print_search_result(std::ostream& out, const SearchResult& result);

}  // namespace piqec

#endif  // PIQEC_IO_HPP_
