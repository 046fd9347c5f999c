/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "piqec/channels.hpp"
#include "piqec/combinatorics.hpp"
#include "piqec/conditions.hpp"
#include "piqec/kl_oracle.hpp"
#include "piqec/search.hpp"
#include "piqec/symmetric_space.hpp"

namespace py = pybind11;
using namespace piqec;

namespace {

py::int_ big_to_py(const BigInt& value) {
  return py::cast<py::int_>(
      py::module_::import("builtins").attr("int")(value.str()));
}

std::vector<std::vector<int>> structures_as_lists(int N, int t) {
  std::vector<std::vector<int>> out;
  for (const InsertionStructure& a : enumerate_insertion_structures(N, t))
    out.push_back(a.parts);
  return out;
}

std::vector<std::vector<int>> deletions_as_lists(int N, int s) {
  std::vector<std::vector<int>> out;
  for (const DeletionSet& d : enumerate_deletion_sets(N, s))
    out.push_back(d.indices);
  return out;
}

ChannelSpec uniform_channel(ChannelKind kind, int t, int s) {
  ChannelSpec spec;
  spec.kind = kind;
  spec.t = t;
  spec.s = s;
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Verification and discovery tools for permutation-invariant qubit "
      "codes under insertion and deletion errors";
  m.attr("__version__") = "0.1.0";

  py::enum_<ConditionFamily>(m, "ConditionFamily")
      .value("insertion", ConditionFamily::insertion)
      .value("deletion", ConditionFamily::deletion)
      .value("semi_insdel", ConditionFamily::semi_insdel)
      .value("full_insdel", ConditionFamily::full_insdel);

  py::enum_<ChannelKind>(m, "ChannelKind")
      .value("insertion", ChannelKind::insertion)
      .value("deletion", ChannelKind::deletion)
      .value("semi_insdel", ChannelKind::semi_insdel)
      .value("full_insdel", ChannelKind::full_insdel);

  py::class_<PICode>(m, "PICode")
      .def_readonly("N", &PICode::N)
      .def_readonly("alpha", &PICode::alpha)
      .def_readonly("beta", &PICode::beta);

  py::class_<ConditionTerm>(m, "ConditionTerm")
      .def_readonly("condition", &ConditionTerm::condition)
      .def_readonly("ell", &ConditionTerm::ell)
      .def_readonly("j", &ConditionTerm::j)
      .def_readonly("a", &ConditionTerm::a)
      .def_readonly("b", &ConditionTerm::b)
      .def_readonly("value", &ConditionTerm::value)
      .def("residual", &ConditionTerm::residual);

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("family", &ConditionReport::family)
      .def_readonly("N", &ConditionReport::N)
      .def_readonly("t", &ConditionReport::t)
      .def_readonly("s", &ConditionReport::s)
      .def_readonly("tolerance", &ConditionReport::tolerance)
      .def_readonly("terms", &ConditionReport::terms)
      .def_readonly("max_residual", &ConditionReport::max_residual)
      .def_readonly("worst_index", &ConditionReport::worst_index)
      .def_readonly("passed", &ConditionReport::passed);

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("N", &EquivalenceReport::N)
      .def_readonly("t", &EquivalenceReport::t)
      .def_readonly("tolerance", &EquivalenceReport::tolerance)
      .def_readonly("insertion", &EquivalenceReport::insertion)
      .def_readonly("deletions", &EquivalenceReport::deletions)
      .def_readonly("max_term_gap", &EquivalenceReport::max_term_gap)
      .def_readonly("insertion_passed", &EquivalenceReport::insertion_passed)
      .def_readonly("all_deletions_passed",
                    &EquivalenceReport::all_deletions_passed)
      .def_readonly("agree", &EquivalenceReport::agree);

  py::class_<KLResult>(m, "KLResult")
      .def_readonly("passed", &KLResult::passed)
      .def_readonly("num_operators", &KLResult::num_operators)
      .def_readonly("max_orthogonality_violation",
                    &KLResult::max_orthogonality_violation)
      .def_readonly("max_deformation_violation",
                    &KLResult::max_deformation_violation)
      .def_readonly("worst_pair", &KLResult::worst_pair)
      .def_readonly("lambda_matrix", &KLResult::lambda)
      .def_readonly("tolerance", &KLResult::tolerance);

  py::class_<ChannelSpec>(m, "ChannelSpec")
      .def(py::init<>())
      .def_readwrite("kind", &ChannelSpec::kind)
      .def_readwrite("t", &ChannelSpec::t)
      .def_readwrite("s", &ChannelSpec::s);

  py::class_<PhiTableRow>(m, "PhiTableRow")
      .def_property_readonly(
          "structure",
          [](const PhiTableRow& row) { return row.structure.parts; })
      .def_property_readonly(
          "deletions",
          [](const PhiTableRow& row) { return row.deletions.indices; })
      .def_readonly("ell", &PhiTableRow::ell)
      .def_property_readonly("reduced", [](const PhiTableRow& row) {
        return row.reduced.parts;
      });

  py::class_<SwapLemmaCertificate>(m, "SwapLemmaCertificate")
      .def_readonly("N", &SwapLemmaCertificate::N)
      .def_readonly("t", &SwapLemmaCertificate::t)
      .def_readonly("s", &SwapLemmaCertificate::s)
      .def_readonly("tolerance", &SwapLemmaCertificate::tolerance)
      .def_readonly("ell_weights", &SwapLemmaCertificate::ell_weights)
      .def_readonly("weight_sum_error",
                    &SwapLemmaCertificate::weight_sum_error)
      .def_readonly("trace_distance",
                    &SwapLemmaCertificate::trace_distance_value)
      .def_readonly("max_group_error",
                    &SwapLemmaCertificate::max_group_error)
      .def_readonly("phi_table", &SwapLemmaCertificate::phi_table)
      .def_readonly("passed", &SwapLemmaCertificate::passed);

  py::class_<SearchProblem>(m, "SearchProblem")
      .def(py::init<>())
      .def_readwrite("N", &SearchProblem::N)
      .def_readwrite("family", &SearchProblem::family)
      .def_readwrite("t", &SearchProblem::t)
      .def_readwrite("s", &SearchProblem::s)
      .def_readwrite("penalty_weight", &SearchProblem::penalty_weight)
      .def_readwrite("seed", &SearchProblem::seed)
      .def_readwrite("num_starts", &SearchProblem::num_starts)
      .def_readwrite("max_iterations", &SearchProblem::max_iterations)
      .def_readwrite("success_threshold", &SearchProblem::success_threshold)
      .def_readwrite("condition_tol", &SearchProblem::condition_tol)
      .def_readwrite("oracle_tol", &SearchProblem::oracle_tol)
      .def_readwrite("max_qubits", &SearchProblem::max_qubits);

  py::class_<StartTrace>(m, "StartTrace")
      .def_readonly("start", &StartTrace::start)
      .def_readonly("seed", &StartTrace::seed)
      .def_readonly("iterations", &StartTrace::iterations)
      .def_readonly("objective", &StartTrace::objective);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("converged", &SearchResult::converged)
      .def_readonly("oracle_confirmed", &SearchResult::oracle_confirmed)
      .def_readonly("objective", &SearchResult::objective)
      .def_readonly("best_start", &SearchResult::best_start)
      .def_readonly("alpha", &SearchResult::alpha)
      .def_readonly("beta", &SearchResult::beta)
      .def_readonly("starts", &SearchResult::starts)
      .def_property_readonly("code",
                             [](const SearchResult& result) -> py::object {
                               if (!result.code)
                                 return py::none();
                               return py::cast(*result.code);
                             });

  m.def(
      "binomial",
      [](std::int64_t n, std::int64_t k) { return big_to_py(binomial(n, k)); },
      py::arg("n"), py::arg("k"),
      "Exact binomial coefficient as a python integer");
  m.def("enumerate_insertion_structures", &structures_as_lists, py::arg("N"),
        py::arg("t"));
  m.def("enumerate_deletion_sets", &deletions_as_lists, py::arg("N"),
        py::arg("s"));
  m.def("vandermonde_coeff", &vandermonde_coeff, py::arg("N"), py::arg("k"),
        py::arg("m"), py::arg("a"));
  m.def("dicke_vector", &dicke_vector, py::arg("N"), py::arg("k"),
        py::arg("max_qubits") = kDefaultMaxQubits);
  m.def("make_pi_code", &make_pi_code, py::arg("N"), py::arg("alpha"),
        py::arg("beta"), py::arg("tol") = kValidationTol);
  m.def("gnu_code", &gnu_code, py::arg("g"), py::arg("n"));
  m.def(
      "to_dense",
      [](const PICode& code, bool logical_one, int max_qubits) {
        return to_dense(code.N, logical_one ? code.beta : code.alpha,
                        max_qubits);
      },
      py::arg("code"), py::arg("logical_one") = false,
      py::arg("max_qubits") = kDefaultMaxQubits);
  m.def(
      "logical_state_vector",
      [](const PICode& code, Complex c0, Complex c1, int max_qubits) {
        return to_dense(logical_state(code, c0, c1), max_qubits);
      },
      py::arg("code"), py::arg("c0"), py::arg("c1"),
      py::arg("max_qubits") = kDefaultMaxQubits);
  m.def(
      "deletion_kraus_dicke",
      [](int N, int s) { return deletion_kraus_dicke(N, s).ops; },
      py::arg("N"), py::arg("s"),
      "Weight-space deletion Kraus operators as matrices");
  m.def(
      "random_pi_density",
      [](int N, std::uint64_t seed, int max_qubits) {
        Rng rng(seed);
        return random_pi_density(N, rng, max_qubits);
      },
      py::arg("N"), py::arg("seed"),
      py::arg("max_qubits") = kDefaultMaxQubits);

  m.def("condition_residuals", &condition_terms, py::arg("alpha"),
        py::arg("beta"), py::arg("N"), py::arg("family"), py::arg("t") = 0,
        py::arg("s") = 0);
  m.def("eval_conditions", &eval_conditions, py::arg("code"),
        py::arg("family"), py::arg("t") = 0, py::arg("s") = 0,
        py::arg("tol") = kConditionTol);
  m.def("eval_insertion_conditions", &eval_insertion_conditions,
        py::arg("code"), py::arg("t"), py::arg("tol") = kConditionTol);
  m.def("eval_deletion_conditions", &eval_deletion_conditions,
        py::arg("code"), py::arg("s"), py::arg("tol") = kConditionTol);
  m.def("equivalence_check", &equivalence_check, py::arg("code"),
        py::arg("t"), py::arg("tol") = kConditionTol);

  m.def("oracle_check", &oracle_check, py::arg("code"), py::arg("family"),
        py::arg("t") = 0, py::arg("s") = 0, py::arg("tol") = kOracleTol,
        py::arg("max_qubits") = kDefaultMaxQubits);
  m.def("oracle_insertion", &oracle_insertion, py::arg("code"), py::arg("t"),
        py::arg("tol") = kOracleTol,
        py::arg("max_qubits") = kDefaultMaxQubits);
  m.def("oracle_deletion", &oracle_deletion, py::arg("code"), py::arg("s"),
        py::arg("tol") = kOracleTol,
        py::arg("max_qubits") = kDefaultMaxQubits);

  m.def("uniform_channel", &uniform_channel, py::arg("kind"),
        py::arg("t") = 0, py::arg("s") = 0,
        "Channel spec with uniform structure/deletion distributions and a "
        "maximally mixed inserted register");
  m.def("apply_channel", &apply_channel, py::arg("rho"), py::arg("spec"),
        py::arg("max_qubits") = kDefaultMaxQubits);
  m.def("swap_lemma_verify", &swap_lemma_verify, py::arg("rho"),
        py::arg("spec"), py::arg("tol") = kOracleTol,
        py::arg("max_qubits") = kDefaultMaxQubits,
        py::arg("seed") = std::uint64_t{20260816});

  m.def("find_code", &find_code, py::arg("problem"));
}
