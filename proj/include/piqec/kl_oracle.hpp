/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_KL_ORACLE_HPP_
#define PIQEC_KL_ORACLE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "piqec/channels.hpp"
#include "piqec/conditions.hpp"
#include "piqec/linalg.hpp"
#include "piqec/symmetric_space.hpp"

namespace piqec {

// Pass/fail threshold on the numerical correctability check.
inline constexpr double kOracleTol = 1e-8;

// Outcome of the algebraic correctability test: a code corrects an error set
// iff, over its spanning operators E_i, every cross overlap <0|E_i^dag E_j|1>
// vanishes and the codeword Gram matrices <0|E_i^dag E_j|0> and
// <1|E_i^dag E_j|1> coincide.
struct KLResult {
  bool passed = false;
  int num_operators = 0;
  double max_orthogonality_violation = 0.0;
  double max_deformation_violation = 0.0;
  std::pair<int, int> worst_pair{-1, -1};  // operator indices of the max
  Matrix lambda;  // <0| E_i^dag E_j |0>, Hermitian by construction
  double tolerance = kOracleTol;
};

// Direct evaluation over an explicit operator list mapping 2^N amplitudes
// into any output dimension.
KLResult kl_check(const std::vector<Matrix>& ops, const Vector& word0,
                  const Vector& word1, double tol = kOracleTol);

// Spanning operators of the t-insertion error family on N qubits: for every
// structure (in enumeration order) and every inserted bitstring x (ascending)
// the map P_a (|x> (x) 1_N).  C(N+t, t) * 2^t operators of unit columns.
std::vector<Matrix> insertion_spanning_set(int N, int t,
                                           int max_qubits = kDefaultMaxQubits);

// Spanning operators of the s-deletion family on n qubits: for every position
// set (in enumeration order) and every removed bitstring y (ascending) the
// map (<y|_d (x) 1_keep) after sorting wires.  C(n, s) * 2^s operators.
std::vector<Matrix> deletion_spanning_set(int n, int s,
                                          int max_qubits = kDefaultMaxQubits);

// Numerical correctability verdicts built from the spanning sets; the
// composed families multiply one set of each kind (deletion-then-insertion
// for semi_insdel, insertion-then-deletion for full_insdel).
KLResult oracle_check(const PICode& code, ConditionFamily family, int t, int s,
                      double tol = kOracleTol,
                      int max_qubits = kDefaultMaxQubits);
KLResult oracle_insertion(const PICode& code, int t, double tol = kOracleTol,
                          int max_qubits = kDefaultMaxQubits);
KLResult oracle_deletion(const PICode& code, int s, double tol = kOracleTol,
                         int max_qubits = kDefaultMaxQubits);

// How a deletion position set d interacts with an insertion structure a on
// N + t wires: ell inserted wires are hit (their 1-based register indices in
// deleted_registers), and the survivors form `reduced`, a composition of
// t - ell into N - (s - ell) + 1 gaps.
struct PhiImage {
  int ell = 0;
  InsertionStructure reduced;
  std::vector<int> deleted_registers;
};

PhiImage phi_map(const InsertionStructure& a, const DeletionSet& d, int N,
                 int t);

struct PhiTableRow {
  InsertionStructure structure;
  DeletionSet deletions;
  int ell = 0;
  InsertionStructure reduced;
};

// Certificate that deleting after inserting equals a mixture over the overlap
// count ell of inserting t - ell qubits after deleting s - ell:
//   - ell_weights: the mixture weights r(ell), summing to 1;
//   - max_group_error: worst entrywise gap of the per-(ell, reduced
//     structure) identity between the directly computed and the reordered
//     form, where the surviving inserted register is traced over the actually
//     deleted register positions and the original-register trace is fixed to
//     the leading positions (immaterial by permutation invariance);
//   - trace_distance_value: distance between the composed channel output and
//     the mixture reconstruction.
struct SwapLemmaCertificate {
  int N = 0;
  int t = 0;
  int s = 0;
  double tolerance = 0.0;
  std::vector<double> ell_weights;
  double weight_sum_error = 0.0;
  double trace_distance_value = 0.0;
  double max_group_error = 0.0;
  std::vector<PhiTableRow> phi_table;
  bool passed = false;
};

// Verifies the reordering identity on a permutation-invariant input state.
// Throws std::invalid_argument when rho fails the permutation-invariance
// check (seeded random conjugations within tol).
SwapLemmaCertificate swap_lemma_verify(const Matrix& rho,
                                       const ChannelSpec& spec,
                                       double tol = kOracleTol,
                                       int max_qubits = kDefaultMaxQubits,
                                       std::uint64_t seed = 20260816);

}  // namespace piqec

#endif  // PIQEC_KL_ORACLE_HPP_
