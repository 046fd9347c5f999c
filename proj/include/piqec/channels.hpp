/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_CHANNELS_HPP_
#define PIQEC_CHANNELS_HPP_

#include <utility>
#include <vector>

#include "piqec/combinatorics.hpp"
#include "piqec/linalg.hpp"
#include "piqec/symmetric_space.hpp"

namespace piqec {

// State of a t-qubit inserted register, as 2^t amplitudes.
struct InsertionState {
  int t = 0;
  Vector v;
};

enum class ChannelKind { insertion, deletion, semi_insdel, full_insdel };

// A channel description.  Empty distributions mean the uniform choice:
// uniform over insertion structures, a maximally mixed inserted register,
// and uniform over deletion position sets.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::deletion;
  int t = 0;
  int s = 0;
  std::vector<std::pair<InsertionStructure, double>> structure_distribution;
  std::vector<std::pair<InsertionState, double>> insertion_states;
  std::vector<std::pair<DeletionSet, double>> deletion_distribution;
};

// A finite Kraus decomposition; `dicke_basis` marks operators acting on
// weight-space coefficient vectors rather than dense 2^n amplitudes.
struct KrausSet {
  Index in_dim = 0;
  Index out_dim = 0;
  bool dicke_basis = false;
  std::vector<Matrix> ops;
};

// max |sum_i K_i^dag K_i - identity| over matrix entries.
double kraus_completeness_error(const KrausSet& set);

// Wire relabeling on N + t qubits that moves the t inserted wires (input
// positions 1..t, consumed in order) into the gaps chosen by `a`, keeping
// the original wires (input positions t+1..t+N) in order.  The structure
// (t, 0, ..., 0) yields the identity.
WirePermutation permutation_for_structure(const InsertionStructure& a, int N,
                                          int t);

// sqrt(p) * P_a * (|phi> (x) 1_N) as a dense 2^(N+t) x 2^N matrix.
Matrix insertion_kraus(const InsertionStructure& a, const InsertionState& phi,
                       double p, int N);

// Channel applications.  The register size is inferred from rho; dense work
// is refused above max_qubits.
Matrix apply_insertion_channel(const Matrix& rho, const ChannelSpec& spec,
                               int max_qubits = kDefaultMaxQubits);
Matrix apply_deletion_channel(const Matrix& rho, const ChannelSpec& spec,
                              int max_qubits = kDefaultMaxQubits);
// Deletion first, then insertion into the shrunken register.
Matrix compose_semi_insdel(const Matrix& rho, const ChannelSpec& spec,
                           int max_qubits = kDefaultMaxQubits);
// Insertion first, then deletion anywhere in the grown register.
Matrix compose_full_insdel(const Matrix& rho, const ChannelSpec& spec,
                           int max_qubits = kDefaultMaxQubits);

// Apply the channel selected by spec.kind.
Matrix apply_channel(const Matrix& rho, const ChannelSpec& spec,
                     int max_qubits = kDefaultMaxQubits);

// Weight-space Kraus operators of the uniform s-deletion channel restricted
// to permutation-invariant states: operator a maps the weight-k coefficient
// to weight k - a with amplitude sqrt(C(s, a) C(N-s, k-a) / C(N, k)).
KrausSet deletion_kraus_dicke(int N, int s);

// Distribution resolution (uniform defaults filled in), with validation.
std::pair<std::vector<InsertionStructure>, std::vector<double>>
resolve_structures(const ChannelSpec& spec, int N);
std::pair<std::vector<DeletionSet>, std::vector<double>>
resolve_deletions(const ChannelSpec& spec, int register_size);
std::pair<std::vector<InsertionState>, std::vector<double>>
resolve_insertion_states(const ChannelSpec& spec);

// Density operator of the inserted register averaged over the (resolved)
// insertion-state mixture; 2^t x 2^t.
Matrix mixed_insertion_state(const ChannelSpec& spec);

}  // namespace piqec

#endif  // PIQEC_CHANNELS_HPP_
