/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/channels.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace piqec {

namespace {

int infer_register(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("channel input must be square");
  return qubits_for(rho.rows());
}

void guard_qubits(int n, int max_qubits, const char* where) {
  if (n > max_qubits) {
    std::ostringstream msg;
    msg << where << ": " << n << " qubits exceeds the dense-representation "
        << "limit of " << max_qubits << " (raise max_qubits to override)";
    throw ResourceGuardError(msg.str());
  }
}

void validate_probs(const std::vector<double>& probs, const char* what) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p > 0.0))
      throw std::invalid_argument(std::string(what) +
                                  ": probabilities must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kValidationTol)
    throw std::invalid_argument(std::string(what) +
                                ": probabilities must sum to 1");
}

void validate_structure(const InsertionStructure& a, int N, int t) {
  if (a.num_gaps() != N + 1)
    throw std::invalid_argument("insertion structure has wrong gap count");
  for (int part : a.parts)
    if (part < 0)
      throw std::invalid_argument("insertion structure has a negative part");
  if (a.total() != t)
    throw std::invalid_argument("insertion structure totals the wrong count");
}

}  // namespace

double kraus_completeness_error(const KrausSet& set) {
  Matrix acc = Matrix::Zero(set.in_dim, set.in_dim);
  for (const Matrix& k : set.ops)
    acc += k.adjoint() * k;
  acc -= Matrix::Identity(set.in_dim, set.in_dim);
  return acc.cwiseAbs().maxCoeff();
}

WirePermutation permutation_for_structure(const InsertionStructure& a, int N,
                                          int t) {
  validate_structure(a, N, t);
  std::vector<int> source;
  source.reserve(N + t);
  int next_inserted = 1;
  for (int gap = 0; gap <= N; ++gap) {
    for (int i = 0; i < a.parts[gap]; ++i)
      source.push_back(next_inserted++);
    if (gap < N)
      source.push_back(t + gap + 1);
  }
  return wire_permutation_from_source(N + t, std::move(source));
}

Matrix insertion_kraus(const InsertionStructure& a, const InsertionState& phi,
                       double p, int N) {
  if (phi.v.size() != dim_for(phi.t))
    throw std::invalid_argument("insertion state has wrong dimension");
  if (std::abs(phi.v.squaredNorm() - 1.0) > kValidationTol)
    throw std::invalid_argument("insertion state must be normalized");
  if (!(p > 0.0) || p > 1.0)
    throw std::invalid_argument("insertion probability must lie in (0, 1]");
  const int t = phi.t;
  const WirePermutation perm = permutation_for_structure(a, N, t);
  const Index in_dim = dim_for(N);
  const double root_p = std::sqrt(p);
  Matrix out = Matrix::Zero(dim_for(N + t), in_dim);
  for (Index x = 0; x < dim_for(t); ++x) {
    if (phi.v(x) == 0.0)
      continue;
    for (Index q = 0; q < in_dim; ++q)
      out(perm.index_map[x * in_dim + q], q) = root_p * phi.v(x);
  }
  return out;
}

Matrix apply_insertion_channel(const Matrix& rho, const ChannelSpec& spec,
                               int max_qubits) {
  const int N = infer_register(rho);
  const int t = spec.t;
  if (t < 0)
    throw std::invalid_argument("insertion count must be non-negative");
  guard_qubits(N + t, max_qubits, "apply_insertion_channel");
  const auto [structures, probs] = resolve_structures(spec, N);
  const Matrix phi = mixed_insertion_state(spec);
  const Matrix joint = kron(phi, rho);
  const Index dim = dim_for(N + t);
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t idx = 0; idx < structures.size(); ++idx) {
    const WirePermutation perm =
        permutation_for_structure(structures[idx], N, t);
    const double p = probs[idx];
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j)
        out(perm.index_map[i], perm.index_map[j]) += p * joint(i, j);
  }
  return out;
}

Matrix apply_deletion_channel(const Matrix& rho, const ChannelSpec& spec,
                              int max_qubits) {
  const int n = infer_register(rho);
  guard_qubits(n, max_qubits, "apply_deletion_channel");
  if (spec.s < 0 || spec.s > n)
    throw std::invalid_argument(
        "deletion count must satisfy 0 <= s <= register size");
  const auto [sets, probs] = resolve_deletions(spec, n);
  Matrix out = Matrix::Zero(dim_for(n - spec.s), dim_for(n - spec.s));
  for (std::size_t idx = 0; idx < sets.size(); ++idx)
    out += probs[idx] * partial_trace(rho, n, sets[idx].indices);
  return out;
}

Matrix compose_semi_insdel(const Matrix& rho, const ChannelSpec& spec,
                           int max_qubits) {
  const int N = infer_register(rho);
  guard_qubits(std::max(N, N - spec.s + spec.t), max_qubits,
               "compose_semi_insdel");
  const Matrix shrunk = apply_deletion_channel(rho, spec, max_qubits);
  return apply_insertion_channel(shrunk, spec, max_qubits);
}

Matrix compose_full_insdel(const Matrix& rho, const ChannelSpec& spec,
                           int max_qubits) {
  const int N = infer_register(rho);
  guard_qubits(N + spec.t, max_qubits, "compose_full_insdel");
  if (spec.s > N + spec.t)
    throw std::invalid_argument(
        "deletion count exceeds the grown register size");
  const Matrix grown = apply_insertion_channel(rho, spec, max_qubits);
  return apply_deletion_channel(grown, spec, max_qubits);
}

Matrix apply_channel(const Matrix& rho, const ChannelSpec& spec,
                     int max_qubits) {
  switch (spec.kind) {
    case ChannelKind::insertion:
      return apply_insertion_channel(rho, spec, max_qubits);
    case ChannelKind::deletion:
      return apply_deletion_channel(rho, spec, max_qubits);
    case ChannelKind::semi_insdel:
      return compose_semi_insdel(rho, spec, max_qubits);
    case ChannelKind::full_insdel:
      return compose_full_insdel(rho, spec, max_qubits);
  }
  throw std::logic_error("unknown channel kind");
}

KrausSet deletion_kraus_dicke(int N, int s) {
  if (N < 1 || s < 0 || s > N)
    throw std::invalid_argument("deletion_kraus_dicke: need 0 <= s <= N");
  KrausSet set;
  set.in_dim = N + 1;
  set.out_dim = N - s + 1;
  set.dicke_basis = true;
  for (int a = 0; a <= s; ++a) {
    Matrix k = Matrix::Zero(set.out_dim, set.in_dim);
    for (int weight = a; weight <= N - s + a; ++weight)
      k(weight - a, weight) = vandermonde_coeff(N, weight, s, a);
    set.ops.push_back(std::move(k));
  }
  return set;
}

std::pair<std::vector<InsertionStructure>, std::vector<double>>
resolve_structures(const ChannelSpec& spec, int N) {
  std::vector<InsertionStructure> items;
  std::vector<double> probs;
  if (spec.structure_distribution.empty()) {
    items = enumerate_insertion_structures(N, spec.t);
    probs.assign(items.size(), 1.0 / static_cast<double>(items.size()));
    return {std::move(items), std::move(probs)};
  }
  for (const auto& [a, p] : spec.structure_distribution) {
    validate_structure(a, N, spec.t);
    items.push_back(a);
    probs.push_back(p);
  }
  validate_probs(probs, "insertion structure distribution");
  return {std::move(items), std::move(probs)};
}

std::pair<std::vector<DeletionSet>, std::vector<double>>
resolve_deletions(const ChannelSpec& spec, int register_size) {
  std::vector<DeletionSet> items;
  std::vector<double> probs;
  if (spec.deletion_distribution.empty()) {
    items = enumerate_deletion_sets(register_size, spec.s);
    probs.assign(items.size(), 1.0 / static_cast<double>(items.size()));
    return {std::move(items), std::move(probs)};
  }
  for (const auto& [d, p] : spec.deletion_distribution) {
    if (d.size() != spec.s)
      throw std::invalid_argument("deletion set has wrong size");
    for (std::size_t i = 0; i < d.indices.size(); ++i) {
      if (d.indices[i] < 1 || d.indices[i] > register_size)
        throw std::invalid_argument("deletion position out of range");
      if (i > 0 && d.indices[i] <= d.indices[i - 1])
        throw std::invalid_argument(
            "deletion positions must be strictly increasing");
    }
    items.push_back(d);
    probs.push_back(p);
  }
  validate_probs(probs, "deletion distribution");
  return {std::move(items), std::move(probs)};
}

std::pair<std::vector<InsertionState>, std::vector<double>>
resolve_insertion_states(const ChannelSpec& spec) {
  std::vector<InsertionState> states;
  std::vector<double> weights;
  if (spec.insertion_states.empty()) {
    // Maximally mixed inserted register: uniform over basis states.
    const Index dim = dim_for(spec.t);
    for (Index x = 0; x < dim; ++x) {
      Vector v = Vector::Zero(dim);
      v(x) = 1.0;
      states.push_back(InsertionState{spec.t, std::move(v)});
      weights.push_back(1.0 / static_cast<double>(dim));
    }
    return {std::move(states), std::move(weights)};
  }
  for (const auto& [state, w] : spec.insertion_states) {
    if (state.t != spec.t || state.v.size() != dim_for(spec.t))
      throw std::invalid_argument("insertion state has wrong dimension");
    if (std::abs(state.v.squaredNorm() - 1.0) > kValidationTol)
      throw std::invalid_argument("insertion state must be normalized");
    states.push_back(state);
    weights.push_back(w);
  }
  validate_probs(weights, "insertion state mixture");
  return {std::move(states), std::move(weights)};
}

Matrix mixed_insertion_state(const ChannelSpec& spec) {
  const auto [states, weights] = resolve_insertion_states(spec);
  const Index dim = dim_for(spec.t);
  Matrix phi = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < states.size(); ++i)
    phi += weights[i] * (states[i].v * states[i].v.adjoint());
  return phi;
}

}  // namespace piqec
