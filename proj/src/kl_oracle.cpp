/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/kl_oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace piqec {

namespace {

void guard_qubits(int n, int max_qubits, const char* where) {
  if (n > max_qubits) {
    std::ostringstream msg;
    msg << where << ": " << n << " qubits exceeds the dense-representation "
        << "limit of " << max_qubits << " (raise max_qubits to override)";
    throw ResourceGuardError(msg.str());
  }
}

// Every spanning operator maps each basis state to a single basis state or
// to zero, so it is stored as one target row per input column (-1 for zero).
struct SelectorOp {
  Index out_dim = 0;
  std::vector<Index> row;

  Vector apply(const Vector& v) const {
    Vector out = Vector::Zero(out_dim);
    for (Index col = 0; col < static_cast<Index>(row.size()); ++col)
      if (row[col] >= 0)
        out(row[col]) += v(col);
    return out;
  }

  Matrix dense() const {
    Matrix out = Matrix::Zero(out_dim, row.size());
    for (Index col = 0; col < static_cast<Index>(row.size()); ++col)
      if (row[col] >= 0)
        out(row[col], col) = 1.0;
    return out;
  }
};

SelectorOp compose(const SelectorOp& outer, const SelectorOp& inner) {
  SelectorOp out;
  out.out_dim = outer.out_dim;
  out.row.resize(inner.row.size());
  for (std::size_t col = 0; col < inner.row.size(); ++col)
    out.row[col] = inner.row[col] < 0 ? -1 : outer.row[inner.row[col]];
  return out;
}

std::vector<SelectorOp> insertion_selectors(int N, int t) {
  std::vector<SelectorOp> ops;
  const Index in_dim = dim_for(N);
  for (const InsertionStructure& a : enumerate_insertion_structures(N, t)) {
    const WirePermutation perm = permutation_for_structure(a, N, t);
    for (Index x = 0; x < dim_for(t); ++x) {
      SelectorOp op;
      op.out_dim = dim_for(N + t);
      op.row.resize(in_dim);
      for (Index q = 0; q < in_dim; ++q)
        op.row[q] = perm.index_map[x * in_dim + q];
      ops.push_back(std::move(op));
    }
  }
  return ops;
}

std::vector<SelectorOp> deletion_selectors(int n, int s) {
  std::vector<SelectorOp> ops;
  const int keep = n - s;
  for (const DeletionSet& d : enumerate_deletion_sets(n, s)) {
    std::vector<bool> deleted(n + 1, false);
    for (int p : d.indices)
      deleted[p] = true;
    std::vector<SelectorOp> per_y(dim_for(s));
    for (Index y = 0; y < dim_for(s); ++y) {
      per_y[y].out_dim = dim_for(keep);
      per_y[y].row.assign(dim_for(n), -1);
    }
    for (Index full = 0; full < dim_for(n); ++full) {
      Index y = 0, kept = 0;
      for (int p = 1; p <= n; ++p) {
        if (deleted[p])
          y = (y << 1) | bit_at(full, p, n);
        else
          kept = (kept << 1) | bit_at(full, p, n);
      }
      per_y[y].row[full] = kept;
    }
    for (Index y = 0; y < dim_for(s); ++y)
      ops.push_back(std::move(per_y[y]));
  }
  return ops;
}

std::vector<SelectorOp> family_selectors(int N, ConditionFamily family, int t,
                                         int s) {
  switch (family) {
    case ConditionFamily::insertion:
      return insertion_selectors(N, t);
    case ConditionFamily::deletion:
      return deletion_selectors(N, s);
    case ConditionFamily::semi_insdel: {
      // Delete from the original register, then insert into the remainder.
      std::vector<SelectorOp> ops;
      const auto dels = deletion_selectors(N, s);
      const auto ins = insertion_selectors(N - s, t);
      for (const SelectorOp& d : dels)
        for (const SelectorOp& i : ins)
          ops.push_back(compose(i, d));
      return ops;
    }
    case ConditionFamily::full_insdel: {
      // Insert first, then delete anywhere in the grown register.
      std::vector<SelectorOp> ops;
      const auto ins = insertion_selectors(N, t);
      const auto dels = deletion_selectors(N + t, s);
      for (const SelectorOp& i : ins)
        for (const SelectorOp& d : dels)
          ops.push_back(compose(d, i));
      return ops;
    }
  }
  throw std::logic_error("unknown condition family");
}

KLResult kl_from_images(const std::vector<Vector>& images0,
                        const std::vector<Vector>& images1, double tol) {
  const int n = static_cast<int>(images0.size());
  const Index dim = n > 0 ? images0[0].size() : 0;
  Matrix u(dim, n), w(dim, n);
  for (int i = 0; i < n; ++i) {
    u.col(i) = images0[i];
    w.col(i) = images1[i];
  }
  const Matrix cross = u.adjoint() * w;
  const Matrix gram0 = u.adjoint() * u;
  const Matrix gram1 = w.adjoint() * w;
  KLResult result;
  result.num_operators = n;
  result.tolerance = tol;
  result.lambda = gram0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double orth = std::abs(cross(i, j));
      if (orth > result.max_orthogonality_violation) {
        result.max_orthogonality_violation = orth;
        result.worst_pair = {i, j};
      }
      const double deform = std::abs(gram0(i, j) - gram1(i, j));
      if (deform > result.max_deformation_violation) {
        result.max_deformation_violation = deform;
        result.worst_pair = {i, j};
      }
    }
  result.passed = result.max_orthogonality_violation <= tol &&
                  result.max_deformation_violation <= tol;
  return result;
}

void validate_oracle_args(int N, ConditionFamily family, int t, int s) {
  if (t < 0 || s < 0)
    throw std::invalid_argument("error counts must be non-negative");
  switch (family) {
    case ConditionFamily::insertion:
      break;
    case ConditionFamily::deletion:
    case ConditionFamily::semi_insdel:
      if (s > N)
        throw std::invalid_argument("cannot delete more qubits than exist");
      break;
    case ConditionFamily::full_insdel:
      if (s > N + t)
        throw std::invalid_argument(
            "cannot delete more qubits than the grown register holds");
      break;
  }
}

int working_register(int N, ConditionFamily family, int t, int s) {
  switch (family) {
    case ConditionFamily::insertion:
      return N + t;
    case ConditionFamily::deletion:
      return N;
    case ConditionFamily::semi_insdel:
      return std::max(N, N - s + t);
    case ConditionFamily::full_insdel:
      return N + t;
  }
  return N;
}

}  // namespace

KLResult kl_check(const std::vector<Matrix>& ops, const Vector& word0,
                  const Vector& word1, double tol) {
  std::vector<Vector> images0, images1;
  images0.reserve(ops.size());
  images1.reserve(ops.size());
  for (const Matrix& op : ops) {
    if (op.cols() != word0.size() || op.cols() != word1.size())
      throw std::invalid_argument("kl_check: operator dimension mismatch");
    images0.push_back(op * word0);
    images1.push_back(op * word1);
  }
  return kl_from_images(images0, images1, tol);
}

std::vector<Matrix> insertion_spanning_set(int N, int t, int max_qubits) {
  guard_qubits(N + t, max_qubits, "insertion_spanning_set");
  std::vector<Matrix> out;
  for (const SelectorOp& op : insertion_selectors(N, t))
    out.push_back(op.dense());
  return out;
}

std::vector<Matrix> deletion_spanning_set(int n, int s, int max_qubits) {
  guard_qubits(n, max_qubits, "deletion_spanning_set");
  if (s < 0 || s > n)
    throw std::invalid_argument("deletion_spanning_set: need 0 <= s <= n");
  std::vector<Matrix> out;
  for (const SelectorOp& op : deletion_selectors(n, s))
    out.push_back(op.dense());
  return out;
}

KLResult oracle_check(const PICode& code, ConditionFamily family, int t, int s,
                      double tol, int max_qubits) {
  validate_oracle_args(code.N, family, t, s);
  guard_qubits(working_register(code.N, family, t, s), max_qubits,
               "oracle_check");
  const Vector word0 = to_dense(code.N, code.alpha, max_qubits);
  const Vector word1 = to_dense(code.N, code.beta, max_qubits);
  std::vector<Vector> images0, images1;
  for (const SelectorOp& op : family_selectors(code.N, family, t, s)) {
    images0.push_back(op.apply(word0));
    images1.push_back(op.apply(word1));
  }
  return kl_from_images(images0, images1, tol);
}

KLResult oracle_insertion(const PICode& code, int t, double tol,
                          int max_qubits) {
  return oracle_check(code, ConditionFamily::insertion, t, 0, tol, max_qubits);
}

KLResult oracle_deletion(const PICode& code, int s, double tol,
                         int max_qubits) {
  return oracle_check(code, ConditionFamily::deletion, 0, s, tol, max_qubits);
}

PhiImage phi_map(const InsertionStructure& a, const DeletionSet& d, int N,
                 int t) {
  if (a.num_gaps() != N + 1 || a.total() != t)
    throw std::invalid_argument("phi_map: malformed insertion structure");
  // Wire layout after insertion: in each gap the inserted wires in register
  // order, with the original wires in between.
  struct Token {
    bool inserted;
    int index;  // register index if inserted, original position otherwise
  };
  std::vector<Token> layout;
  layout.reserve(N + t);
  int next_register = 1;
  for (int gap = 0; gap <= N; ++gap) {
    for (int i = 0; i < a.parts[gap]; ++i)
      layout.push_back(Token{true, next_register++});
    if (gap < N)
      layout.push_back(Token{false, gap + 1});
  }
  std::vector<bool> hit(N + t + 1, false);
  for (int p : d.indices) {
    if (p < 1 || p > N + t)
      throw std::invalid_argument("phi_map: deletion position out of range");
    if (hit[p])
      throw std::invalid_argument("phi_map: repeated deletion position");
    hit[p] = true;
  }
  PhiImage image;
  image.reduced.parts.assign(1, 0);
  for (int pos = 1; pos <= N + t; ++pos) {
    const Token& token = layout[pos - 1];
    if (hit[pos]) {
      if (token.inserted)
        image.deleted_registers.push_back(token.index);
      continue;
    }
    if (token.inserted)
      ++image.reduced.parts.back();
    else
      image.reduced.parts.push_back(0);
  }
  image.ell = static_cast<int>(image.deleted_registers.size());
  return image;
}

SwapLemmaCertificate swap_lemma_verify(const Matrix& rho,
                                       const ChannelSpec& spec, double tol,
                                       int max_qubits, std::uint64_t seed) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("swap_lemma_verify: state must be square");
  const int N = qubits_for(rho.rows());
  const int t = spec.t, s = spec.s;
  guard_qubits(N + t, max_qubits, "swap_lemma_verify");
  if (s > N + t)
    throw std::invalid_argument(
        "swap_lemma_verify: deletion count exceeds the grown register");
  Rng rng(seed);
  if (!is_permutation_invariant(rho, N, tol, rng))
    throw std::invalid_argument(
        "swap_lemma_verify: input state failed the permutation-invariance "
        "check (20 random wire permutations)");

  SwapLemmaCertificate cert;
  cert.N = N;
  cert.t = t;
  cert.s = s;
  cert.tolerance = tol;

  const auto [structures, sprobs] = resolve_structures(spec, N);
  const auto [deletions, dprobs] = resolve_deletions(spec, N + t);
  const Matrix phi = mixed_insertion_state(spec);
  const Matrix lhs = compose_full_insdel(rho, spec, max_qubits);

  // Reduced original-register states: by permutation invariance the traced
  // positions are immaterial, so fix them to the leading ones.
  std::map<int, Matrix> reduced_rho;
  auto rho_after = [&](int removed) -> const Matrix& {
    auto found = reduced_rho.find(removed);
    if (found == reduced_rho.end()) {
      std::vector<int> lead(removed);
      for (int i = 0; i < removed; ++i)
        lead[i] = i + 1;
      found = reduced_rho.emplace(removed, partial_trace(rho, N, lead)).first;
    }
    return found->second;
  };

  struct GroupSums {
    Matrix direct, reordered;
  };
  std::map<std::pair<int, std::vector<int>>, GroupSums> groups;
  const Index out_dim = dim_for(N + t - s);

  for (std::size_t ai = 0; ai < structures.size(); ++ai) {
    const InsertionStructure& a = structures[ai];
    const WirePermutation perm = permutation_for_structure(a, N, t);
    const Matrix permuted = perm.conjugate(kron(phi, rho));
    for (std::size_t di = 0; di < deletions.size(); ++di) {
      const DeletionSet& d = deletions[di];
      const double weight = sprobs[ai] * dprobs[di];
      const PhiImage image = phi_map(a, d, N, t);
      cert.phi_table.push_back(PhiTableRow{a, d, image.ell, image.reduced});

      const Matrix direct =
          weight * partial_trace(permuted, N + t, d.indices);
      // Reordered form: trace the inserted register over the positions the
      // deletion actually hit, delete s - ell leading original qubits, then
      // place the surviving insertions by the reduced structure.
      const Matrix sigma = partial_trace(phi, t, image.deleted_registers);
      const Matrix& tau = rho_after(s - image.ell);
      const WirePermutation reduced_perm = permutation_for_structure(
          image.reduced, N - (s - image.ell), t - image.ell);
      const Matrix reordered =
          weight * reduced_perm.conjugate(kron(sigma, tau));

      auto [it, fresh] = groups.try_emplace(
          std::make_pair(image.ell, image.reduced.parts));
      if (fresh) {
        it->second.direct = Matrix::Zero(out_dim, out_dim);
        it->second.reordered = Matrix::Zero(out_dim, out_dim);
      }
      it->second.direct += direct;
      it->second.reordered += reordered;
    }
  }

  cert.ell_weights.assign(std::min(s, t) + 1, 0.0);
  Matrix rhs = Matrix::Zero(out_dim, out_dim);
  for (const auto& [key, sums] : groups) {
    cert.max_group_error =
        std::max(cert.max_group_error,
                 (sums.direct - sums.reordered).cwiseAbs().maxCoeff());
    cert.ell_weights[key.first] += sums.reordered.trace().real();
    rhs += sums.reordered;
  }
  double weight_sum = 0.0;
  double min_weight = 0.0;
  for (double r : cert.ell_weights) {
    weight_sum += r;
    min_weight = std::min(min_weight, r);
  }
  cert.weight_sum_error = std::abs(weight_sum - 1.0);
  cert.trace_distance_value = trace_distance(lhs, rhs);
  cert.passed = cert.trace_distance_value <= tol &&
                cert.max_group_error <= tol && cert.weight_sum_error <= tol &&
                min_weight >= -tol;
  return cert;
}

}  // namespace piqec
