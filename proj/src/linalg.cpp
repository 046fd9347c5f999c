/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace piqec {

namespace {

void check_positions(int n, const std::vector<int>& positions) {
  std::vector<bool> seen(n + 1, false);
  for (int p : positions) {
    if (p < 1 || p > n)
      throw std::invalid_argument("qubit position out of range");
    if (seen[p])
      throw std::invalid_argument("repeated qubit position");
    seen[p] = true;
  }
}

}  // namespace

int qubits_for(Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("dimension is not a power of two");
  int n = 0;
  while ((Index{1} << n) < dim)
    ++n;
  return n;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix partial_trace(const Matrix& rho, int n,
                     const std::vector<int>& positions) {
  if (rho.rows() != dim_for(n) || rho.cols() != dim_for(n))
    throw std::invalid_argument("partial_trace: dimension mismatch");
  check_positions(n, positions);
  const int s = static_cast<int>(positions.size());
  const int keep = n - s;
  // Masks that scatter a kept-subsystem index and a traced-subsystem index
  // back into a full n-qubit basis index.
  std::vector<bool> traced(n + 1, false);
  for (int p : positions)
    traced[p] = true;
  std::vector<int> keep_shift, del_shift;
  for (int p = 1; p <= n; ++p) {
    if (traced[p])
      del_shift.push_back(n - p);
    else
      keep_shift.push_back(n - p);
  }
  const Index keep_dim = dim_for(keep);
  const Index del_dim = dim_for(s);
  std::vector<Index> keep_base(keep_dim, 0), del_base(del_dim, 0);
  for (Index x = 0; x < keep_dim; ++x)
    for (int b = 0; b < keep; ++b)
      if ((x >> (keep - 1 - b)) & 1)
        keep_base[x] |= Index{1} << keep_shift[b];
  for (Index y = 0; y < del_dim; ++y)
    for (int b = 0; b < s; ++b)
      if ((y >> (s - 1 - b)) & 1)
        del_base[y] |= Index{1} << del_shift[b];
  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (Index i = 0; i < keep_dim; ++i)
    for (Index j = 0; j < keep_dim; ++j) {
      Complex acc = 0.0;
      for (Index y = 0; y < del_dim; ++y)
        acc += rho(keep_base[i] | del_base[y], keep_base[j] | del_base[y]);
      out(i, j) = acc;
    }
  return out;
}

Matrix partial_trace_reference(const Matrix& rho, int n,
                               const std::vector<int>& positions) {
  if (rho.rows() != dim_for(n) || rho.cols() != dim_for(n))
    throw std::invalid_argument("partial_trace_reference: dimension mismatch");
  check_positions(n, positions);
  std::vector<bool> traced(n + 1, false);
  for (int p : positions)
    traced[p] = true;
  const int keep = n - static_cast<int>(positions.size());
  Matrix out = Matrix::Zero(dim_for(keep), dim_for(keep));
  // Walk every matrix element of rho; it contributes when the traced bits of
  // the row and column indices agree.
  for (Index r = 0; r < rho.rows(); ++r)
    for (Index c = 0; c < rho.cols(); ++c) {
      bool diagonal = true;
      Index ri = 0, ci = 0;
      for (int p = 1; p <= n; ++p) {
        const int rb = bit_at(r, p, n), cb = bit_at(c, p, n);
        if (traced[p]) {
          if (rb != cb) {
            diagonal = false;
            break;
          }
        } else {
          ri = (ri << 1) | rb;
          ci = (ci << 1) | cb;
        }
      }
      if (diagonal)
        out(ri, ci) += rho(r, c);
    }
  return out;
}

WirePermutation wire_permutation_from_source(int n, std::vector<int> source) {
  if (static_cast<int>(source.size()) != n)
    throw std::invalid_argument("wire permutation has wrong length");
  check_positions(n, source);
  WirePermutation perm;
  perm.num_qubits = n;
  perm.source = std::move(source);
  perm.index_map.resize(dim_for(n));
  for (Index b = 0; b < dim_for(n); ++b) {
    Index out = 0;
    for (int p = 1; p <= n; ++p)
      out |= Index{bit_at(b, perm.source[p - 1], n)} << (n - p);
    perm.index_map[b] = out;
  }
  return perm;
}

Matrix WirePermutation::dense() const {
  Matrix out = Matrix::Zero(index_map.size(), index_map.size());
  for (Index b = 0; b < static_cast<Index>(index_map.size()); ++b)
    out(index_map[b], b) = 1.0;
  return out;
}

Vector WirePermutation::apply(const Vector& v) const {
  if (v.size() != static_cast<Index>(index_map.size()))
    throw std::invalid_argument("wire permutation: dimension mismatch");
  Vector out(v.size());
  for (Index b = 0; b < v.size(); ++b)
    out(index_map[b]) = v(b);
  return out;
}

Matrix WirePermutation::conjugate(const Matrix& rho) const {
  const Index dim = static_cast<Index>(index_map.size());
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("wire permutation: dimension mismatch");
  Matrix out(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j)
      out(index_map[i], index_map[j]) = rho(i, j);
  return out;
}

double Rng::uniform() {
  // 53 random bits scaled into [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 == 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

int Rng::uniform_int(int bound) {
  if (bound <= 0)
    throw std::invalid_argument("uniform_int: bound must be positive");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(bound);
  std::uint64_t raw = 0;
  do {
    raw = engine_();
  } while (raw >= limit);
  return static_cast<int>(raw % static_cast<std::uint64_t>(bound));
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(out[i], out[uniform_int(i + 1)]);
  return out;
}

Vector random_unit_vector(Index dim, Rng& rng) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i)
    v(i) = rng.complex_normal();
  const double norm = v.norm();
  if (norm == 0.0)
    return random_unit_vector(dim, rng);
  return v / norm;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols())
    return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  Matrix diff = a - b;
  // Work with the Hermitian part; inputs are density-like by contract.
  Matrix herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double min_eigenvalue(const Matrix& m) {
  Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  return solver.eigenvalues().minCoeff();
}

}  // namespace piqec
