/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/symmetric_space.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "piqec/combinatorics.hpp"

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

int weight(Index basis) {
  return std::popcount(static_cast<std::uint64_t>(basis));
}

PICode make_four_qubit(int, int) { return gnu_code(2, 2); }

PICode make_gnu(int g, int n) { return gnu_code(g, n); }

PICode make_bare_qubit(int, int) {
  Vector alpha(2), beta(2);
  alpha << 1.0, 0.0;
  beta << 0.0, 1.0;
  return make_pi_code(1, alpha, beta);
}

}  // namespace

OrthonormalityViolation::OrthonormalityViolation(double cross,
                                                 double alpha_err,
                                                 double beta_err, double tol)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "codeword orthonormality violated (tol " << tol
            << "): |<0|1>| = " << cross << ", | ||alpha||^2 - 1 | = "
            << alpha_err << ", | ||beta||^2 - 1 | = " << beta_err;
        return msg.str();
      }()),
      cross_magnitude(cross),
      alpha_norm_error(alpha_err),
      beta_norm_error(beta_err) {}

Vector dicke_vector(int N, int k, int max_qubits) {
  if (N < 1 || k < 0 || k > N)
    throw std::invalid_argument("dicke_vector: need N >= 1 and 0 <= k <= N");
  guard_qubits(N, max_qubits, "dicke_vector");
  const Index dim = dim_for(N);
  Vector v = Vector::Zero(dim);
  const double amp = 1.0 / std::sqrt(binomial_d(N, k));
  for (Index b = 0; b < dim; ++b)
    if (weight(b) == k)
      v(b) = amp;
  return v;
}

PICode make_pi_code(int N, Vector alpha, Vector beta, double tol) {
  if (N < 1)
    throw std::invalid_argument("make_pi_code: need N >= 1");
  if (alpha.size() != N + 1 || beta.size() != N + 1)
    throw std::invalid_argument(
        "make_pi_code: coefficient vectors must have length N + 1");
  const double cross = std::abs(alpha.dot(beta));
  const double alpha_err = std::abs(alpha.squaredNorm() - 1.0);
  const double beta_err = std::abs(beta.squaredNorm() - 1.0);
  if (cross > tol || alpha_err > tol || beta_err > tol)
    throw OrthonormalityViolation(cross, alpha_err, beta_err, tol);
  return PICode{N, std::move(alpha), std::move(beta)};
}

PICode gnu_code(int g, int n) {
  if (g < 1 || n < 1)
    throw std::invalid_argument("gnu_code: need g >= 1 and n >= 1");
  const int N = g * n;
  Vector alpha = Vector::Zero(N + 1), beta = Vector::Zero(N + 1);
  const double denom = std::pow(2.0, n - 1);
  for (int j = 0; j <= n; ++j) {
    const double amp = std::sqrt(binomial_d(n, j) / denom);
    (j % 2 == 0 ? alpha : beta)(g * j) = amp;
  }
  return make_pi_code(N, std::move(alpha), std::move(beta));
}

LogicalState logical_state(const PICode& code, Complex c0, Complex c1,
                           double tol) {
  const double norm_err = std::abs(std::norm(c0) + std::norm(c1) - 1.0);
  if (norm_err > tol)
    throw std::invalid_argument(
        "logical_state: |c0|^2 + |c1|^2 must equal 1");
  return LogicalState{code.N, c0, c1, c0 * code.alpha + c1 * code.beta};
}

Vector to_dense(int N, const Vector& coeffs, int max_qubits) {
  if (N < 1 || coeffs.size() != N + 1)
    throw std::invalid_argument("to_dense: coefficient length must be N + 1");
  guard_qubits(N, max_qubits, "to_dense");
  const Index dim = dim_for(N);
  Vector out(dim);
  for (Index b = 0; b < dim; ++b) {
    const int k = weight(b);
    out(b) = coeffs(k) / std::sqrt(binomial_d(N, k));
  }
  return out;
}

Vector to_dense(const LogicalState& state, int max_qubits) {
  return to_dense(state.N, state.gamma, max_qubits);
}

Matrix dicke_density(int N, const Matrix& coeff, int max_qubits) {
  if (N < 1 || coeff.rows() != N + 1 || coeff.cols() != N + 1)
    throw std::invalid_argument(
        "dicke_density: coefficient matrix must be (N+1) x (N+1)");
  guard_qubits(N, max_qubits, "dicke_density");
  const Index dim = dim_for(N);
  std::vector<double> inv_root(N + 1);
  for (int k = 0; k <= N; ++k)
    inv_root[k] = 1.0 / std::sqrt(binomial_d(N, k));
  Matrix out(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const int kr = weight(r);
    for (Index c = 0; c < dim; ++c) {
      const int kc = weight(c);
      out(r, c) = coeff(kr, kc) * inv_root[kr] * inv_root[kc];
    }
  }
  return out;
}

bool is_permutation_invariant(const Matrix& rho, int n, double tol, Rng& rng,
                              int trials) {
  if (rho.rows() != dim_for(n) || rho.cols() != dim_for(n))
    throw std::invalid_argument("is_permutation_invariant: dimension mismatch");
  for (int trial = 0; trial < trials; ++trial) {
    const WirePermutation perm =
        wire_permutation_from_source(n, rng.permutation(n));
    if ((perm.conjugate(rho) - rho).cwiseAbs().maxCoeff() > tol)
      return false;
  }
  return true;
}

Matrix random_pi_density(int N, Rng& rng, int max_qubits) {
  if (N < 1)
    throw std::invalid_argument("random_pi_density: need N >= 1");
  guard_qubits(N, max_qubits, "random_pi_density");
  Matrix a(N + 1, N + 1);
  for (int r = 0; r <= N; ++r)
    for (int c = 0; c <= N; ++c)
      a(r, c) = rng.complex_normal();
  Matrix coeff = a * a.adjoint();
  coeff /= coeff.trace().real();
  return dicke_density(N, coeff, max_qubits);
}

PICode random_pi_code(int N, Rng& rng, double tol) {
  if (N < 1)
    throw std::invalid_argument("random_pi_code: need N >= 1");
  Vector alpha = random_unit_vector(N + 1, rng);
  Vector beta(N + 1);
  for (Index i = 0; i <= N; ++i)
    beta(i) = rng.complex_normal();
  beta -= alpha.dot(beta) * alpha;
  beta /= beta.norm();
  return make_pi_code(N, std::move(alpha), std::move(beta), tol);
}

const std::vector<CodeFamily>& code_registry() {
  static const std::vector<CodeFamily> registry = {
      {"four-qubit",
       "Four-qubit code correcting one insertion or one deletion",
       false, make_four_qubit},
      {"gnu",
       "Spaced binomial family on N = g * n qubits (parameters g, n)",
       true, make_gnu},
      {"bare-qubit",
       "Single bare qubit; corrects nothing, useful as a negative control",
       false, make_bare_qubit},
  };
  return registry;
}

const CodeFamily* find_code_family(std::string_view name) {
  for (const CodeFamily& family : code_registry())
    if (family.name == name)
      return &family;
  return nullptr;
}

}  // namespace piqec
