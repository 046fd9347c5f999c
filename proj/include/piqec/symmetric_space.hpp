/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_SYMMETRIC_SPACE_HPP_
#define PIQEC_SYMMETRIC_SPACE_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "piqec/linalg.hpp"

namespace piqec {

// Dense representations grow as 2^n; refuse anything larger than this many
// qubits unless the caller raises the limit explicitly.
inline constexpr int kDefaultMaxQubits = 14;

// Tolerance for input validation (normalization, orthogonality, distribution
// sums).
inline constexpr double kValidationTol = 1e-10;

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrthonormalityViolation : public std::runtime_error {
 public:
  OrthonormalityViolation(double cross, double alpha_norm_error,
                          double beta_norm_error, double tol);

  double cross_magnitude;    // |<logical 0|logical 1>|
  double alpha_norm_error;   // | ||alpha||^2 - 1 |
  double beta_norm_error;    // | ||beta||^2 - 1 |
};

// Permutation-invariant code on N qubits, stored as the coefficients of its
// two logical codewords over the uniform weight-k states, k = 0..N.
struct PICode {
  int N = 0;
  Vector alpha;  // codeword |0_L>, length N + 1
  Vector beta;   // codeword |1_L>, length N + 1
};

// c0 |0_L> + c1 |1_L>, kept in coefficient form.
struct LogicalState {
  int N = 0;
  Complex c0, c1;
  Vector gamma;  // c0 * alpha + c1 * beta
};

// Normalized uniform superposition of all weight-k basis states of N qubits.
Vector dicke_vector(int N, int k, int max_qubits = kDefaultMaxQubits);

// Validates lengths, normalization of both codewords and their mutual
// orthogonality within tol; throws OrthonormalityViolation on failure.
PICode make_pi_code(int N, Vector alpha, Vector beta,
                    double tol = kValidationTol);

// The g-spaced binomial family on N = g * n qubits: codeword coefficients
// sqrt(C(n, j) / 2^(n-1)) at weights k = g * j, split by the parity of j.
PICode gnu_code(int g, int n);

LogicalState logical_state(const PICode& code, Complex c0, Complex c1,
                           double tol = kValidationTol);

// Dense 2^N state vector from weight-space coefficients.
Vector to_dense(int N, const Vector& coeffs, int max_qubits = kDefaultMaxQubits);
Vector to_dense(const LogicalState& state, int max_qubits = kDefaultMaxQubits);

// Dense density operator sum_{k,l} coeff(k, l) |k><l| over the uniform
// weight states of N qubits.
Matrix dicke_density(int N, const Matrix& coeff,
                     int max_qubits = kDefaultMaxQubits);

// Monte-Carlo check that conjugating by `trials` random wire permutations
// leaves rho unchanged entrywise within tol.
bool is_permutation_invariant(const Matrix& rho, int n, double tol, Rng& rng,
                              int trials = 20);

// Random density operator supported on the permutation-invariant subspace.
Matrix random_pi_density(int N, Rng& rng, int max_qubits = kDefaultMaxQubits);

// Random validated code: two Gaussian coefficient vectors, orthonormalized.
PICode random_pi_code(int N, Rng& rng, double tol = kValidationTol);

// Registry of named code constructions for the command-line tool.
struct CodeFamily {
  std::string name;
  std::string description;
  bool takes_parameters;       // whether (g, n) apply
  PICode (*make)(int g, int n);
};

const std::vector<CodeFamily>& code_registry();
const CodeFamily* find_code_family(std::string_view name);

}  // namespace piqec

#endif  // PIQEC_SYMMETRIC_SPACE_HPP_
