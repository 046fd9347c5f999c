/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_LINALG_HPP_
#define PIQEC_LINALG_HPP_

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace piqec {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

// Basis convention used throughout: computational basis states of n qubits
// are indexed by their bitstrings read as binary numbers, with qubit 1 the
// most significant bit.  Qubit positions are 1-based.

inline Index dim_for(int qubits) { return Index{1} << qubits; }

// Number of qubits for a dimension that must be a power of two.
int qubits_for(Index dim);

// Bit of basis index `basis` at qubit `position` in an n-qubit register.
inline int bit_at(Index basis, int position, int n) {
  return static_cast<int>((basis >> (n - position)) & 1);
}

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron_vec(const Vector& a, const Vector& b);

// Trace out the qubits at the given 1-based positions (distinct, in 1..n)
// of an n-qubit density operator.
Matrix partial_trace(const Matrix& rho, int n, const std::vector<int>& positions);

// Literal-definition implementation of the same map, kept as an oracle for
// the optimized one.
Matrix partial_trace_reference(const Matrix& rho, int n,
                               const std::vector<int>& positions);

// Relabeling of qubit wires: output position p carries input wire source[p-1].
struct WirePermutation {
  int num_qubits = 0;
  std::vector<int> source;       // permutation of 1..n
  std::vector<Index> index_map;  // basis index b maps to index_map[b]

  Matrix dense() const;              // 2^n x 2^n permutation unitary
  Vector apply(const Vector& v) const;
  Matrix conjugate(const Matrix& rho) const;  // P rho P^dagger
};

WirePermutation wire_permutation_from_source(int n, std::vector<int> source);

// Deterministic random source: the engine is std::mt19937_64 but every
// derived distribution is implemented here so that sequences are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();             // [0, 1)
  double normal();              // standard normal, Box-Muller
  Complex complex_normal();     // independent normal real and imaginary parts
  int uniform_int(int bound);   // {0, ..., bound - 1}
  std::vector<int> permutation(int n);  // random permutation of 1..n

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Vector random_unit_vector(Index dim, Rng& rng);

bool is_hermitian(const Matrix& m, double tol);

// Trace distance (1/2) * ||a - b||_1 between Hermitian operators.
double trace_distance(const Matrix& a, const Matrix& b);

// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Matrix& m);

}  // namespace piqec

#endif  // PIQEC_LINALG_HPP_
