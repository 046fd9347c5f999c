/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "piqec/linalg.hpp"

using namespace piqec;

namespace {

Matrix random_matrix(Index dim, Rng& rng) {
  Matrix m(dim, dim);
  for (Index r = 0; r < dim; ++r)
    for (Index c = 0; c < dim; ++c)
      m(r, c) = rng.complex_normal();
  return m;
}

Matrix random_density(Index dim, Rng& rng) {
  const Matrix a = random_matrix(dim, rng);
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

}  // namespace

TEST_CASE("qubits_for accepts powers of two only") {
  CHECK(qubits_for(1) == 0);
  CHECK(qubits_for(2) == 1);
  CHECK(qubits_for(8) == 3);
  CHECK_THROWS_AS(qubits_for(6), std::invalid_argument);
  CHECK_THROWS_AS(qubits_for(0), std::invalid_argument);
}

TEST_CASE("bit_at uses qubit 1 as the most significant bit") {
  // Basis index 4 of three qubits is bitstring 100.
  CHECK(bit_at(4, 1, 3) == 1);
  CHECK(bit_at(4, 2, 3) == 0);
  CHECK(bit_at(4, 3, 3) == 0);
}

TEST_CASE("kron matches hand-computed blocks") {
  Matrix a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1.0));
  CHECK(k(0, 0) == Complex(0.0));
  CHECK(k(1, 0) == Complex(1.0));
  CHECK(k(0, 3) == Complex(2.0));
  CHECK(k(3, 2) == Complex(4.0));

  Vector u(2), v(2);
  u << 1.0, 2.0;
  v << 3.0, 4.0;
  const Vector kv = kron_vec(u, v);
  CHECK(kv(0) == Complex(3.0));
  CHECK(kv(1) == Complex(4.0));
  CHECK(kv(2) == Complex(6.0));
  CHECK(kv(3) == Complex(8.0));
}

TEST_CASE("partial_trace agrees with the literal reference on random input") {
  Rng rng(11);
  const int n = 5;
  const Matrix rho = random_density(dim_for(n), rng);
  const std::vector<std::vector<int>> cases = {
      {}, {1}, {5}, {2, 4}, {1, 2, 3}, {1, 3, 5}, {1, 2, 3, 4, 5}};
  for (const auto& positions : cases) {
    const Matrix fast = partial_trace(rho, n, positions);
    const Matrix slow = partial_trace_reference(rho, n, positions);
    CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("partial_trace removes exactly the tensor factors asked for") {
  Rng rng(5);
  const Matrix a = random_density(4, rng);  // qubits 1..2
  const Matrix b = random_density(2, rng);  // qubit 3
  const Matrix joint = kron(a, b);
  CHECK((partial_trace(joint, 3, {3}) - a).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((partial_trace(joint, 3, {1, 2}) - b).cwiseAbs().maxCoeff() < 1e-13);
  // Tracing everything leaves the overall trace.
  const Matrix scalar = partial_trace(joint, 3, {1, 2, 3});
  CHECK(scalar.rows() == 1);
  CHECK(std::abs(scalar(0, 0) - Complex(1.0)) < 1e-13);
  CHECK_THROWS_AS(partial_trace(joint, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(joint, 3, {1, 1}), std::invalid_argument);
}

TEST_CASE("wire permutations relabel basis indices correctly") {
  // Output position p carries input wire source[p-1]: with source = (2,3,1)
  // the bitstring b1 b2 b3 becomes b2 b3 b1.
  const WirePermutation perm = wire_permutation_from_source(3, {2, 3, 1});
  CHECK(perm.index_map[0b100] == 0b001);
  CHECK(perm.index_map[0b010] == 0b100);
  CHECK(perm.index_map[0b001] == 0b010);
  CHECK(perm.index_map[0b110] == 0b101);

  const Matrix dense = perm.dense();
  CHECK((dense * dense.adjoint() - Matrix::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  Rng rng(3);
  const Matrix rho = random_density(8, rng);
  const Matrix direct = perm.conjugate(rho);
  const Matrix via_dense = dense * rho * dense.adjoint();
  CHECK((direct - via_dense).cwiseAbs().maxCoeff() < 1e-13);

  Vector v(8);
  for (Index i = 0; i < 8; ++i)
    v(i) = Complex(static_cast<double>(i), 0.0);
  const Vector pv = perm.apply(v);
  for (Index i = 0; i < 8; ++i)
    CHECK(pv(perm.index_map[i]) == v(i));

  const WirePermutation id = wire_permutation_from_source(3, {1, 2, 3});
  for (Index i = 0; i < 8; ++i)
    CHECK(id.index_map[i] == i);

  CHECK_THROWS_AS(wire_permutation_from_source(3, {1, 2, 2}),
                  std::invalid_argument);
}

TEST_CASE("rng streams are deterministic and well-formed") {
  Rng a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    CHECK(a.uniform() == b.uniform());
    CHECK(a.normal() == b.normal());
  }
  Rng c(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  const std::vector<int> perm = c.permutation(10);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 10; ++i)
    CHECK(sorted[i] == i + 1);
  CHECK_THROWS_AS(c.uniform_int(0), std::invalid_argument);
}

TEST_CASE("normal draws have plausible first moments") {
  Rng rng(7);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum_sq += x * x;
  }
  CHECK(std::abs(sum / n) < 0.05);
  CHECK(std::abs(sum_sq / n - 1.0) < 0.05);
}

TEST_CASE("random_unit_vector is normalized and seed-stable") {
  Rng a(9), b(9);
  const Vector u = random_unit_vector(8, a);
  const Vector v = random_unit_vector(8, b);
  CHECK(std::abs(u.norm() - 1.0) < 1e-14);
  CHECK((u - v).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("trace_distance matches closed-form qubit cases") {
  Matrix zero = Matrix::Zero(2, 2), mixed = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  mixed(0, 0) = 0.5;
  mixed(1, 1) = 0.5;
  Matrix one = Matrix::Zero(2, 2);
  one(1, 1) = 1.0;
  CHECK(trace_distance(zero, zero) == doctest::Approx(0.0));
  CHECK(trace_distance(zero, one) == doctest::Approx(1.0));
  CHECK(trace_distance(zero, mixed) == doctest::Approx(0.5));
}

TEST_CASE("hermitian helpers") {
  Matrix h(2, 2);
  h << Complex(1.0), Complex(0.0, 1.0), Complex(0.0, -1.0), Complex(3.0);
  CHECK(is_hermitian(h, 1e-14));
  CHECK(min_eigenvalue(h) == doctest::Approx(2.0 - std::sqrt(2.0)));
  h(0, 1) = Complex(0.5, 1.0);
  CHECK(!is_hermitian(h, 1e-14));
}
