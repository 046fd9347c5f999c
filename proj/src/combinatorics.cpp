/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/combinatorics.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace piqec {

namespace {

// Largest row of Pascal's triangle whose entries all fit in 64 bits.
constexpr int kMaxExactRow = 64;

const std::vector<std::vector<std::uint64_t>>& pascal_table() {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> rows(kMaxExactRow + 1);
    for (int n = 0; n <= kMaxExactRow; ++n) {
      rows[n].resize(n + 1, 1);
      for (int k = 1; k < n; ++k)
        rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
  }();
  return table;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0)
    throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // The running product is divisible by i + 1 at every step.
  for (std::int64_t i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0)
    throw std::invalid_argument("binomial_u64: n must be non-negative");
  if (n > kMaxExactRow)
    throw std::overflow_error("binomial_u64: n too large for 64-bit result");
  if (k < 0 || k > n)
    return 0;
  return pascal_table()[n][k];
}

double binomial_d(int n, int k) {
  if (n < 0)
    throw std::invalid_argument("binomial_d: n must be non-negative");
  if (k < 0 || k > n)
    return 0.0;
  if (n <= kMaxExactRow)
    return static_cast<double>(pascal_table()[n][k]);
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

int InsertionStructure::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<InsertionStructure> enumerate_insertion_structures(int N, int t) {
  if (N < 0 || t < 0)
    throw std::invalid_argument(
        "enumerate_insertion_structures: N and t must be non-negative");
  std::vector<InsertionStructure> out;
  std::vector<int> parts(N + 1, 0);
  // Fill gap by gap, counting each gap down from the remaining total so the
  // completed list comes out in decreasing lexicographic order.
  auto fill = [&](auto&& self, int gap, int remaining) -> void {
    if (gap == N) {
      parts[gap] = remaining;
      out.push_back(InsertionStructure{parts});
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      parts[gap] = v;
      self(self, gap + 1, remaining - v);
    }
  };
  fill(fill, 0, t);
  return out;
}

std::vector<DeletionSet> enumerate_deletion_sets(int N, int s) {
  if (N < 0 || s < 0 || s > N)
    throw std::invalid_argument(
        "enumerate_deletion_sets: need 0 <= s <= N");
  std::vector<DeletionSet> out;
  std::vector<int> indices(s);
  std::iota(indices.begin(), indices.end(), 1);
  while (true) {
    out.push_back(DeletionSet{indices});
    // Advance to the next subset in lexicographic order.
    int i = s - 1;
    while (i >= 0 && indices[i] == N - (s - 1 - i))
      --i;
    if (i < 0)
      break;
    ++indices[i];
    for (int j = i + 1; j < s; ++j)
      indices[j] = indices[j - 1] + 1;
  }
  return out;
}

double vandermonde_coeff(int N, int k, int m, int a) {
  if (N < 0 || m < 0 || m > N)
    throw std::invalid_argument("vandermonde_coeff: need 0 <= m <= N");
  if (k < 0 || k > N || a < 0 || a > m || k - a < 0 || k - a > N - m)
    return 0.0;
  return std::sqrt(binomial_d(m, a) * binomial_d(N - m, k - a) /
                   binomial_d(N, k));
}

double condition_weight(int N, int m, int k, int a, int b) {
  if (N < 0)
    throw std::invalid_argument("condition_weight: N must be non-negative");
  // A block that removes more qubits than exist contributes nothing.
  if (m < 0 || m > N)
    return 0.0;
  if (k < 0 || k > N - m || k + a > N || k + b > N || a < 0 || b < 0)
    return 0.0;
  if (N <= 64) {
    return static_cast<double>(binomial_u64(N - m, k)) /
           std::sqrt(binomial_d(N, k + a) * binomial_d(N, k + b));
  }
  auto lg = [](int n, int r) {
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) -
           std::lgamma(n - r + 1.0);
  };
  return std::exp(lg(N - m, k) - 0.5 * (lg(N, k + a) + lg(N, k + b)));
}

}  // namespace piqec
