/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_COMBINATORICS_HPP_
#define PIQEC_COMBINATORICS_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace piqec {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k), exact at any size.
// Returns 0 when k < 0 or k > n; throws std::invalid_argument when n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// C(n, k) as a machine integer.  Exact for every n <= 64 (the largest row
// whose entries all fit in 64 bits); throws std::overflow_error beyond that.
std::uint64_t binomial_u64(int n, int k);

// C(n, k) as a double: exact table lookup for n <= 64, log-gamma beyond.
double binomial_d(int n, int k);

// Locations of t inserted qubits relative to an N-qubit register, recorded
// as gap counts: parts[i] qubits land in gap i, where gap 0 precedes qubit 1
// and gap N follows qubit N.  Equivalently a weak composition of t into
// N + 1 parts.
struct InsertionStructure {
  std::vector<int> parts;

  int num_gaps() const { return static_cast<int>(parts.size()); }
  int total() const;

  bool operator==(const InsertionStructure&) const = default;
};

// Positions of s deleted qubits out of {1, ..., N}, strictly increasing.
struct DeletionSet {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }

  bool operator==(const DeletionSet&) const = default;
};

// All weak compositions of t into N + 1 parts, in decreasing lexicographic
// order, so the list starts at (t, 0, ..., 0) and ends at (0, ..., 0, t).
// The list has C(N + t, t) entries.
std::vector<InsertionStructure> enumerate_insertion_structures(int N, int t);

// All s-element subsets of {1, ..., N} in increasing lexicographic order,
// starting at {1, ..., s}.  The list has C(N, s) entries; s = 0 yields the
// single empty set.
std::vector<DeletionSet> enumerate_deletion_sets(int N, int s);

// Amplitude sqrt(C(m, a) * C(N - m, k - a) / C(N, k)) with which a weight-k
// uniform state splits weight a into the first m positions across an
// (m, N - m) bipartition.  Returns 0 when a or k - a is out of range.
double vandermonde_coeff(int N, int k, int m, int a);

// Pair weight C(N - m, k) / sqrt(C(N, k + a) * C(N, k + b)) shared by every
// correctability condition family.  Returns 0 when the numerator vanishes
// (including N - m < 0) or an index leaves the valid range.
double condition_weight(int N, int m, int k, int a, int b);

}  // namespace piqec

#endif  // PIQEC_COMBINATORICS_HPP_
