/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_CONDITIONS_HPP_
#define PIQEC_CONDITIONS_HPP_

#include <cstddef>
#include <vector>

#include "piqec/symmetric_space.hpp"

namespace piqec {

// Pass/fail threshold on closed-form residuals.
inline constexpr double kConditionTol = 1e-9;

enum class ConditionFamily { insertion, deletion, semi_insdel, full_insdel };

// One scalar residual of a closed-form correctability condition.
//
// Every family reduces to blocks of the same kernel, indexed by the number m
// of positions removed by the combined error:
//
//   sum_k  C(N-m, k) / sqrt(C(N, k+a) C(N, k+b)) * x_{k+a}^* y_{k+b}
//
// with (x, y) = (alpha, beta) for condition 1 (logical orthogonality) and
// the difference alpha^* alpha - beta^* beta for condition 2 (equal, shape-
// preserving action on both codewords).  The indices are:
//   condition  1 or 2,
//   ell        overlap count (nonzero only for the full insertion+deletion
//              family), with m = t + s - 2*ell - j,
//   j          block index within the family (m = t - j for insertion,
//              m = s with j = 0 for deletion, m = t + s - j for the
//              deletion-then-insertion composition),
//   a, b       weight offsets in 0..m.
struct ConditionTerm {
  int condition = 1;
  int ell = 0;
  int j = 0;
  int a = 0;
  int b = 0;
  Complex value{0.0, 0.0};

  double residual() const { return std::abs(value); }
};

struct ConditionReport {
  ConditionFamily family = ConditionFamily::insertion;
  int N = 0;
  int t = 0;
  int s = 0;
  double tolerance = kConditionTol;
  std::vector<ConditionTerm> terms;  // sorted by (condition, ell, j, a, b)
  double max_residual = 0.0;
  std::size_t worst_index = 0;
  bool passed = false;
};

// All condition residuals of a family, for possibly unnormalized coefficient
// vectors, in the sorted order documented on ConditionTerm.
std::vector<ConditionTerm> condition_terms(const Vector& alpha,
                                           const Vector& beta, int N,
                                           ConditionFamily family, int t,
                                           int s);

ConditionReport eval_insertion_conditions(const PICode& code, int t,
                                          double tol = kConditionTol);
ConditionReport eval_deletion_conditions(const PICode& code, int s,
                                         double tol = kConditionTol);
ConditionReport eval_semi_insdel_conditions(const PICode& code, int t, int s,
                                            double tol = kConditionTol);
ConditionReport eval_full_insdel_conditions(const PICode& code, int t, int s,
                                            double tol = kConditionTol);
ConditionReport eval_conditions(const PICode& code, ConditionFamily family,
                                int t, int s, double tol = kConditionTol);

// Pairing of each t-insertion condition with the matching block of a
// (t - j)-deletion condition; the two sides are computed by the same kernel
// and must agree exactly.
struct EquivalenceTermPair {
  int condition = 1;
  int j = 0;
  int a = 0;
  int b = 0;
  Complex insertion_value{0.0, 0.0};
  Complex deletion_value{0.0, 0.0};
};

struct EquivalenceReport {
  int N = 0;
  int t = 0;
  double tolerance = kConditionTol;
  ConditionReport insertion;
  std::vector<ConditionReport> deletions;  // s = 0..t
  std::vector<EquivalenceTermPair> pairs;
  double max_term_gap = 0.0;
  bool insertion_passed = false;
  bool all_deletions_passed = false;
  bool agree = false;  // the two verdicts coincide
};

// Verdict-level and term-level comparison of "corrects t insertions" against
// "corrects s deletions for every s <= t".
EquivalenceReport equivalence_check(const PICode& code, int t,
                                    double tol = kConditionTol);

}  // namespace piqec

#endif  // PIQEC_CONDITIONS_HPP_
