/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/conditions.hpp"

#include <algorithm>
#include <stdexcept>

#include "piqec/combinatorics.hpp"

namespace piqec {

namespace {

// One block of the shared kernel: all (a, b) residuals for a fixed removed
// count m.  A block with m > N never iterates k and contributes zeros;
// callers still receive its terms so reports enumerate every index.
void append_block(std::vector<ConditionTerm>& ortho,
                  std::vector<ConditionTerm>& deform, const Vector& alpha,
                  const Vector& beta, int N, int ell, int j, int m) {
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      Complex s1{0.0, 0.0}, s2{0.0, 0.0};
      for (int k = 0; k + m <= N; ++k) {
        const double w = condition_weight(N, m, k, a, b);
        if (w == 0.0)
          continue;
        s1 += w * std::conj(alpha(k + a)) * beta(k + b);
        s2 += w * (std::conj(alpha(k + a)) * alpha(k + b) -
                   std::conj(beta(k + a)) * beta(k + b));
      }
      ortho.push_back(ConditionTerm{1, ell, j, a, b, s1});
      deform.push_back(ConditionTerm{2, ell, j, a, b, s2});
    }
}

void validate_family_args(int N, ConditionFamily family, int t, int s) {
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

}  // namespace

std::vector<ConditionTerm> condition_terms(const Vector& alpha,
                                           const Vector& beta, int N,
                                           ConditionFamily family, int t,
                                           int s) {
  if (alpha.size() != N + 1 || beta.size() != N + 1)
    throw std::invalid_argument("coefficient vectors must have length N + 1");
  validate_family_args(N, family, t, s);
  std::vector<ConditionTerm> ortho, deform;
  switch (family) {
    case ConditionFamily::insertion:
      for (int j = 0; j <= t; ++j)
        append_block(ortho, deform, alpha, beta, N, 0, j, t - j);
      break;
    case ConditionFamily::deletion:
      append_block(ortho, deform, alpha, beta, N, 0, 0, s);
      break;
    case ConditionFamily::semi_insdel:
      for (int j = 0; j <= t; ++j)
        append_block(ortho, deform, alpha, beta, N, 0, j, t + s - j);
      break;
    case ConditionFamily::full_insdel:
      for (int ell = 0; ell <= std::min(s, t); ++ell)
        for (int j = 0; j <= t - ell; ++j)
          append_block(ortho, deform, alpha, beta, N, ell, j,
                       t + s - 2 * ell - j);
      break;
  }
  ortho.insert(ortho.end(), deform.begin(), deform.end());
  return ortho;
}

namespace {

ConditionReport build_report(const PICode& code, ConditionFamily family, int t,
                             int s, double tol) {
  ConditionReport report;
  report.family = family;
  report.N = code.N;
  report.t = t;
  report.s = s;
  report.tolerance = tol;
  report.terms = condition_terms(code.alpha, code.beta, code.N, family, t, s);
  for (std::size_t i = 0; i < report.terms.size(); ++i) {
    const double r = report.terms[i].residual();
    if (r > report.max_residual) {
      report.max_residual = r;
      report.worst_index = i;
    }
  }
  report.passed = report.max_residual <= tol;
  return report;
}

}  // namespace

ConditionReport eval_insertion_conditions(const PICode& code, int t,
                                          double tol) {
  return build_report(code, ConditionFamily::insertion, t, 0, tol);
}

ConditionReport eval_deletion_conditions(const PICode& code, int s,
                                         double tol) {
  return build_report(code, ConditionFamily::deletion, 0, s, tol);
}

ConditionReport eval_semi_insdel_conditions(const PICode& code, int t, int s,
                                            double tol) {
  return build_report(code, ConditionFamily::semi_insdel, t, s, tol);
}

ConditionReport eval_full_insdel_conditions(const PICode& code, int t, int s,
                                            double tol) {
  return build_report(code, ConditionFamily::full_insdel, t, s, tol);
}

ConditionReport eval_conditions(const PICode& code, ConditionFamily family,
                                int t, int s, double tol) {
  return build_report(code, family, t, s, tol);
}

EquivalenceReport equivalence_check(const PICode& code, int t, double tol) {
  EquivalenceReport report;
  report.N = code.N;
  report.t = t;
  report.tolerance = tol;
  report.insertion = eval_insertion_conditions(code, t, tol);
  report.insertion_passed = report.insertion.passed;
  report.all_deletions_passed = true;
  for (int s = 0; s <= t; ++s) {
    report.deletions.push_back(eval_deletion_conditions(code, s, tol));
    report.all_deletions_passed =
        report.all_deletions_passed && report.deletions.back().passed;
  }
  // The j-th insertion block repeats the single block of the (t - j)-deletion
  // conditions; pair the terms up and record the (exactly zero) gaps.
  for (const ConditionTerm& term : report.insertion.terms) {
    const ConditionReport& partner = report.deletions[t - term.j];
    const auto match = std::find_if(
        partner.terms.begin(), partner.terms.end(), [&](const ConditionTerm& d) {
          return d.condition == term.condition && d.a == term.a &&
                 d.b == term.b;
        });
    if (match == partner.terms.end())
      throw std::logic_error("equivalence_check: unmatched condition term");
    report.pairs.push_back(EquivalenceTermPair{
        term.condition, term.j, term.a, term.b, term.value, match->value});
    report.max_term_gap = std::max(report.max_term_gap,
                                   std::abs(term.value - match->value));
  }
  report.agree = report.insertion_passed == report.all_deletions_passed;
  return report;
}

}  // namespace piqec
