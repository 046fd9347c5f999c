/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef PIQEC_SEARCH_HPP_
#define PIQEC_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "piqec/conditions.hpp"
#include "piqec/kl_oracle.hpp"
#include "piqec/symmetric_space.hpp"

namespace piqec {

// Coefficient search: minimize the squared condition residuals of a family
// plus a penalty keeping the two codewords orthonormal.
struct SearchProblem {
  int N = 1;
  ConditionFamily family = ConditionFamily::deletion;
  int t = 0;
  int s = 0;
  double penalty_weight = 1.0;
  std::uint64_t seed = 1;
  int num_starts = 8;
  int max_iterations = 400;
  double success_threshold = 1e-12;  // objective value declaring success
  double condition_tol = kConditionTol;
  double oracle_tol = kOracleTol;
  int max_qubits = kDefaultMaxQubits;
};

struct StartTrace {
  int start = 0;
  std::uint64_t seed = 0;
  int iterations = 0;
  double objective = 0.0;
};

struct SearchResult {
  bool converged = false;         // objective below threshold, code validated
  bool oracle_confirmed = false;  // numerical correctability re-check passed
  double objective = 0.0;         // best objective found
  int best_start = -1;
  Vector alpha, beta;             // best coefficients found
  std::optional<PICode> code;     // present iff converged
  std::vector<StartTrace> starts;
};

// Residual magnitudes at (possibly unnormalized) coefficients: the condition
// residuals in report order, then sqrt(penalty) times the three
// orthonormality defects (|<alpha, beta>|, norms minus one).
std::vector<double> residual_vector(const Vector& alpha, const Vector& beta,
                                    const SearchProblem& problem);

// Sum of squared residuals.
double objective_value(const Vector& alpha, const Vector& beta,
                       const SearchProblem& problem);

// Deterministic multi-start damped least-squares descent.  Start i uses seed
// problem.seed + i; the best start by final objective wins, earlier starts
// break ties.  On success the returned code is exactly orthonormalized and
// re-certified by the numerical oracle.
SearchResult find_code(const SearchProblem& problem);

}  // namespace piqec

#endif  // PIQEC_SEARCH_HPP_
