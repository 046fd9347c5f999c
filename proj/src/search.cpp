/**
 * This code is part of piqec.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "piqec/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace piqec {

namespace {

using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

void validate_problem(const SearchProblem& problem) {
  if (problem.N < 1)
    throw std::invalid_argument("search: need N >= 1");
  if (problem.t < 0 || problem.s < 0)
    throw std::invalid_argument("search: error counts must be non-negative");
  if (!(problem.penalty_weight > 0.0))
    throw std::invalid_argument("search: penalty weight must be positive");
  if (problem.num_starts < 1 || problem.max_iterations < 1)
    throw std::invalid_argument("search: starts and iterations must be >= 1");
}

struct Packed {
  Vector alpha, beta;
};

Packed unpack(const RealVector& x, int N) {
  const int len = N + 1;
  Packed out{Vector(len), Vector(len)};
  for (int i = 0; i < len; ++i) {
    out.alpha(i) = Complex(x(i), x(len + i));
    out.beta(i) = Complex(x(2 * len + i), x(3 * len + i));
  }
  return out;
}

RealVector pack(const Vector& alpha, const Vector& beta) {
  const int len = static_cast<int>(alpha.size());
  RealVector x(4 * len);
  for (int i = 0; i < len; ++i) {
    x(i) = alpha(i).real();
    x(len + i) = alpha(i).imag();
    x(2 * len + i) = beta(i).real();
    x(3 * len + i) = beta(i).imag();
  }
  return x;
}

// Smooth residuals used by the optimizer: real and imaginary parts listed
// separately so the vector is differentiable at the zero locus.  The sum of
// squares equals objective_value exactly.
RealVector smooth_residuals(const Vector& alpha, const Vector& beta,
                            const SearchProblem& problem) {
  const std::vector<ConditionTerm> terms = condition_terms(
      alpha, beta, problem.N, problem.family, problem.t, problem.s);
  const double root_w = std::sqrt(problem.penalty_weight);
  const Complex cross = alpha.dot(beta);
  RealVector r(2 * terms.size() + 4);
  Index at = 0;
  for (const ConditionTerm& term : terms) {
    r(at++) = term.value.real();
    r(at++) = term.value.imag();
  }
  r(at++) = root_w * cross.real();
  r(at++) = root_w * cross.imag();
  r(at++) = root_w * (alpha.squaredNorm() - 1.0);
  r(at++) = root_w * (beta.squaredNorm() - 1.0);
  return r;
}

struct LocalFit {
  RealVector x;
  double cost = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

// Damped least-squares descent with a finite-difference Jacobian.
LocalFit levenberg_marquardt(RealVector x, const SearchProblem& problem) {
  const auto eval = [&](const RealVector& point) {
    const Packed p = unpack(point, problem.N);
    return smooth_residuals(p.alpha, p.beta, problem);
  };
  LocalFit fit;
  RealVector r = eval(x);
  double cost = r.squaredNorm();
  double damping = 1e-3;
  const int n = static_cast<int>(x.size());
  for (int iter = 0; iter < problem.max_iterations; ++iter) {
    fit.iterations = iter + 1;
    if (cost < 1e-28)
      break;
    RealMatrix jac(r.size(), n);
    for (int col = 0; col < n; ++col) {
      const double h = 1e-7 * std::max(1.0, std::abs(x(col)));
      RealVector shifted = x;
      shifted(col) += h;
      jac.col(col) = (eval(shifted) - r) / h;
    }
    const RealVector gradient = jac.transpose() * r;
    if (gradient.lpNorm<Eigen::Infinity>() < 1e-14)
      break;
    const RealMatrix hessian = jac.transpose() * jac;
    bool accepted = false;
    for (int attempt = 0; attempt < 25; ++attempt) {
      RealMatrix damped = hessian;
      damped.diagonal().array() += damping;
      const RealVector step = damped.ldlt().solve(-gradient);
      const RealVector candidate = x + step;
      const RealVector r_new = eval(candidate);
      const double cost_new = r_new.squaredNorm();
      if (cost_new < cost) {
        x = candidate;
        r = r_new;
        cost = cost_new;
        damping = std::max(damping / 3.0, 1e-14);
        accepted = true;
        break;
      }
      damping *= 4.0;
      if (damping > 1e12)
        break;
    }
    if (!accepted)
      break;
  }
  fit.x = std::move(x);
  fit.cost = cost;
  return fit;
}

// Exact orthonormalization of a near-orthonormal pair; returns false when the
// pair is too degenerate to normalize.
bool polish(Vector& alpha, Vector& beta) {
  const double alpha_norm = alpha.norm();
  if (alpha_norm < 1e-8)
    return false;
  alpha /= alpha_norm;
  beta -= alpha.dot(beta) * alpha;
  const double beta_norm = beta.norm();
  if (beta_norm < 1e-8)
    return false;
  beta /= beta_norm;
  return true;
}

}  // namespace

std::vector<double> residual_vector(const Vector& alpha, const Vector& beta,
                                    const SearchProblem& problem) {
  validate_problem(problem);
  const std::vector<ConditionTerm> terms = condition_terms(
      alpha, beta, problem.N, problem.family, problem.t, problem.s);
  std::vector<double> out;
  out.reserve(terms.size() + 3);
  for (const ConditionTerm& term : terms)
    out.push_back(term.residual());
  const double root_w = std::sqrt(problem.penalty_weight);
  out.push_back(root_w * std::abs(alpha.dot(beta)));
  out.push_back(root_w * std::abs(alpha.squaredNorm() - 1.0));
  out.push_back(root_w * std::abs(beta.squaredNorm() - 1.0));
  return out;
}

double objective_value(const Vector& alpha, const Vector& beta,
                       const SearchProblem& problem) {
  double sum = 0.0;
  for (double r : residual_vector(alpha, beta, problem))
    sum += r * r;
  return sum;
}

SearchResult find_code(const SearchProblem& problem) {
  validate_problem(problem);
  // The final certification runs the dense numerical oracle; refuse problems
  // whose certification register would exceed the guard before optimizing.
  int oracle_qubits = problem.N;
  switch (problem.family) {
    case ConditionFamily::insertion:
    case ConditionFamily::full_insdel:
      oracle_qubits = problem.N + problem.t;
      break;
    case ConditionFamily::semi_insdel:
      oracle_qubits = std::max(problem.N, problem.N - problem.s + problem.t);
      break;
    case ConditionFamily::deletion:
      break;
  }
  if (oracle_qubits > problem.max_qubits)
    throw ResourceGuardError(
        "search: certifying this family needs " +
        std::to_string(oracle_qubits) + " dense qubits, above the limit of " +
        std::to_string(problem.max_qubits));
  const int len = problem.N + 1;
  SearchResult result;
  result.objective = std::numeric_limits<double>::infinity();

  for (int start = 0; start < problem.num_starts; ++start) {
    const std::uint64_t start_seed =
        problem.seed + static_cast<std::uint64_t>(start);
    Rng rng(start_seed);
    Vector alpha = random_unit_vector(len, rng);
    Vector beta = random_unit_vector(len, rng);
    const LocalFit fit = levenberg_marquardt(pack(alpha, beta), problem);

    Packed candidate = unpack(fit.x, problem.N);
    double objective = std::numeric_limits<double>::infinity();
    if (polish(candidate.alpha, candidate.beta))
      objective = objective_value(candidate.alpha, candidate.beta, problem);

    result.starts.push_back(
        StartTrace{start, start_seed, fit.iterations, objective});
    if (objective < result.objective) {
      result.objective = objective;
      result.best_start = start;
      result.alpha = candidate.alpha;
      result.beta = candidate.beta;
    }
  }

  if (result.best_start >= 0 &&
      result.objective < problem.success_threshold) {
    try {
      PICode code = make_pi_code(problem.N, result.alpha, result.beta);
      const KLResult oracle =
          oracle_check(code, problem.family, problem.t, problem.s,
                       problem.oracle_tol, problem.max_qubits);
      result.oracle_confirmed = oracle.passed;
      if (oracle.passed) {
        result.converged = true;
        result.code = std::move(code);
      }
    } catch (const OrthonormalityViolation&) {
      // fall through: best candidate is reported without convergence
    }
  }
  return result;
}

}  // namespace piqec
