#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eitbeam {

struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;

struct FitProblem {
  ResidualFn residual_fn;
  int n_params = 0;
  std::vector<double> x0;
  std::vector<double> lower;  // empty = unbounded
  std::vector<double> upper;

  void validate() const;  // throws std::invalid_argument
};

struct FitOptions {
  int max_iter = 100;
  // Convergence when ‖Jᵀr‖∞ drops below gradient_tol·max(1, initial ‖Jᵀr‖∞).
  double gradient_tol = 1e-8;
  double step_tol = 1e-12;
  double damping_init = 1e-3;
  double fd_rel_step = 1e-6;
};

struct IterationRecord {
  std::vector<double> params;
  double norm = 0.0;
};

struct FitResult {
  std::vector<double> params;
  std::vector<std::vector<double>> covariance;  // residual-variance-scaled (JᵀJ)⁻¹
  double residual_norm = 0.0;                   // Euclidean norm at the final iterate
  int n_iterations = 0;                         // accepted steps
  bool converged = false;
  bool rank_deficient = false;  // JᵀJ singular at the optimum; covariance left zero
  double gradient_norm = 0.0;
  double gradient_threshold = 0.0;
  std::vector<IterationRecord> history;  // x0 plus each accepted iterate
};

// Damped Gauss–Newton (Levenberg–Marquardt) least squares with a
// finite-difference Jacobian. Damping multiplies/divides by 10 on
// reject/accept; bounds are enforced by projection. Deterministic given
// identical inputs.
FitResult least_squares(const FitProblem& problem, const FitOptions& opts = {});

// Central-difference Jacobian; per-parameter step max(rel_step·|x_i|, abs_floor).
// Row i holds ∂r_i/∂x_j. Throws FitError naming the parameter index on
// non-finite evaluations.
std::vector<std::vector<double>> finite_difference_jacobian(const ResidualFn& residual_fn,
                                                            std::span<const double> x,
                                                            double rel_step,
                                                            double abs_floor = -1.0);

}  // namespace eitbeam
