#pragma once

#include <optional>
#include <string>

#include "scorematch/linalg.hpp"
#include "scorematch/models.hpp"
#include "scorematch/weights.hpp"

namespace scorematch {

struct EstimatorResult {
    Vector theta_hat;
    std::string label;
    /// Condition number of the solved system, when a solve was involved.
    std::optional<double> condition;
    /// Newton iteration count, for the likelihood solvers.
    std::optional<int> iterations;
};

/// Closed-form single-weight estimator: solves b_bar theta = a_bar from the
/// sample moment blocks (the scalar ratio a/b when p = 1), retrying with the
/// default ridge on rank deficiency. Throws DegenerateProblem when the
/// ridged system is still unusable.
EstimatorResult single_weight_estimate(const ScoreModel& model,
                                       const WeightSpec& weight,
                                       const Vector& sample);

/// Basis-route estimator theta = M^-1 u with
///   M_jk = sum_i w phi_j' phi_k'
///   u_j  = -sum_i (w' phi_j' + w phi_j'')
/// assembled directly from the basis functions.
EstimatorResult basis_estimate(const BasisModel& basis, const WeightSpec& weight,
                               const Vector& sample);

/// One-parameter gamma MLE with known rate: solves
/// psi(alpha) = mean(log x) + log(rate) by safeguarded Newton and reports
/// theta = alpha - 1. Throws NonPositiveData when the sample is not strictly
/// positive.
EstimatorResult gamma_mle(const Vector& sample, double known_rate);

/// Two-parameter gamma MLE: solves log(alpha) - psi(alpha) =
/// log(mean x) - mean(log x) by Newton, beta = alpha / mean x; reports
/// theta = (alpha - 1, beta). A sample with zero log-dispersion (constant
/// data) is reported as DegenerateProblem.
EstimatorResult gamma_mle_two_param(const Vector& sample);

/// Classical moment estimator in theta coordinates: x_bar - 1 for p = 1
/// (unit rate), (x_bar^2/s2 - 1, x_bar/s2) for p = 2 with the population
/// variance s2.
EstimatorResult classical_moments(std::size_t dim, const Vector& sample);

/// Empirical weighted score objective
///   D_w(theta) = n^-1 sum { w s_theta^2 + 2 (w' s_theta + w s_theta') }.
double empirical_objective(const ScoreModel& model, const WeightSpec& weight,
                           const Vector& sample, const Vector& theta);

/// Exact minimizer of the empirical weighted score objective. The objective
/// is a convex quadratic in theta for affine scores, so the Hessian and
/// gradient are reconstructed exactly from objective evaluations around
/// init and the minimizer is a single solve. Serves as an oracle that never
/// touches the moment-block formulas.
EstimatorResult minimize_empirical_objective(const ScoreModel& model,
                                             const WeightSpec& weight,
                                             const Vector& sample,
                                             const Vector& init);

} // namespace scorematch
