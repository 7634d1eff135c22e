#pragma once

#include <span>

#include "scorematch/linalg.hpp"
#include "scorematch/models.hpp"
#include "scorematch/moments.hpp"
#include "scorematch/weights.hpp"

namespace scorematch {

/// Stacked moment system over m weights: b_stack is (m p) x p, a_stack has
/// length m p, weight is the (m p) x (m p) symmetric positive definite
/// weighting matrix. Block order follows the declared weight order.
struct GmmProblem {
    Matrix b_stack;
    Vector a_stack;
    Matrix weight;
    std::size_t m = 0;
    std::size_t p = 0;
};

struct GmmEstimate {
    Vector theta_hat;
    double objective_value = 0.0;
    /// Condition estimate of the normal matrix B^T W B actually solved.
    double condition_number = 0.0;
    double ridge_used = 0.0;
    int steps = 1;
};

/// Builds the stacked problem from per-weight moment blocks with W = I.
GmmProblem build_gmm_problem(const ScoreModel& model,
                             std::span<const WeightSpec> weights,
                             const Vector& sample);

/// (B theta - a)^T W (B theta - a). Throws DimensionMismatch.
double objective(const GmmProblem& problem, const Vector& theta);

/// Minimizer (B^T W B)^-1 B^T W a, retried with the default ridge when
/// pivoting flags the normal matrix as rank deficient. Throws
/// DegenerateProblem when even the ridged system exceeds condition 1e12.
GmmEstimate solve_gmm(const GmmProblem& problem);

/// Shape of the estimated weighting matrix.
///
/// Full is the textbook inverse of the moment covariance. Diagonal keeps
/// only the per-moment inverse variances; with moment grids built from
/// nearby weight functions the stacked covariance is close to singular and
/// its estimated inverse is unstable at moderate n, so the diagonal form is
/// what two_step_gmm uses.
enum class WeightForm { full, diagonal };

/// W = (S + ridge I)^-1 (or the diagonal-only variant) with
/// S = n^-1 sum l_i l_i^T evaluated at theta_ref. When the supplied ridge
/// leaves S rank deficient the numerics default ridge is applied instead.
/// Result is symmetric positive definite. Throws EmptyInput on an empty
/// sample.
Matrix estimate_optimal_weight(const ScoreModel& model,
                               std::span<const WeightSpec> weights,
                               const Vector& sample, const Vector& theta_ref,
                               double ridge = 0.0,
                               WeightForm form = WeightForm::full);

/// Single solve with W = I (steps = 1).
GmmEstimate one_step_gmm(const ScoreModel& model,
                         std::span<const WeightSpec> weights,
                         const Vector& sample);

/// Step 1 solves with W = I; step 2 re-solves with the inverse-variance
/// weighting estimated at the step-1 solution (steps = 2).
GmmEstimate two_step_gmm(const ScoreModel& model,
                         std::span<const WeightSpec> weights,
                         const Vector& sample);

} // namespace scorematch
