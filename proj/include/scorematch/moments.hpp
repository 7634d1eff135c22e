#pragma once

#include <span>
#include <string>

#include "scorematch/linalg.hpp"
#include "scorematch/models.hpp"
#include "scorematch/weights.hpp"

namespace scorematch {

/// Per-weight Monte Carlo moment averages:
///   a_bar = mean of w'v + w v' + w c v
///   b_bar = -mean of w v v^T
/// so that mean lambda(theta, x) = a_bar - b_bar theta.
struct MomentBlocks {
    Vector a_bar;
    Matrix b_bar;
    std::string weight_label;
    std::size_t n = 0;
};

/// Moment function lambda(theta, x) = w v (theta.v + c) + w'v + w v',
/// componentwise. Throws SupportError for x outside the model support.
Vector lambda_at(const ScoreModel& model, const WeightSpec& weight,
                 const Vector& theta, double x);

/// Concatenation of lambda_at over the weights, in declared order.
Vector stacked_contribution(const ScoreModel& model,
                            std::span<const WeightSpec> weights,
                            const Vector& theta, double x);

/// Moment block averages over a sample. OpenMP kernel with fixed-size
/// chunking and an ordered compensated reduction: the result is bit-identical
/// for every thread count.
MomentBlocks blocks(const ScoreModel& model, const WeightSpec& weight,
                    const Vector& sample);

/// Serial streaming reference implementation, kept for testing the kernel.
MomentBlocks blocks_reference(const ScoreModel& model, const WeightSpec& weight,
                              const Vector& sample);

/// Uncentered second-moment matrix S = n^-1 sum l_i l_i^T of the stacked
/// contributions l_i = stacked_contribution(theta_ref, x_i). Deterministic
/// parallel kernel (same chunking scheme as blocks).
Matrix moment_covariance(const ScoreModel& model,
                         std::span<const WeightSpec> weights,
                         const Vector& sample, const Vector& theta_ref);

/// Serial reference for moment_covariance.
Matrix moment_covariance_reference(const ScoreModel& model,
                                   std::span<const WeightSpec> weights,
                                   const Vector& sample, const Vector& theta_ref);

} // namespace scorematch
