#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "scorematch/linalg.hpp"

namespace scorematch {

/// Open support interval; endpoints themselves are outside.
struct Support {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();

    bool contains(double x) const { return x > lower && x < upper; }
};

/// Exponential-family score model s_theta(x) = theta . v(x) + c(x),
/// where ' denotes d/dx. Immutable after construction and safe to share
/// across threads.
class ScoreModel {
public:
    using VectorFn = std::function<void(double, std::span<double>)>;
    using ScalarFn = std::function<double(double)>;

    ScoreModel(std::string name, std::size_t dim, VectorFn v, VectorFn v_prime,
               ScalarFn c, ScalarFn c_prime, Support support);

    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const Support& support() const { return support_; }

    void v(double x, std::span<double> out) const { v_(x, out); }
    void v_prime(double x, std::span<double> out) const { v_prime_(x, out); }
    double c(double x) const { return c_(x); }
    double c_prime(double x) const { return c_prime_(x); }

    /// Throws SupportError unless x lies strictly inside the support.
    void require_in_support(double x) const;

private:
    std::string name_;
    std::size_t dim_;
    VectorFn v_;
    VectorFn v_prime_;
    ScalarFn c_;
    ScalarFn c_prime_;
    Support support_;
};

/// Gamma shape/rate pair; the estimation parametrization is
/// theta = (alpha - 1, beta).
struct GammaParams {
    double alpha = 1.0;
    double beta = 1.0;

    Vector to_theta() const { return Vector{alpha - 1.0, beta}; }
    static GammaParams from_theta(const Vector& theta);

    bool operator==(const GammaParams&) const = default;
};

/// Model defined through basis function derivatives: v_j = phi_j',
/// v_j' = phi_j'', c = 0. Second derivatives must be supplied analytically.
struct BasisModel {
    std::vector<std::function<double(double)>> basis_derivatives;
    std::vector<std::function<double(double)>> basis_second_derivatives;
    Support support;
};

/// s_theta(x) = theta/x - 1 on (0, inf): one-parameter gamma with unit rate,
/// shape theta + 1.
ScoreModel gamma_one_param_model();

/// s_theta(x) = theta_1/x - theta_2 on (0, inf): v = (1/x, -1), c = 0.
ScoreModel gamma_two_param_model();

/// Throws EmptyBasis when the derivative list is empty and
/// DimensionMismatch when the two lists differ in length.
ScoreModel model_from_basis(const BasisModel& basis);

/// theta . v(x) + c(x). Throws SupportError outside the support.
double score(const ScoreModel& model, const Vector& theta, double x);

/// theta . v'(x) + c'(x).
double score_x_derivative(const ScoreModel& model, const Vector& theta, double x);

} // namespace scorematch
