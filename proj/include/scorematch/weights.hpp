#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scorematch/linalg.hpp"
#include "scorematch/models.hpp"

namespace scorematch {

/// Nonnegative scalar weight function with its x-derivative.
struct WeightSpec {
    std::function<double(double)> w;
    std::function<double(double)> w_prime;
    std::string label;
};

/// Power weight w(x) = x^xi with w'(x) = xi x^(xi-1); xi = 0 yields the
/// constant weight 1 with derivative 0. Throws DomainError for xi < 0.
WeightSpec power_weight(double xi);

/// Outcome of the numeric boundary-vanishing check. Advisory: a failed
/// check is a report, never an error.
struct BoundaryReport {
    bool pass = false;
    struct Component {
        bool lower_ok = false;
        bool upper_ok = false;
        /// log10 of max tail value relative to the interior maximum
        /// (more negative is better; the pass threshold is -8).
        double lower_log10_ratio = 0.0;
        double upper_log10_ratio = 0.0;
    };
    std::vector<Component> components;
};

/// Geometric probe grid spanning scale * [1e-6, 1e6] inside the support
/// (clipped toward finite endpoints), suitable for check_boundary_vanishing.
Vector default_boundary_probes(const Support& support, double scale,
                               std::size_t points_per_decade = 4);

/// Checks the hypothesis that w(x) v_j(x) f(x|theta) vanishes at both
/// boundaries, with f reconstructed (up to a constant) by integrating the
/// score along the probe grid. Passes when every component decreases
/// monotonically below 1e-8 times its interior maximum on the final three
/// probes of each tail.
BoundaryReport check_boundary_vanishing(const ScoreModel& model,
                                        const WeightSpec& weight,
                                        const Vector& theta,
                                        const Vector& probes);

} // namespace scorematch
