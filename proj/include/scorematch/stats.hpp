#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace scorematch {

/// Neumaier compensated accumulator; add() order defines the result exactly.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct SummaryStats {
    double mean = 0.0;
    double bias = 0.0;
    double variance = 0.0; // population form: mean squared deviation from the sample mean
    double mse = 0.0;
};

/// Mean/bias/variance/MSE of samples against a known true value.
/// Satisfies mse == variance + bias^2 to floating-point accuracy.
/// Throws EmptyInput on an empty span.
SummaryStats summary_stats(std::span<const double> samples, double true_value);

} // namespace scorematch
