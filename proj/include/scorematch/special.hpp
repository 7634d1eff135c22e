#pragma once

namespace scorematch {

/// Digamma function psi(z) for z > 0, absolute error <= 1e-10.
/// Upward recurrence to z >= 10 followed by the asymptotic series.
double digamma(double z);

/// Trigamma function psi'(z) for z > 0 (used by the Newton solvers).
double trigamma(double z);

} // namespace scorematch
