#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "scorematch/errors.hpp"

namespace scorematch {

/// Dense real vector. Entries are validated to be finite on construction.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : data_(n, 0.0) {}
    Vector(std::initializer_list<double> entries);
    explicit Vector(std::vector<double> entries);

    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    std::span<const double> view() const { return {data_.data(), data_.size()}; }
    std::span<double> view() { return {data_.data(), data_.size()}; }

    bool operator==(const Vector& other) const = default;

private:
    std::vector<double> data_;
};

/// Dense row-major matrix with finite entries.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Vector operator*(const Matrix& a, const Vector& x);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& a);

Matrix transpose(const Matrix& a);
double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);

/// Largest |a_ij| over all entries.
double max_abs(const Matrix& a);
double trace(const Matrix& a);

/// True when |a_ij - a_ji| <= tol * max(1, max_abs) for all i, j.
bool is_symmetric(const Matrix& a, double tol = 1e-10);

/// Attempts a Cholesky factorization; true iff all pivots stay positive.
bool is_positive_definite(const Matrix& a);

struct LinearSolution {
    Vector x;
    /// 1-norm condition estimate of the (possibly ridged) system actually solved.
    double condition;
};

/// Solves (A + ridge I) x = b by partially pivoted LU.
///
/// Rank deficiency is flagged when a pivot magnitude falls below
/// 1e-12 * max|entry|, in which case SingularSystem is thrown so the
/// caller can retry with ridge > 0.
LinearSolution solve_linear(const Matrix& a, const Vector& b, double ridge = 0.0);

/// Scale-invariant default ridge for regularized retries: 1e-8 * trace(A)/p.
double default_ridge(const Matrix& a);

/// Inverse of a symmetric positive definite matrix via Cholesky.
/// The result is symmetric by construction. Throws SingularSystem when the
/// factorization encounters a non-positive pivot.
Matrix invert_spd(const Matrix& a);

} // namespace scorematch
