#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace symblob {

using Vector = std::vector<double>;

/// Dense real matrix, row-major. Small sizes only (phase-space dimension up to a few dozen).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    /// Row-wise literal: Matrix{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);
    static Matrix column(std::span<const double> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    Matrix transpose() const;
    Vector col(std::size_t j) const;
    void set_col(std::size_t j, std::span<const double> v);
    Vector diag() const;

    /// Copy of the block starting at (r0, c0) with the given extent.
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double s);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> v);

/// [[a, b], [c, d]] for square blocks of equal size.
Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
double trace(const Matrix& a);
/// LU with partial pivoting; 0 for singular input.
double determinant(const Matrix& a);
/// General inverse by Gauss-Jordan with partial pivoting.
Matrix inverse(const Matrix& a);
/// (a + aᵀ)/2.
Matrix symmetrize(const Matrix& a);
bool all_finite(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace symblob
