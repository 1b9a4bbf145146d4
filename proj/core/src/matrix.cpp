#include "symblob/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

#include "symblob/errors.hpp"

namespace symblob {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "matrix data length does not equal rows*cols");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::column(std::span<const double> v) {
    return Matrix(v.size(), 1, std::vector<double>(v.begin(), v.end()));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, std::span<const double> v) {
    assert(v.size() == rows_);
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vector Matrix::diag() const {
    Vector d(std::min(rows_, cols_));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
    return d;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    assert(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix sum of different shapes");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix difference of different shapes");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= -1.0; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product with incompatible shapes");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vector operator*(const Matrix& a, std::span<const double> v) {
    if (a.cols() != v.size()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product with incompatible shapes");
    }
    Vector r(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Matrix block2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    const std::size_t n = a.rows();
    if (!a.is_square() || b.rows() != n || b.cols() != n || c.rows() != n || c.cols() != n ||
        d.rows() != n || d.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "block2x2 needs four n x n blocks");
    }
    Matrix m(2 * n, 2 * n);
    m.set_block(0, 0, a);
    m.set_block(0, n, b);
    m.set_block(n, 0, c);
    m.set_block(n, n, d);
    return m;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double x : a.data()) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "comparing matrices of different shapes");
    }
    double m = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

double trace(const Matrix& a) {
    double t = 0.0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
    return t;
}

double determinant(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    Matrix lu = a;
    const std::size_t n = a.rows();
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
        if (lu(p, k) == 0.0) return 0.0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            det = -det;
        }
        det *= lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) / lu(k, k);
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix w = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(w(i, k)) > std::abs(w(p, k))) p = i;
        if (w(p, k) == 0.0) throw Error(ErrorKind::InvalidArgument, "singular matrix");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(k, j), w(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        }
        const double piv = w(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            w(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const double f = w(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

Matrix symmetrize(const Matrix& a) {
    Matrix s = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
    return s;
}

bool all_finite(const Matrix& a) {
    return std::all_of(a.data().begin(), a.data().end(), [](double x) { return std::isfinite(x); });
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace symblob
