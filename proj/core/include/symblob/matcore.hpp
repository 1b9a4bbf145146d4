#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "symblob/matrix.hpp"

namespace symblob {

/// Eigen-decomposition of a real symmetric matrix.
struct SymmetricEigen {
    Vector values;   ///< ascending
    Matrix vectors;  ///< orthogonal, column k belongs to values[k]
};

/// Throws NonFinite or NonSymmetric when `a` is not a finite symmetric square matrix.
void require_symmetric(const Matrix& a);
bool is_symmetric(const Matrix& a);

/// Throws NotPositiveDefinite unless every eigenvalue exceeds the pd threshold.
void require_spd(const Matrix& a);
bool is_spd(const Matrix& a);

/// Cyclic Jacobi with threshold sweeps. Eigenvector signs are fixed so the first
/// non-negligible component of each column is positive.
SymmetricEigen eigh(const Matrix& a);

Matrix sqrt_spd(const Matrix& a);
Matrix inv_spd(const Matrix& a);
/// A^{-1/2}, from the same decomposition as sqrt_spd.
Matrix inv_sqrt_spd(const Matrix& a);

/// All eigenvalues of a general real square matrix (balancing, Hessenberg
/// reduction, Francis double-shift QR), sorted by (real, imag).
std::vector<std::complex<double>> eigvals_general(const Matrix& a);

/// Eigenvalues of J*M for SPD M through the antisymmetric K = M^{1/2} J M^{1/2}:
/// the positive square roots of eig(-K^2), each listed once per +-i pair, descending.
Vector jm_moduli(const Matrix& m);

/// Eigenvalues (ascending) of the Hermitian matrix re + i*im, with re symmetric
/// and im antisymmetric, computed through the real embedding [[re, -im], [im, re]].
Vector hermitian_eigvals(const Matrix& re, const Matrix& im);

/// Q diag(w) Q^T with Haar-like Q and eigenvalues w log-uniform in [lo, hi].
Matrix random_spd(std::size_t dim, std::uint64_t seed, double lo = 0.25, double hi = 4.0);
/// Orthogonal matrix from Gram-Schmidt on a Gaussian draw.
Matrix random_orthogonal(std::size_t dim, std::uint64_t seed);

}  // namespace symblob
