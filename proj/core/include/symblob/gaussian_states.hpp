#pragma once

#include <cstdint>
#include <optional>

#include "symblob/blobs.hpp"
#include "symblob/matrix.hpp"
#include "symblob/sympcore.hpp"

namespace symblob {

/// Psi(x) = (pi hbar)^{-n/4} (det X)^{1/4} exp(-(1/2hbar) x^T (X + iY) x), shifted to `center`.
class GaussianPureState {
public:
    /// X symmetric positive definite, Y symmetric, both n x n.
    GaussianPureState(Matrix x, Matrix y, double hbar = 1.0, std::optional<PhasePoint> center = std::nullopt);

    const Matrix& x() const noexcept { return x_; }
    const Matrix& y() const noexcept { return y_; }
    double hbar() const noexcept { return hbar_; }
    const PhasePoint& center() const noexcept { return center_; }
    std::size_t dof() const noexcept { return x_.rows(); }

private:
    Matrix x_;
    Matrix y_;
    double hbar_;
    PhasePoint center_;
};

/// W(z) = normalization * exp(-(z - c)^T shape (z - c) / hbar), with
/// normalization = (pi hbar)^{-n} sqrt(det shape). Pure states have a symplectic
/// shape; mixed ones have symplectic spectrum <= 1 with some entry below 1.
class WignerGaussian {
public:
    WignerGaussian(Matrix shape, double hbar = 1.0, std::optional<PhasePoint> center = std::nullopt);

    const Matrix& shape() const noexcept { return shape_; }
    double hbar() const noexcept { return hbar_; }
    const PhasePoint& center() const noexcept { return center_; }
    double normalization() const noexcept { return normalization_; }
    std::size_t dof() const noexcept { return shape_.rows() / 2; }
    /// Symplectic spectrum of the shape is 1 everywhere.
    bool is_pure() const;
    /// The ellipsoid {(z - c)^T shape (z - c) <= hbar}.
    Ellipsoid ellipsoid() const { return Ellipsoid(shape_, hbar_, center_); }

private:
    Matrix shape_;
    double hbar_;
    PhasePoint center_;
    double normalization_;
};

/// Sigma = (hbar/2) F^{-1}.
struct CovarianceMatrix {
    Matrix sigma;
    double hbar;
};

/// G = [[X + Y X^{-1} Y, Y X^{-1}], [X^{-1} Y, X^{-1}]].
WignerGaussian wigner_matrix(const GaussianPureState& psi);

double wigner_eval(const WignerGaussian& w, const PhasePoint& z);

/// n = 1 only: (1/2 pi hbar) * integral of exp(-i p y / hbar) Psi(x + y/2) conj(Psi(x - y/2)) dy,
/// by adaptive Gauss-Kronrod on a growing window. Throws QuadratureFailure when the
/// window stops converging and InvalidArgument for n != 1.
double wigner_quadrature_oracle(const GaussianPureState& psi, const PhasePoint& z);

/// S = [[X^{-1/2}, 0], [-Y X^{-1/2}, X^{1/2}]].
QuantumBlob blob_from_gaussian(const GaussianPureState& psi);

/// X = A0^{-2}, Y = -A0^{-1} C0^T from the pre-Iwasawa factors of the blob's S.
GaussianPureState gaussian_from_blob(const QuantumBlob& q);

CovarianceMatrix covariance(const WignerGaussian& w);

/// Smallest eigenvalue of Sigma below hbar/2 (strictly, with the admissibility slack).
bool is_squeezed(const CovarianceMatrix& sigma);

/// Admissible and the largest plain eigenvalue of F exceeds 1.
bool is_squeezed_ellipsoid(const Ellipsoid& e);

/// shape -> S^{-T} shape S^{-1}, center -> S center.
WignerGaussian transform_wigner(const WignerGaussian& w, const Matrix& s);

WignerGaussian translate_wigner(const WignerGaussian& w, const PhasePoint& z0);

/// Convolution of W with the Wigner function of the blob's Gaussian:
/// shape (H^{-1} + G^{-1})^{-1}, G = (S S^T)^{-1}; centers add.
WignerGaussian smooth(const WignerGaussian& w, const QuantumBlob& q);

/// The blob S^{-1}(ball) for the Williamson normalizer S of h (h = S^T D S).
QuantumBlob williamson_frame_blob(const Matrix& h, double hbar = 1.0);

/// Wigner function of the Gaussian attached to the companion blob of E.
WignerGaussian companion_gaussian(const Ellipsoid& e, std::optional<std::uint64_t> frame_seed = std::nullopt);

/// X random SPD (eigenvalues log-uniform in [1/4, 4]), Y symmetric with entries in [-1, 1].
GaussianPureState random_pure_state(std::size_t n, std::uint64_t seed, double hbar = 1.0);

/// Admissibility of |x|^2/alpha^2 + |p|^2/beta^2 <= hbar in R^{2n}.
bool debruijn_admissible(double alpha, double beta, std::size_t n, double hbar = 1.0);

}  // namespace symblob
