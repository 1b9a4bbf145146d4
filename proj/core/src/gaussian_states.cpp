#include "symblob/gaussian_states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "symblob/errors.hpp"
#include "symblob/matcore.hpp"
#include "symblob/rng.hpp"
#include "symblob/tolerances.hpp"
#include "symblob/williamson.hpp"

namespace symblob {

namespace {

constexpr double kPi = std::numbers::pi;

void require_hbar(double hbar) {
    if (!std::isfinite(hbar) || hbar <= 0.0) {
        throw Error(ErrorKind::InvalidArgument, "hbar must be a positive finite number");
    }
}

PhasePoint resolve_center(std::optional<PhasePoint> center, std::size_t dim) {
    if (!center || center->coords.empty()) return PhasePoint{Vector(dim, 0.0)};
    if (center->coords.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch, "center has dimension " + std::to_string(center->coords.size()) +
                                                      ", expected " + std::to_string(dim));
    }
    return *std::move(center);
}

}  // namespace

GaussianPureState::GaussianPureState(Matrix x, Matrix y, double hbar, std::optional<PhasePoint> center)
    : x_(std::move(x)), y_(std::move(y)), hbar_(hbar) {
    require_hbar(hbar_);
    require_spd(x_);
    require_symmetric(y_);
    if (y_.rows() != x_.rows()) throw Error(ErrorKind::DimensionMismatch, "X and Y must have the same size");
    x_ = symmetrize(x_);
    y_ = symmetrize(y_);
    center_ = resolve_center(std::move(center), 2 * x_.rows());
}

WignerGaussian::WignerGaussian(Matrix shape, double hbar, std::optional<PhasePoint> center)
    : shape_(std::move(shape)), hbar_(hbar) {
    require_hbar(hbar_);
    require_spd(shape_);
    if (shape_.rows() % 2 != 0) throw Error(ErrorKind::OddDimension, "phase-space matrices have even dimension");
    shape_ = symmetrize(shape_);
    center_ = resolve_center(std::move(center), shape_.rows());
    const double n = static_cast<double>(dof());
    normalization_ = std::pow(kPi * hbar_, -n) * std::sqrt(determinant(shape_));
}

bool WignerGaussian::is_pure() const {
    const SymplecticSpectrum spec = symplectic_spectrum(shape_);
    return std::all_of(spec.values.begin(), spec.values.end(),
                       [](double l) { return std::abs(l - 1.0) <= tol::kBlob; });
}

WignerGaussian wigner_matrix(const GaussianPureState& psi) {
    const Matrix x_inv = inv_spd(psi.x());
    const Matrix& y = psi.y();
    const Matrix g = block2x2(psi.x() + y * x_inv * y, y * x_inv, x_inv * y, x_inv);
    return WignerGaussian(symmetrize(g), psi.hbar(), psi.center());
}

double wigner_eval(const WignerGaussian& w, const PhasePoint& z) {
    const PhasePoint d = z - w.center();
    return w.normalization() * std::exp(-dot(d.coords, w.shape() * d.coords) / w.hbar());
}

double wigner_quadrature_oracle(const GaussianPureState& psi, const PhasePoint& z) {
    using cd = std::complex<double>;
    if (psi.dof() != 1) throw Error(ErrorKind::InvalidArgument, "the quadrature oracle is implemented for n = 1");
    if (z.coords.size() != 2) throw Error(ErrorKind::DimensionMismatch, "evaluation point must have 2 coordinates");

    const double h = psi.hbar();
    const double xx = psi.x()(0, 0);
    const double yy = psi.y()(0, 0);
    const double x0 = psi.center().coords[0];
    const double p0 = psi.center().coords[1];
    const double amp = std::pow(xx / (kPi * h), 0.25);
    // Translated state: Psi(x) = e^{i p0 (x - x0/2)/hbar} Psi_0(x - x0); the constant phase cancels.
    auto wave = [&](double x) {
        const double s = x - x0;
        return amp * std::exp(cd(-xx * s * s, -yy * s * s) / (2.0 * h)) * std::exp(cd(0.0, p0 * x / h));
    };
    const double x = z.coords[0];
    const double p = z.coords[1];
    auto integrand = [&](double y) {
        const cd v = std::exp(cd(0.0, -p * y / h)) * wave(x + 0.5 * y) * std::conj(wave(x - 0.5 * y));
        return v.real();
    };

    using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    double half_width = 8.0 * std::max(std::sqrt(h / xx), std::sqrt(h));
    double previous = Quad::integrate(integrand, -half_width, half_width, 15, 1e-13);
    constexpr int kMaxDoublings = 12;
    for (int k = 0; k < kMaxDoublings; ++k) {
        half_width *= 2.0;
        const double current = Quad::integrate(integrand, -half_width, half_width, 15, 1e-13);
        if (!std::isfinite(current)) break;
        if (std::abs(current - previous) < 1e-8 * std::max(1.0, std::abs(current))) {
            return current / (2.0 * kPi * h);
        }
        previous = current;
    }
    throw Error(ErrorKind::QuadratureFailure, "Wigner integral did not settle as the window grew");
}

QuantumBlob blob_from_gaussian(const GaussianPureState& psi) {
    const std::size_t n = psi.dof();
    const Matrix x_inv_root = inv_sqrt_spd(psi.x());
    const Matrix s = block2x2(x_inv_root, Matrix(n, n), -(psi.y() * x_inv_root), sqrt_spd(psi.x()));
    return QuantumBlob(s, psi.hbar(), psi.center());
}

GaussianPureState gaussian_from_blob(const QuantumBlob& q) {
    const PreIwasawaFactors f = pre_iwasawa(q.s());
    const Matrix a0_inv = inv_spd(f.a0);
    const Matrix x = a0_inv * a0_inv;
    const Matrix y = -(a0_inv * f.c0.transpose());
    if (max_abs_diff(y, y.transpose()) > tol::kSym * (1.0 + max_abs(y))) {
        throw Error(ErrorKind::InternalInconsistency, "recovered Y is not symmetric");
    }
    return GaussianPureState(symmetrize(x), symmetrize(y), q.hbar(), q.center());
}

CovarianceMatrix covariance(const WignerGaussian& w) {
    return CovarianceMatrix{symmetrize(0.5 * w.hbar() * inv_spd(w.shape())), w.hbar()};
}

bool is_squeezed(const CovarianceMatrix& sigma) {
    return eigh(sigma.sigma).values.front() < 0.5 * sigma.hbar * (1.0 - tol::kAdm);
}

bool is_squeezed_ellipsoid(const Ellipsoid& e) {
    return is_admissible(e) && eigh(e.f()).values.back() > 1.0 + tol::kAdm;
}

WignerGaussian transform_wigner(const WignerGaussian& w, const Matrix& s) {
    if (s.rows() != w.shape().rows() || !s.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "S and the Wigner shape must have the same size");
    }
    require_symplectic(s);
    const Matrix s_inv = symplectic_inverse(s);
    return WignerGaussian(symmetrize(s_inv.transpose() * w.shape() * s_inv), w.hbar(),
                          PhasePoint{s * w.center().coords});
}

WignerGaussian translate_wigner(const WignerGaussian& w, const PhasePoint& z0) {
    return WignerGaussian(w.shape(), w.hbar(), w.center() + z0);
}

WignerGaussian smooth(const WignerGaussian& w, const QuantumBlob& q) {
    if (q.s().rows() != w.shape().rows()) {
        throw Error(ErrorKind::DimensionMismatch, "state and blob live in different dimensions");
    }
    // G^{-1} = S S^T.
    const Matrix g_inv = q.s() * q.s().transpose();
    const Matrix f = inv_spd(symmetrize(inv_spd(w.shape()) + g_inv));
    return WignerGaussian(symmetrize(f), w.hbar(), w.center() + q.center());
}

QuantumBlob williamson_frame_blob(const Matrix& h, double hbar) {
    return QuantumBlob(symplectic_inverse(williamson_diagonalize(h).s), hbar);
}

WignerGaussian companion_gaussian(const Ellipsoid& e, std::optional<std::uint64_t> frame_seed) {
    return wigner_matrix(gaussian_from_blob(companion_blob(e, frame_seed)));
}

GaussianPureState random_pure_state(std::size_t n, std::uint64_t seed, double hbar) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "degrees of freedom must be positive");
    Rng rng(seed);
    const Matrix x = random_spd(n, rng.next_u64());
    Matrix y(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) y(i, j) = y(j, i) = rng.uniform(-1.0, 1.0);
    return GaussianPureState(x, y, hbar);
}

bool debruijn_admissible(double alpha, double beta, std::size_t n, double hbar) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw Error(ErrorKind::InvalidArgument, "alpha and beta must be positive");
    }
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "degrees of freedom must be positive");
    Vector d(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = 1.0 / (alpha * alpha);
        d[n + j] = 1.0 / (beta * beta);
    }
    return is_admissible(Ellipsoid(Matrix::diagonal(d), hbar));
}

}  // namespace symblob
