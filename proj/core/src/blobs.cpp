#include "symblob/blobs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "symblob/errors.hpp"
#include "symblob/matcore.hpp"
#include "symblob/tolerances.hpp"

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
    for (double x : center->coords)
        if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "center has NaN or Inf entries");
    return *std::move(center);
}

void require_plane_in(const Ellipsoid& e, const SymplecticPlane& plane) {
    if (plane.u.size() != e.f().rows() || plane.v.size() != e.f().rows()) {
        throw Error(ErrorKind::DimensionMismatch, "plane and ellipsoid live in different dimensions");
    }
}

// 2n x 2 orthonormal basis of the plane.
Matrix orthonormal_basis(const SymplecticPlane& plane) {
    Vector u = plane.u;
    Vector v = plane.v;
    const double nu = norm2(u);
    if (nu == 0.0) throw Error(ErrorKind::DegeneratePlane, "zero basis vector");
    for (double& x : u) x /= nu;
    for (int pass = 0; pass < 2; ++pass) {
        const double d = dot(u, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * u[i];
    }
    const double nv = norm2(v);
    if (nv <= 1e-12) throw Error(ErrorKind::DegeneratePlane, "basis vectors are linearly dependent");
    for (double& x : v) x /= nv;
    Matrix b(u.size(), 2);
    b.set_col(0, u);
    b.set_col(1, v);
    return b;
}

double largest_symplectic_eigenvalue(const Ellipsoid& e) { return symplectic_spectrum(e.f()).largest(); }

// max |eig(J F)| through the general eigensolver when the size allows, else through
// the symmetric route. Used as the second, independent admissibility route.
double max_modulus_jf(const Matrix& f) {
    const std::size_t n = f.rows() / 2;
    if (f.rows() <= static_cast<std::size_t>(tol::kGeneralEigDimCap)) {
        double worst = 0.0;
        for (const auto& z : eigvals_general(standard_J(n) * f)) worst = std::max(worst, std::abs(z));
        return worst;
    }
    return jm_moduli(f).front();
}

double min_modulus_j_sigma(const Matrix& sigma) {
    const std::size_t n = sigma.rows() / 2;
    if (sigma.rows() <= static_cast<std::size_t>(tol::kGeneralEigDimCap)) {
        double best = INFINITY;
        for (const auto& z : eigvals_general(standard_J(n) * sigma)) best = std::min(best, std::abs(z));
        return best;
    }
    return jm_moduli(sigma).back();
}

std::vector<std::size_t> checked_indices(const std::vector<std::size_t>& indices, std::size_t n) {
    if (indices.empty()) throw Error(ErrorKind::EmptyIndexSet, "index set is empty");
    std::set<std::size_t> sorted;
    for (std::size_t j : indices) {
        if (j < 1 || j > n) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "index " + std::to_string(j) + " outside 1.." + std::to_string(n));
        }
        sorted.insert(j);
    }
    return {sorted.begin(), sorted.end()};
}

}  // namespace

Ellipsoid::Ellipsoid(Matrix f, double hbar, std::optional<PhasePoint> center) : f_(std::move(f)), hbar_(hbar) {
    require_hbar(hbar_);
    require_spd(f_);
    if (f_.rows() % 2 != 0) throw Error(ErrorKind::OddDimension, "phase-space matrices have even dimension");
    f_ = symmetrize(f_);
    center_ = resolve_center(std::move(center), f_.rows());
}

bool Ellipsoid::contains(const PhasePoint& z, double slack) const {
    const PhasePoint d = z - center_;
    return dot(d.coords, f_ * d.coords) <= hbar_ * (1.0 + slack);
}

QuantumBlob::QuantumBlob(Matrix s, double hbar, std::optional<PhasePoint> center) : s_(std::move(s)), hbar_(hbar) {
    require_hbar(hbar_);
    require_symplectic(s_);
    center_ = resolve_center(std::move(center), s_.rows());
}

Ellipsoid blob_to_ellipsoid(const QuantumBlob& q) {
    // (S S^T)^{-1} = S^{-T} S^{-1}
    const Matrix inv = symplectic_inverse(q.s());
    return Ellipsoid(symmetrize(inv.transpose() * inv), q.hbar(), q.center());
}

bool is_quantum_blob(const Ellipsoid& e) {
    const SymplecticSpectrum spec = symplectic_spectrum(e.f());
    return std::all_of(spec.values.begin(), spec.values.end(),
                       [](double l) { return std::abs(l - 1.0) <= tol::kBlob; });
}

QuantumBlob blob_from_ellipsoid(const Ellipsoid& e) {
    if (!is_quantum_blob(e)) {
        throw Error(ErrorKind::SectionNotBlob, "ellipsoid is not a quantum blob: symplectic spectrum differs from 1");
    }
    const WilliamsonForm w = williamson_diagonalize(e.f());
    return QuantumBlob(symplectic_inverse(w.s), e.hbar(), e.center());
}

double section_area(const Ellipsoid& e, const SymplecticPlane& plane) {
    require_plane_in(e, plane);
    const Matrix b = orthonormal_basis(plane);
    return kPi * e.hbar() / std::sqrt(determinant(b.transpose() * e.f() * b));
}

double projection_area(const Ellipsoid& e, const SymplecticPlane& plane) {
    require_plane_in(e, plane);
    const Matrix b = orthonormal_basis(plane);
    return kPi * e.hbar() * std::sqrt(determinant(b.transpose() * inv_spd(e.f()) * b));
}

double gromov_width(const Ellipsoid& e) { return kPi * e.hbar() / largest_symplectic_eigenvalue(e); }

bool is_admissible(const Ellipsoid& e) {
    const bool by_width = gromov_width(e) >= kPi * e.hbar() * (1.0 - tol::kAdm);
    const bool by_modulus = max_modulus_jf(e.f()) <= 1.0 + tol::kAdm;
    if (by_width != by_modulus) {
        throw Error(ErrorKind::InternalInconsistency, "Gromov width and |eig(JF)| disagree on admissibility");
    }
    return by_width;
}

AdmissibilityConditions admissibility_conditions(const Ellipsoid& e) {
    const std::size_t n = e.dof();
    const double h = e.hbar();
    const Matrix j = standard_J(n);
    const Matrix f_inv = inv_spd(e.f());
    const Matrix sigma = 0.5 * h * f_inv;

    AdmissibilityConditions out;
    out.min_eig_a = hermitian_eigvals(sigma, 0.5 * h * j).front();
    out.a = out.min_eig_a >= -tol::kHerm * max_abs(sigma);
    out.min_eig_b = hermitian_eigvals(f_inv, j).front();
    out.b = out.min_eig_b >= -tol::kHerm * max_abs(f_inv);
    out.min_modulus_c = min_modulus_j_sigma(sigma);
    out.c = out.min_modulus_c >= 0.5 * h * (1.0 - tol::kAdm);
    out.max_modulus_d = jm_moduli(e.f()).front();
    out.d = out.max_modulus_d <= 1.0 + tol::kAdm;

    if (!(out.a == out.b && out.b == out.c && out.c == out.d)) {
        throw Error(ErrorKind::InternalInconsistency, "uncertainty conditions (A)-(D) disagree");
    }
    return out;
}

QuantumBlob companion_blob(const Ellipsoid& e, std::optional<std::uint64_t> frame_seed) {
    const double width = gromov_width(e);
    const double target = kPi * e.hbar();
    if (!is_admissible(e) || std::abs(width - target) > tol::kCap * target) {
        throw Error(ErrorKind::CapacityMismatch, "companion blob needs Gromov width pi*hbar, got " +
                                                     std::to_string(width) + " vs " + std::to_string(target));
    }
    const WilliamsonForm w = williamson_diagonalize(e.f(), frame_seed);
    const Matrix s = symplectic_inverse(w.s);

    // A second normalization, mixed differently, must induce the same ellipsoid.
    const std::uint64_t other_seed = frame_seed ? ~*frame_seed : 0x243f6a8885a308d3ULL;
    const Matrix w_other = williamson_diagonalize(e.f(), other_seed).s;
    const Matrix f_q = w.s.transpose() * w.s;
    const Matrix f_other = w_other.transpose() * w_other;
    if (max_abs_diff(f_q, f_other) > tol::kWil * (1.0 + max_abs(f_q))) {
        throw Error(ErrorKind::InternalInconsistency, "companion blob depends on the Williamson frame");
    }
    return QuantumBlob(s, e.hbar(), e.center());
}

Ellipsoid section_ellipsoid(const Ellipsoid& e, const std::vector<std::size_t>& indices) {
    const std::size_t n = e.dof();
    const std::vector<std::size_t> idx = checked_indices(indices, n);
    const std::size_t m = idx.size();
    std::vector<std::size_t> rows;
    for (std::size_t j : idx) rows.push_back(j - 1);
    for (std::size_t j : idx) rows.push_back(n + j - 1);

    Matrix f(2 * m, 2 * m);
    Vector c(2 * m);
    for (std::size_t a = 0; a < 2 * m; ++a) {
        c[a] = e.center().coords[rows[a]];
        for (std::size_t b = 0; b < 2 * m; ++b) f(a, b) = e.f()(rows[a], rows[b]);
    }
    return Ellipsoid(std::move(f), e.hbar(), PhasePoint{std::move(c)});
}

QuantumBlob coordinate_subspace_section(const QuantumBlob& q, const std::vector<std::size_t>& indices) {
    const Ellipsoid section = section_ellipsoid(blob_to_ellipsoid(q), indices);
    const SymplecticSpectrum spec = symplectic_spectrum(section.f());
    for (double l : spec.values) {
        if (std::abs(l - 1.0) > tol::kBlob) {
            throw Error(ErrorKind::SectionNotBlob, "section has symplectic eigenvalue " + std::to_string(l) +
                                                       " (a blob needs all equal to 1)");
        }
    }
    return blob_from_ellipsoid(section);
}

double blob_volume(const QuantumBlob& q) {
    const std::size_t n = q.dof();
    return std::pow(kPi * q.hbar(), static_cast<double>(n)) / std::tgamma(static_cast<double>(n) + 1.0);
}

std::size_t quant_manifold_dim(std::size_t n) { return n * (n + 3); }

std::vector<BoundarySample> section_boundary(const Ellipsoid& e, const SymplecticPlane& plane, std::size_t samples) {
    if (samples < 3) throw Error(ErrorKind::InvalidArgument, "at least 3 boundary samples are needed");
    require_plane_in(e, plane);
    const Matrix b = orthonormal_basis(plane);
    const Matrix g = b.transpose() * e.f() * b;
    std::vector<BoundarySample> out;
    out.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(samples);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const double q = g(0, 0) * c * c + 2.0 * g(0, 1) * c * s + g(1, 1) * s * s;
        const double r = std::sqrt(e.hbar() / q);
        out.push_back({theta, r * c, r * s});
    }
    return out;
}

}  // namespace symblob
