#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "symblob/matrix.hpp"
#include "symblob/sympcore.hpp"
#include "symblob/williamson.hpp"

namespace symblob {

/// The set {z : (z - center)^T F (z - center) <= hbar}.
class Ellipsoid {
public:
    /// Validates F (finite, symmetric, positive definite, even size), hbar > 0 and
    /// the center dimension. An empty center means the origin.
    Ellipsoid(Matrix f, double hbar = 1.0, std::optional<PhasePoint> center = std::nullopt);

    const Matrix& f() const noexcept { return f_; }
    double hbar() const noexcept { return hbar_; }
    const PhasePoint& center() const noexcept { return center_; }
    std::size_t dof() const noexcept { return f_.rows() / 2; }

    bool contains(const PhasePoint& z, double slack = 0.0) const;

private:
    Matrix f_;
    double hbar_;
    PhasePoint center_;
};

/// S(B^{2n}(sqrt(hbar))) translated to `center`, for symplectic S.
class QuantumBlob {
public:
    QuantumBlob(Matrix s, double hbar = 1.0, std::optional<PhasePoint> center = std::nullopt);

    const Matrix& s() const noexcept { return s_; }
    double hbar() const noexcept { return hbar_; }
    const PhasePoint& center() const noexcept { return center_; }
    std::size_t dof() const noexcept { return s_.rows() / 2; }

private:
    Matrix s_;
    double hbar_;
    PhasePoint center_;
};

/// F = (S S^T)^{-1}, same center and hbar.
Ellipsoid blob_to_ellipsoid(const QuantumBlob& q);

/// Spectral recognition: every symplectic eigenvalue of F equals 1 within the blob tolerance.
bool is_quantum_blob(const Ellipsoid& e);

/// Inverse of blob_to_ellipsoid for ellipsoids that are blobs (S from the Williamson
/// normalizer). Throws SectionNotBlob otherwise.
QuantumBlob blob_from_ellipsoid(const Ellipsoid& e);

/// Euclidean area of the section of E by the plane through its center,
/// pi * hbar / sqrt(det(B^T F B)) for the orthonormal basis B of the plane.
double section_area(const Ellipsoid& e, const SymplecticPlane& plane);

/// Euclidean area of the orthogonal shadow of E on a plane parallel to `plane`,
/// pi * hbar * sqrt(det(B^T F^{-1} B)).
double projection_area(const Ellipsoid& e, const SymplecticPlane& plane);

/// Gromov width of an ellipsoid: pi * hbar / lambda_1, lambda_1 the largest
/// symplectic eigenvalue of F. Translation invariant.
double gromov_width(const Ellipsoid& e);

/// gromov_width(E) >= pi*hbar, cross-checked against max |eig(J F)| <= 1.
bool is_admissible(const Ellipsoid& e);

/// The four uncertainty conditions for Sigma = (hbar/2) F^{-1}:
/// (A) Sigma + (i hbar/2) J >= 0, (B) F^{-1} + i J >= 0,
/// (C) |eig(J Sigma)| >= hbar/2, (D) |eig(J F)| <= 1.
struct AdmissibilityConditions {
    bool a = false;
    bool b = false;
    bool c = false;
    bool d = false;
    double min_eig_a = 0.0;
    double min_eig_b = 0.0;
    double min_modulus_c = 0.0;
    double max_modulus_d = 0.0;
};

/// Evaluates (A)-(D) independently. Throws InternalInconsistency if they disagree.
AdmissibilityConditions admissibility_conditions(const Ellipsoid& e);

/// The canonical blob inside an ellipsoid of capacity exactly pi*hbar: S^{-1} applied to
/// the ball, S the Williamson normalizer of F. Throws CapacityMismatch otherwise.
/// Two differently mixed normalizations are compared before returning.
QuantumBlob companion_blob(const Ellipsoid& e, std::optional<std::uint64_t> frame_seed = std::nullopt);

/// Exact intersection of E with the coordinate symplectic subspace spanned by
/// {x_j, p_j : j in indices} through the center (1-based indices, any order).
/// The result lives in R^{2m}, coordinates (x_j..., p_j...) in ascending j.
Ellipsoid section_ellipsoid(const Ellipsoid& e, const std::vector<std::size_t>& indices);

/// Section of a blob by a coordinate symplectic subspace, as a blob of that subspace.
/// Throws EmptyIndexSet, IndexOutOfRange, or SectionNotBlob when the section is not a
/// blob (the case for blobs that couple the kept and dropped degrees of freedom).
QuantumBlob coordinate_subspace_section(const QuantumBlob& q, const std::vector<std::size_t>& indices);

/// (pi hbar)^n / n!.
double blob_volume(const QuantumBlob& q);

/// n (n + 3).
std::size_t quant_manifold_dim(std::size_t n);

struct BoundarySample {
    double theta;
    double u;
    double v;
};

/// Boundary of E ∩ plane in the plane's (u, v) coordinates relative to the center,
/// at theta_k = 2 pi k / samples. Throws InvalidArgument for samples < 3.
std::vector<BoundarySample> section_boundary(const Ellipsoid& e, const SymplecticPlane& plane, std::size_t samples);

}  // namespace symblob
