#pragma once

#include <cstdint>

#include "symblob/matrix.hpp"

// Coordinates are ordered (x_1..x_n, p_1..p_n) everywhere in this library.

namespace symblob {

/// A point of R^{2n}.
struct PhasePoint {
    Vector coords;

    static PhasePoint zero(std::size_t n) { return PhasePoint{Vector(2 * n, 0.0)}; }
    std::size_t dof() const { return coords.size() / 2; }
    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

PhasePoint operator+(const PhasePoint& a, const PhasePoint& b);
PhasePoint operator-(const PhasePoint& a, const PhasePoint& b);

/// [[0, I], [-I, 0]], size 2n.
Matrix standard_J(std::size_t n);

/// omega(a, b) = b^T J a.
double omega(std::span<const double> a, std::span<const double> b);

struct SymplecticCheck {
    bool symplectic = false;
    /// max(|S^T J S - J|_max, |S J S^T - J|_max)
    double residual = 0.0;
};

/// Both defining identities are evaluated; throws OddDimension for odd sizes.
SymplecticCheck is_symplectic(const Matrix& s);
/// Throws NotSymplectic (or OddDimension) when the check fails.
void require_symplectic(const Matrix& s);

/// S^{-1} = -J S^T J for symplectic S.
Matrix symplectic_inverse(const Matrix& s);

/// The real form [[A, -B], [B, A]] of the unitary A + iB.
struct UnitaryBlock {
    Matrix a;
    Matrix b;

    Matrix embed() const;
    /// Largest violation of A B^T = B A^T and A A^T + B B^T = I.
    double residual() const;
};

/// T(shear) * R(unitary) * Delta(rescaling) with shear entries in [-1, 1] and
/// rescalings in [1/2, 2]. Deterministic in the seed.
Matrix random_symplectic(std::size_t n, std::uint64_t seed);
/// Element of U(n) = Sp(n) ∩ O(2n), from Gram-Schmidt on a complex Gaussian draw.
UnitaryBlock random_unitary_block(std::size_t n, std::uint64_t seed);

/// S = [[A0, 0], [C0, A0^{-1}]] * [[X0, -Y0], [Y0, X0]].
struct PreIwasawaFactors {
    Matrix a0;
    Matrix c0;
    Matrix x0;
    Matrix y0;

    Matrix lower() const;
    Matrix rotation() const;
    Matrix product() const { return lower() * rotation(); }
    /// |A0 C0 - (A0 C0)^T|_max
    double constraint_residual() const;
};

PreIwasawaFactors pre_iwasawa(const Matrix& s);

/// Two-dimensional subspace given by an orthonormal basis (u, v).
struct SymplecticPlane {
    Vector u;
    Vector v;

    std::size_t dof() const { return u.size() / 2; }
    /// omega(u, v) = v^T J u.
    double omega() const;
    /// 2n x 2 matrix [u v].
    Matrix basis() const;
};

/// Orthonormalizes (u, v) by Gram-Schmidt; throws DegeneratePlane when the pair is
/// dependent or the restricted form is below the plane tolerance.
SymplecticPlane make_plane(std::span<const double> u, std::span<const double> v);

/// Plane spanned by x_j and p_j, 1 <= j <= n.
SymplecticPlane symplectic_plane_coordinate(std::size_t n, std::size_t j);

/// Uniformly oriented orthonormal pair with |omega(u, v)| >= plane tolerance.
SymplecticPlane random_symplectic_plane(std::size_t n, std::uint64_t seed);

/// Random plane of the form span{u, J u} (invariant under J, |omega| = 1).
SymplecticPlane random_complex_line(std::size_t n, std::uint64_t seed);

}  // namespace symblob
