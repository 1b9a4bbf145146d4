#pragma once

#include <cstdint>
#include <optional>

#include "symblob/matrix.hpp"
#include "symblob/sympcore.hpp"

namespace symblob {

/// Positive numbers lambda_j with spec(J M) = {+-i lambda_j}, sorted decreasing.
struct SymplecticSpectrum {
    Vector values;

    std::size_t dof() const { return values.size(); }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
};

/// M = S^T D S with D = diag(Lambda, Lambda) and S symplectic.
struct WilliamsonForm {
    Matrix s;
    SymplecticSpectrum spectrum;

    Matrix d() const;
    Matrix reconstruct() const { return s.transpose() * d() * s; }
};

SymplecticSpectrum symplectic_spectrum(const Matrix& m);

/// Symplectic diagonalization of an SPD matrix.
///
/// With K = M^{-1/2} J M^{-1/2}, the symmetric matrix -K^2 has the eigenvalues
/// 1/lambda_j^2, each twice. In every invariant plane a unit u_j is chosen and
/// paired with v_j = -lambda_j K u_j; degenerate eigenspaces are split into such
/// pairs by Gram-Schmidt. With O = [u_1..u_n v_1..v_n] orthogonal,
/// S = D^{-1/2} O^T M^{1/2} satisfies M = S^T D S and S J S^T = J.
///
/// `frame_seed`, when set, mixes each degenerate eigenspace by a seeded rotation
/// before pairing. The result then differs by an element of U(n), which is how
/// the uniqueness-modulo-U(n) property is exercised.
WilliamsonForm williamson_diagonalize(const Matrix& m, std::optional<std::uint64_t> frame_seed = std::nullopt);

bool spectrum_is_symplectically_invariant(const Matrix& m, const Matrix& s);

/// a_j >= b_j for every j. Throws DimensionMismatch for different lengths.
bool spectra_dominates(const SymplecticSpectrum& a, const SymplecticSpectrum& b);

/// Linear symplectic embedding of {z^T M z <= 1} into {z^T M' z <= 1}.
///
/// Returns S = S2^{-1} S1 built from the two Williamson forms when
/// Spec(M) >= Spec(M') componentwise (with a small slack), std::nullopt otherwise.
/// The inclusion is verified on sampled boundary points before returning.
std::optional<Matrix> embed_ellipsoid(const Matrix& m, const Matrix& m_prime);

/// Largest value of (S z)^T M' (S z) over `samples` seeded boundary points z of
/// {z^T M z = 1}; the inclusion holds when this is <= 1.
double max_boundary_image(const Matrix& m, const Matrix& s, const Matrix& m_prime, std::size_t samples,
                          std::uint64_t seed);

/// S = U^T Delta U with Delta = diag(Lambda, Lambda^{-1}), 0 < lambda_1 <= ... <= lambda_n <= 1.
struct SymmetricSymplecticDiagonal {
    UnitaryBlock u;
    Vector lambda;

    Matrix delta() const;
    Matrix reconstruct() const;
};

SymmetricSymplecticDiagonal diagonalize_symmetric_symplectic(const Matrix& s);

}  // namespace symblob
