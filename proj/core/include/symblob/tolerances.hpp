#pragma once

namespace symblob::tol {

// Kernel level (matcore).
inline constexpr double kSym = 1e-10;   // relative, against 1 + max|a_ij|
inline constexpr double kPd = 1e-12;    // relative to max|a_ij|
inline constexpr double kEig = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr int kGeneralEigDimCap = 20;

// Symplectic group layer.
inline constexpr double kSymp = 1e-9;   // absolute, max-norm residual
inline constexpr double kPlane = 1e-6;

// Williamson layer.
inline constexpr double kWil = 1e-8;
inline constexpr double kSpec = 1e-8;
inline constexpr double kCluster = 1e-8;
inline constexpr double kEmbedSlack = 1e-10;

// Blobs and states.
inline constexpr double kAdm = 1e-9;
inline constexpr double kBlob = 1e-8;
inline constexpr double kCap = 1e-8;
inline constexpr double kHerm = 1e-10;  // relative to max|Sigma|

}  // namespace symblob::tol
