#include "symblob/williamson.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "symblob/errors.hpp"
#include "symblob/matcore.hpp"
#include "symblob/rng.hpp"
#include "symblob/tolerances.hpp"

namespace symblob {

namespace {

void require_even_spd(const Matrix& m) {
    require_spd(m);
    if (m.rows() % 2 != 0) throw Error(ErrorKind::OddDimension, "phase-space matrices have even dimension");
}

// Contiguous runs of `values` (sorted) whose neighbours differ by at most `gap`.
std::vector<std::pair<std::size_t, std::size_t>> clusters(const Vector& values, double gap) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || std::abs(values[i] - values[i - 1]) > gap) {
            out.emplace_back(start, i);
            start = i;
        }
    }
    return out;
}

void remove_components(Vector& w, const std::vector<Vector>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vector& b : basis) {
            const double d = dot(w, b);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] -= d * b[i];
        }
    }
}

void normalize(Vector& w) {
    const double nw = norm2(w);
    for (double& x : w) x /= nw;
}

void fix_sign(Vector& w) {
    double scale = 0.0;
    for (double x : w) scale = std::max(scale, std::abs(x));
    for (double x : w) {
        if (std::abs(x) > 1e-8 * scale) {
            if (x < 0.0)
                for (double& y : w) y = -y;
            return;
        }
    }
}

// Mix the columns [begin, end) of `vectors` by a seeded orthogonal matrix.
std::vector<Vector> cluster_basis(const Matrix& vectors, std::size_t begin, std::size_t end,
                                  std::optional<std::uint64_t> frame_seed) {
    std::vector<Vector> basis;
    for (std::size_t k = begin; k < end; ++k) basis.push_back(vectors.col(k));
    if (frame_seed && basis.size() > 1) {
        const Matrix q = random_orthogonal(basis.size(), *frame_seed + 7919 * begin);
        std::vector<Vector> mixed(basis.size(), Vector(vectors.rows(), 0.0));
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b)
                for (std::size_t i = 0; i < vectors.rows(); ++i) mixed[a][i] += q(b, a) * basis[b][i];
        basis = std::move(mixed);
    }
    return basis;
}

// Column of `candidates` with the largest component outside `chosen`.
Vector best_candidate(const std::vector<Vector>& candidates, const std::vector<Vector>& chosen) {
    Vector best;
    double best_norm = -1.0;
    for (const Vector& c : candidates) {
        Vector w = c;
        remove_components(w, chosen);
        const double nw = norm2(w);
        if (nw > best_norm + 1e-12) {
            best_norm = nw;
            best = std::move(w);
        }
    }
    if (best_norm < 1e-6) {
        throw Error(ErrorKind::DegenerateSpectrumFailure, "degenerate eigenspace could not be paired");
    }
    normalize(best);
    return best;
}

}  // namespace

Matrix WilliamsonForm::d() const {
    const std::size_t n = spectrum.dof();
    Vector diag(2 * n);
    for (std::size_t j = 0; j < n; ++j) diag[j] = diag[n + j] = spectrum.values[j];
    return Matrix::diagonal(diag);
}

SymplecticSpectrum symplectic_spectrum(const Matrix& m) {
    require_even_spd(m);
    return SymplecticSpectrum{jm_moduli(m)};
}

WilliamsonForm williamson_diagonalize(const Matrix& m_in, std::optional<std::uint64_t> frame_seed) {
    require_even_spd(m_in);
    const Matrix m = symmetrize(m_in);
    const std::size_t n = m.rows() / 2;
    const Matrix root = sqrt_spd(m);
    const Matrix inv_root = inv_sqrt_spd(m);
    const Matrix k = inv_root * standard_J(n) * inv_root;
    const SymmetricEigen e = eigh(symmetrize(k.transpose() * k));

    // Ascending 1/lambda^2 means descending lambda.
    Vector lambdas(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) lambdas[i] = 1.0 / std::sqrt(e.values[i]);
    const double gap = tol::kCluster * (1.0 + lambdas.front());

    std::vector<Vector> us, vs, chosen;
    Vector spectrum;
    for (const auto& [begin, end] : clusters(lambdas, gap)) {
        if ((end - begin) % 2 != 0) {
            throw Error(ErrorKind::DegenerateSpectrumFailure, "eigenvalue cluster of -K^2 has odd multiplicity");
        }
        const std::vector<Vector> candidates = cluster_basis(e.vectors, begin, end, frame_seed);
        for (std::size_t pair = 0; pair < (end - begin) / 2; ++pair) {
            Vector u = best_candidate(candidates, chosen);
            fix_sign(u);
            const Vector ku = k * u;
            const double lambda = 1.0 / norm2(ku);
            Vector v(ku.size());
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = -lambda * ku[i];
            chosen.push_back(u);
            remove_components(v, chosen);
            normalize(v);
            chosen.push_back(v);
            us.push_back(std::move(u));
            vs.push_back(std::move(v));
            spectrum.push_back(lambda);
        }
    }

    // Keep pairs in decreasing lambda (clusters are already ordered; Rayleigh
    // values inside a cluster may differ in the last digits).
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return spectrum[a] > spectrum[b]; });

    Matrix o(2 * n, 2 * n);
    Vector sorted(n), inv_sqrt_d(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        o.set_col(j, us[src]);
        o.set_col(n + j, vs[src]);
        sorted[j] = spectrum[src];
        inv_sqrt_d[j] = inv_sqrt_d[n + j] = 1.0 / std::sqrt(spectrum[src]);
    }

    WilliamsonForm form{Matrix::diagonal(inv_sqrt_d) * o.transpose() * root, SymplecticSpectrum{sorted}};
    return form;
}

bool spectrum_is_symplectically_invariant(const Matrix& m, const Matrix& s) {
    if (s.rows() != m.rows() || !s.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, "S and M must have the same size");
    }
    const SymplecticSpectrum before = symplectic_spectrum(m);
    const SymplecticSpectrum after = symplectic_spectrum(symmetrize(s.transpose() * m * s));
    for (std::size_t j = 0; j < before.dof(); ++j) {
        if (std::abs(before.values[j] - after.values[j]) > tol::kSpec * (1.0 + before.values[j])) return false;
    }
    return true;
}

bool spectra_dominates(const SymplecticSpectrum& a, const SymplecticSpectrum& b) {
    if (a.dof() != b.dof()) throw Error(ErrorKind::DimensionMismatch, "spectra have different lengths");
    for (std::size_t j = 0; j < a.dof(); ++j)
        if (a.values[j] < b.values[j]) return false;
    return true;
}

double max_boundary_image(const Matrix& m, const Matrix& s, const Matrix& m_prime, std::size_t samples,
                          std::uint64_t seed) {
    const Matrix inv_root = inv_sqrt_spd(m);
    Rng rng(seed);
    double worst = 0.0;
    Vector w(m.rows());
    for (std::size_t k = 0; k < samples; ++k) {
        for (double& x : w) x = rng.normal();
        normalize(w);
        // z = M^{-1/2} w lies on z^T M z = 1.
        const Vector z = s * (inv_root * w);
        worst = std::max(worst, dot(z, m_prime * z));
    }
    return worst;
}

std::optional<Matrix> embed_ellipsoid(const Matrix& m, const Matrix& m_prime) {
    if (m.rows() != m_prime.rows() || m.cols() != m_prime.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "ellipsoids live in different dimensions");
    }
    const WilliamsonForm first = williamson_diagonalize(m);
    const WilliamsonForm second = williamson_diagonalize(m_prime);
    for (std::size_t j = 0; j < first.spectrum.dof(); ++j) {
        const double a = first.spectrum.values[j];
        if (a + tol::kEmbedSlack * (1.0 + a) < second.spectrum.values[j]) return std::nullopt;
    }
    Matrix s = symplectic_inverse(second.s) * first.s;

    constexpr std::size_t kSamples = 1000;
    const double worst = max_boundary_image(m, s, m_prime, kSamples, 0x5eed);
    if (worst > 1.0 + 1e-9) {
        throw Error(ErrorKind::InternalInconsistency,
                    "embedding leaves the target ellipsoid (max image " + std::to_string(worst) + ")");
    }
    return s;
}

Matrix SymmetricSymplecticDiagonal::delta() const {
    const std::size_t n = lambda.size();
    Vector diag(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        diag[j] = lambda[j];
        diag[n + j] = 1.0 / lambda[j];
    }
    return Matrix::diagonal(diag);
}

Matrix SymmetricSymplecticDiagonal::reconstruct() const {
    const Matrix uu = u.embed();
    return uu.transpose() * delta() * uu;
}

SymmetricSymplecticDiagonal diagonalize_symmetric_symplectic(const Matrix& s_in) {
    require_even_spd(s_in);
    require_symplectic(s_in);
    const Matrix s = symmetrize(s_in);
    const std::size_t n = s.rows() / 2;
    const Matrix j = standard_J(n);
    const SymmetricEigen e = eigh(s);

    // Eigenvalues pair as (lambda, 1/lambda); the n smallest are <= 1. Those at 1
    // form a J-invariant space that must be split into (u, -J u) pairs.
    const double gap = tol::kCluster * (1.0 + e.values.back());
    std::size_t below = 0;
    while (below < n && e.values[below] < 1.0 - gap) ++below;
    std::size_t unit_end = below;
    while (unit_end < 2 * n && std::abs(e.values[unit_end] - 1.0) <= gap) ++unit_end;
    if ((unit_end - below) != 2 * (n - below)) {
        throw Error(ErrorKind::DegenerateSpectrumFailure, "eigenvalues of S do not pair as (lambda, 1/lambda)");
    }

    std::vector<Vector> us;
    std::vector<Vector> chosen;
    for (std::size_t k = 0; k < below; ++k) {
        us.push_back(e.vectors.col(k));
        chosen.push_back(us.back());
        Vector partner = j * us.back();
        for (double& x : partner) x = -x;
        chosen.push_back(std::move(partner));
    }
    std::vector<Vector> candidates;
    for (std::size_t k = below; k < unit_end; ++k) candidates.push_back(e.vectors.col(k));
    while (us.size() < n) {
        Vector u = best_candidate(candidates, chosen);
        fix_sign(u);
        Vector ju = j * u;
        for (double& x : ju) x = -x;
        chosen.push_back(u);
        remove_components(ju, chosen);
        normalize(ju);
        chosen.push_back(ju);
        us.push_back(std::move(u));
    }

    SymmetricSymplecticDiagonal out{UnitaryBlock{Matrix(n, n), Matrix(n, n)}, Vector(n)};
    // Columns u_k = [a_k; b_k]; the eigenvector matrix is V = [[A, -B], [B, A]] and U = V^T.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            out.u.a(k, i) = us[k][i];
            out.u.b(k, i) = -us[k][n + i];
        }
        out.lambda[k] = dot(us[k], s * us[k]);
    }
    return out;
}

}  // namespace symblob
