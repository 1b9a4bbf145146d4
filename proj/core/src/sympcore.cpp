#include "symblob/sympcore.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "symblob/errors.hpp"
#include "symblob/matcore.hpp"
#include "symblob/rng.hpp"
#include "symblob/tolerances.hpp"

namespace symblob {

namespace {

void require_same_size(const PhasePoint& a, const PhasePoint& b) {
    if (a.coords.size() != b.coords.size()) {
        throw Error(ErrorKind::DimensionMismatch, "phase points of different dimension");
    }
}

Vector random_unit(Rng& rng, std::size_t dim) {
    Vector v(dim);
    double nv = 0.0;
    while (nv < 1e-12) {
        for (double& x : v) x = rng.normal();
        nv = norm2(v);
    }
    for (double& x : v) x /= nv;
    return v;
}

}  // namespace

PhasePoint operator+(const PhasePoint& a, const PhasePoint& b) {
    require_same_size(a, b);
    PhasePoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

PhasePoint operator-(const PhasePoint& a, const PhasePoint& b) {
    require_same_size(a, b);
    PhasePoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

Matrix standard_J(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "degrees of freedom must be positive");
    Matrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1.0;
        j(n + i, i) = -1.0;
    }
    return j;
}

double omega(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() % 2 != 0) {
        throw Error(ErrorKind::DimensionMismatch, "omega needs two vectors of equal even length");
    }
    // b^T J a = sum_i b_{x_i} a_{p_i} - b_{p_i} a_{x_i}
    const std::size_t n = a.size() / 2;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += b[i] * a[n + i] - b[n + i] * a[i];
    return s;
}

SymplecticCheck is_symplectic(const Matrix& s) {
    if (!s.is_square() || s.empty()) throw Error(ErrorKind::DimensionMismatch, "symplectic check needs a square matrix");
    if (s.rows() % 2 != 0) throw Error(ErrorKind::OddDimension, "symplectic matrices have even dimension");
    if (!all_finite(s)) throw Error(ErrorKind::NonFinite, "matrix has NaN or Inf entries");
    const Matrix j = standard_J(s.rows() / 2);
    const Matrix st = s.transpose();
    const double r1 = max_abs_diff(st * j * s, j);
    const double r2 = max_abs_diff(s * j * st, j);
    const double residual = std::max(r1, r2);
    return {residual <= tol::kSymp, residual};
}

void require_symplectic(const Matrix& s) {
    const SymplecticCheck c = is_symplectic(s);
    if (!c.symplectic) {
        throw Error(ErrorKind::NotSymplectic, "S^T J S - J residual " + std::to_string(c.residual) + " exceeds tolerance");
    }
}

Matrix symplectic_inverse(const Matrix& s) {
    const Matrix j = standard_J(s.rows() / 2);
    return -(j * s.transpose() * j);
}

Matrix UnitaryBlock::embed() const { return block2x2(a, -b, b, a); }

double UnitaryBlock::residual() const {
    const Matrix abt = a * b.transpose();
    const double r1 = max_abs_diff(abt, abt.transpose());
    const double r2 = max_abs_diff(a * a.transpose() + b * b.transpose(), Matrix::identity(a.rows()));
    return std::max(r1, r2);
}

UnitaryBlock random_unitary_block(std::size_t n, std::uint64_t seed) {
    using cd = std::complex<double>;
    Rng rng(seed);
    std::vector<std::vector<cd>> cols(n, std::vector<cd>(n));
    for (auto& c : cols)
        for (auto& x : c) x = cd(rng.normal(), rng.normal());
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cd d = 0.0;
                for (std::size_t i = 0; i < n; ++i) d += std::conj(cols[k][i]) * cols[j][i];
                for (std::size_t i = 0; i < n; ++i) cols[j][i] -= d * cols[k][i];
            }
        }
        double nv = 0.0;
        for (const auto& x : cols[j]) nv += std::norm(x);
        nv = std::sqrt(nv);
        for (auto& x : cols[j]) x /= nv;
    }
    UnitaryBlock u{Matrix(n, n), Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u.a(i, j) = cols[j][i].real();
            u.b(i, j) = cols[j][i].imag();
        }
    }
    return u;
}

Matrix random_symplectic(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "degrees of freedom must be positive");
    Rng rng(seed);
    Matrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c(i, j) = c(j, i) = rng.uniform(-1.0, 1.0);
    const Matrix eye = Matrix::identity(n);
    const Matrix shear = block2x2(eye, Matrix(n, n), c, eye);

    const Matrix rotation = random_unitary_block(n, rng.next_u64()).embed();

    Vector scales(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        scales[i] = lambda;
        scales[n + i] = 1.0 / lambda;
    }
    return shear * rotation * Matrix::diagonal(scales);
}

Matrix PreIwasawaFactors::lower() const {
    return block2x2(a0, Matrix(a0.rows(), a0.rows()), c0, inv_spd(a0));
}

Matrix PreIwasawaFactors::rotation() const { return block2x2(x0, -y0, y0, x0); }

double PreIwasawaFactors::constraint_residual() const {
    const Matrix ac = a0 * c0;
    return max_abs_diff(ac, ac.transpose());
}

PreIwasawaFactors pre_iwasawa(const Matrix& s) {
    require_symplectic(s);
    const std::size_t n = s.rows() / 2;
    const Matrix a = s.block(0, 0, n, n);
    const Matrix b = s.block(0, n, n, n);
    const Matrix c = s.block(n, 0, n, n);
    const Matrix d = s.block(n, n, n, n);

    const Matrix p = symmetrize(a * a.transpose() + b * b.transpose());
    const Matrix p_inv_sqrt = inv_sqrt_spd(p);
    return PreIwasawaFactors{
        .a0 = sqrt_spd(p),
        .c0 = (c * a.transpose() + d * b.transpose()) * p_inv_sqrt,
        .x0 = p_inv_sqrt * a,
        .y0 = -(p_inv_sqrt * b),
    };
}

double SymplecticPlane::omega() const { return symblob::omega(u, v); }

Matrix SymplecticPlane::basis() const {
    Matrix b(u.size(), 2);
    b.set_col(0, u);
    b.set_col(1, v);
    return b;
}

SymplecticPlane make_plane(std::span<const double> u_in, std::span<const double> v_in) {
    if (u_in.size() != v_in.size() || u_in.empty() || u_in.size() % 2 != 0) {
        throw Error(ErrorKind::DimensionMismatch, "plane basis vectors must share an even length");
    }
    Vector u(u_in.begin(), u_in.end());
    Vector v(v_in.begin(), v_in.end());
    const double nu = norm2(u);
    if (nu == 0.0) throw Error(ErrorKind::DegeneratePlane, "zero basis vector");
    for (double& x : u) x /= nu;
    for (int pass = 0; pass < 2; ++pass) {
        const double d = dot(u, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * u[i];
    }
    const double nv = norm2(v);
    if (nv <= 1e-12 * norm2(v_in)) throw Error(ErrorKind::DegeneratePlane, "basis vectors are linearly dependent");
    for (double& x : v) x /= nv;
    SymplecticPlane plane{std::move(u), std::move(v)};
    if (std::abs(plane.omega()) < tol::kPlane) {
        throw Error(ErrorKind::DegeneratePlane, "symplectic form is degenerate on the plane");
    }
    return plane;
}

SymplecticPlane symplectic_plane_coordinate(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "coordinate plane index " + std::to_string(j) + " outside 1.." + std::to_string(n));
    }
    SymplecticPlane p{Vector(2 * n, 0.0), Vector(2 * n, 0.0)};
    p.u[j - 1] = 1.0;
    p.v[n + j - 1] = 1.0;
    return p;
}

SymplecticPlane random_symplectic_plane(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "degrees of freedom must be positive");
    constexpr int kRetries = 100;
    Rng rng(seed);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        const Vector u = random_unit(rng, 2 * n);
        Vector v = random_unit(rng, 2 * n);
        for (int pass = 0; pass < 2; ++pass) {
            const double d = dot(u, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * u[i];
        }
        const double nv = norm2(v);
        if (nv < 1e-6) continue;
        for (double& x : v) x /= nv;
        SymplecticPlane plane{u, v};
        if (std::abs(plane.omega()) >= tol::kPlane) return plane;
    }
    throw Error(ErrorKind::DegenerateDraw, "no non-degenerate plane after retry cap");
}

SymplecticPlane random_complex_line(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "degrees of freedom must be positive");
    Rng rng(seed);
    const Vector u = random_unit(rng, 2 * n);
    return SymplecticPlane{u, standard_J(n) * u};
}

}  // namespace symblob
