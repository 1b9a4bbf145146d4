#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "symblob/errors.hpp"
#include "symblob/matcore.hpp"
#include "symblob/rng.hpp"
#include "symblob/sympcore.hpp"
#include "symblob/williamson.hpp"
#include "test_util.hpp"

namespace symblob {
namespace {

TEST(matrix, basic_algebra) {
    const Matrix a{{1.0, 2.0}, {3.0, 4.0}};
    const Matrix b{{0.0, 1.0}, {1.0, 0.0}};
    EXPECT_EQ(a * b, (Matrix{{2.0, 1.0}, {4.0, 3.0}}));
    EXPECT_EQ(a.transpose(), (Matrix{{1.0, 3.0}, {2.0, 4.0}}));
    EXPECT_DOUBLE_EQ(determinant(a), -2.0);
    EXPECT_DOUBLE_EQ(trace(a), 5.0);
    EXPECT_MATRIX_NEAR(a * inverse(a), Matrix::identity(2), 1e-14);
}

TEST(matrix, dimension_mismatch_throws) {
    const Matrix a(2, 3);
    const Matrix b(2, 3);
    EXPECT_THROWS_KIND(a * b, ErrorKind::DimensionMismatch);
    EXPECT_THROWS_KIND(a + Matrix(3, 2), ErrorKind::DimensionMismatch);
}

TEST(matrix, block_roundtrip) {
    const Matrix m = random_spd(4, 3);
    const Matrix rebuilt = block2x2(m.block(0, 0, 2, 2), m.block(0, 2, 2, 2), m.block(2, 0, 2, 2), m.block(2, 2, 2, 2));
    EXPECT_EQ(rebuilt, m);
}

TEST(eigh, diagonal_input) {
    const SymmetricEigen e = eigh(testing::diag({3.0, 1.0}));
    EXPECT_DOUBLE_EQ(e.values[0], 1.0);
    EXPECT_DOUBLE_EQ(e.values[1], 3.0);
    EXPECT_MATRIX_NEAR(e.vectors, (Matrix{{0.0, 1.0}, {1.0, 0.0}}), 0.0);
}

TEST(eigh, swap_matrix) {
    const SymmetricEigen e = eigh(Matrix{{0.0, 1.0}, {1.0, 0.0}});
    EXPECT_NEAR(e.values[0], -1.0, 1e-15);
    EXPECT_NEAR(e.values[1], 1.0, 1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_MATRIX_NEAR(e.vectors, (Matrix{{r, r}, {-r, r}}), 1e-15);
}

TEST(eigh, recovers_known_spectrum) {
    const Matrix q = random_orthogonal(6, 17);
    const Vector d{-2.0, -0.5, 0.25, 1.0, 3.0, 7.5};
    const SymmetricEigen e = eigh(symmetrize(q * Matrix::diagonal(d) * q.transpose()));
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(e.values[i], d[i], 1e-10);
}

TEST(eigh, reconstruction_and_orthogonality_up_to_dim_12) {
    for (std::size_t dim = 1; dim <= 12; ++dim) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Matrix a(dim, dim);
            Rng rng(seed * 100 + dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i; j < dim; ++j) a(i, j) = a(j, i) = rng.uniform(-3.0, 3.0);
            const SymmetricEigen e = eigh(a);
            const Matrix rebuilt = e.vectors * Matrix::diagonal(e.values) * e.vectors.transpose();
            EXPECT_LE(max_abs_diff(rebuilt, a), 1e-10 * (1.0 + max_abs(a)));
            EXPECT_MATRIX_NEAR(e.vectors.transpose() * e.vectors, Matrix::identity(dim), 1e-10);
            EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
        }
    }
}

TEST(eigh, rejects_bad_input) {
    EXPECT_THROWS_KIND(eigh(Matrix{{1.0, 2.0}, {0.0, 1.0}}), ErrorKind::NonSymmetric);
    EXPECT_THROWS_KIND(eigh(Matrix{{1.0, std::numeric_limits<double>::quiet_NaN()}, {0.0, 1.0}}),
                       ErrorKind::NonFinite);
}

TEST(sqrt_spd, examples) {
    EXPECT_MATRIX_NEAR(sqrt_spd(Matrix::identity(3)), Matrix::identity(3), 1e-15);
    EXPECT_MATRIX_NEAR(sqrt_spd(testing::diag({4.0, 9.0})), testing::diag({2.0, 3.0}), 1e-15);
    const Matrix a = random_spd(5, 8);
    const Matrix r = sqrt_spd(a);
    EXPECT_MATRIX_NEAR(r * r, a, 1e-10);
    EXPECT_TRUE(is_spd(r));
}

TEST(sqrt_spd, fourth_root_composition) {
    const Matrix a = random_spd(6, 21);
    const Matrix q = sqrt_spd(sqrt_spd(a));
    EXPECT_MATRIX_NEAR(q * q * q * q, a, 1e-9);
}

TEST(inv_spd, examples) {
    EXPECT_MATRIX_NEAR(inv_spd(Matrix::identity(2)), Matrix::identity(2), 1e-15);
    EXPECT_MATRIX_NEAR(inv_spd(testing::diag({2.0, 5.0})), testing::diag({0.5, 0.2}), 1e-15);
    const Matrix a = random_spd(6, 4);
    EXPECT_MATRIX_NEAR(a * inv_spd(a), Matrix::identity(6), 1e-9);
}

TEST(inv_spd, commutes_with_sqrt) {
    const Matrix a = random_spd(5, 77);
    EXPECT_MATRIX_NEAR(inv_spd(sqrt_spd(a)), sqrt_spd(inv_spd(a)), 1e-9);
    EXPECT_MATRIX_NEAR(inv_sqrt_spd(a), inv_spd(sqrt_spd(a)), 1e-9);
}

TEST(inv_spd, rejects_indefinite) {
    EXPECT_THROWS_KIND(inv_spd(testing::diag({1.0, 0.0})), ErrorKind::NotPositiveDefinite);
    EXPECT_THROWS_KIND(sqrt_spd(testing::diag({1.0, -1.0})), ErrorKind::NotPositiveDefinite);
    EXPECT_FALSE(is_spd(testing::diag({1.0, -1.0})));
}

bool contains_eigenvalue(const std::vector<std::complex<double>>& ev, std::complex<double> z, double tol) {
    return std::any_of(ev.begin(), ev.end(), [&](std::complex<double> w) { return std::abs(w - z) <= tol; });
}

TEST(eigvals_general, rotation_generator) {
    const auto ev = eigvals_general(standard_J(1));
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_TRUE(contains_eigenvalue(ev, {0.0, 1.0}, 1e-14));
    EXPECT_TRUE(contains_eigenvalue(ev, {0.0, -1.0}, 1e-14));
}

TEST(eigvals_general, j_times_diagonal) {
    const auto ev = eigvals_general(standard_J(1) * testing::diag({2.0, 8.0}));
    EXPECT_TRUE(contains_eigenvalue(ev, {0.0, 4.0}, 1e-13));
    EXPECT_TRUE(contains_eigenvalue(ev, {0.0, -4.0}, 1e-13));
}

TEST(eigvals_general, companion_matrix_roots) {
    // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
    const Matrix c{{6.0, -11.0, 6.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    const auto ev = eigvals_general(c);
    for (double r : {1.0, 2.0, 3.0}) EXPECT_TRUE(contains_eigenvalue(ev, {r, 0.0}, 1e-10)) << r;
}

TEST(eigvals_general, jm_matches_williamson_spectrum) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const Matrix m = random_spd(2 * n, 300 + n);
        const auto ev = eigvals_general(standard_J(n) * m);
        for (double l : symplectic_spectrum(m).values) {
            EXPECT_TRUE(contains_eigenvalue(ev, {0.0, l}, 1e-9 * l));
            EXPECT_TRUE(contains_eigenvalue(ev, {0.0, -l}, 1e-9 * l));
        }
        for (const auto& z : ev) EXPECT_LE(std::abs(z.real()), 1e-9 * std::abs(z));
    }
}

TEST(eigvals_general, dimension_cap) {
    EXPECT_NO_THROW(eigvals_general(Matrix::identity(20)));
    EXPECT_THROWS_KIND(eigvals_general(Matrix::identity(21)), ErrorKind::DimensionCap);
}

TEST(jm_moduli, closed_forms) {
    const Vector a = jm_moduli(testing::diag({2.0, 8.0}));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_NEAR(a[0], 4.0, 1e-13);
    const Vector b = jm_moduli(testing::diag({2.0, 3.0, 2.0, 3.0}));
    ASSERT_EQ(b.size(), 2u);
    EXPECT_NEAR(b[0], 3.0, 1e-13);
    EXPECT_NEAR(b[1], 2.0, 1e-13);
}

TEST(hermitian_eigvals, two_by_two) {
    // [[1, -i], [i, 1]] has eigenvalues 0 and 2.
    const Vector w = hermitian_eigvals(Matrix::identity(2), Matrix{{0.0, -1.0}, {1.0, 0.0}});
    ASSERT_EQ(w.size(), 2u);
    EXPECT_NEAR(w[0], 0.0, 1e-15);
    EXPECT_NEAR(w[1], 2.0, 1e-15);
}

TEST(random_generators, deterministic) {
    EXPECT_EQ(random_spd(4, 9), random_spd(4, 9));
    EXPECT_NE(random_spd(4, 9), random_spd(4, 10));
    const Matrix q = random_orthogonal(5, 2);
    EXPECT_MATRIX_NEAR(q.transpose() * q, Matrix::identity(5), 1e-14);
    EXPECT_TRUE(is_spd(random_spd(8, 1)));
}

}  // namespace
}  // namespace symblob
