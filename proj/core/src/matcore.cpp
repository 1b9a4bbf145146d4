#include "symblob/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "symblob/errors.hpp"
#include "symblob/rng.hpp"
#include "symblob/tolerances.hpp"

namespace symblob {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square() || a.empty()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a non-empty square matrix");
    }
}

// Fix the sign of each column so its first non-negligible entry is positive.
void canonicalize_signs(Matrix& v) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
        double scale = 0.0;
        for (std::size_t i = 0; i < v.rows(); ++i) scale = std::max(scale, std::abs(v(i, j)));
        for (std::size_t i = 0; i < v.rows(); ++i) {
            if (std::abs(v(i, j)) > 1e-8 * scale) {
                if (v(i, j) < 0.0) {
                    for (std::size_t k = 0; k < v.rows(); ++k) v(k, j) = -v(k, j);
                }
                break;
            }
        }
    }
}

Matrix from_eigen(const SymmetricEigen& e, double (*f)(double)) {
    const std::size_t n = e.values.size();
    Matrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(e.values[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const double vik = e.vectors(i, k) * fk;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += vik * e.vectors(j, k);
        }
    }
    return symmetrize(r);
}

SymmetricEigen spd_eigen(const Matrix& a) {
    SymmetricEigen e = eigh(a);
    const double threshold = tol::kPd * max_abs(a);
    if (e.values.front() <= threshold || e.values.front() <= 0.0) {
        throw Error(ErrorKind::NotPositiveDefinite,
                    "smallest eigenvalue " + std::to_string(e.values.front()) + " is not positive");
    }
    return e;
}

}  // namespace

bool is_symmetric(const Matrix& a) {
    if (!a.is_square() || !all_finite(a)) return false;
    const double bound = tol::kSym * (1.0 + max_abs(a));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > bound) return false;
    return true;
}

void require_symmetric(const Matrix& a) {
    require_square(a, "symmetric check");
    if (!all_finite(a)) throw Error(ErrorKind::NonFinite, "matrix has NaN or Inf entries");
    if (!is_symmetric(a)) throw Error(ErrorKind::NonSymmetric, "matrix is not symmetric within tolerance");
}

void require_spd(const Matrix& a) {
    require_symmetric(a);
    spd_eigen(a);
}

bool is_spd(const Matrix& a) {
    if (!is_symmetric(a) || a.empty()) return false;
    const SymmetricEigen e = eigh(a);
    return e.values.front() > tol::kPd * max_abs(a) && e.values.front() > 0.0;
}

SymmetricEigen eigh(const Matrix& input) {
    require_symmetric(input);
    const std::size_t n = input.rows();
    Matrix a = symmetrize(input);
    Matrix v = Matrix::identity(n);

    bool converged = false;
    for (int sweep = 1; sweep <= tol::kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::abs(a(p, q));
        if (off == 0.0) {
            converged = true;
            break;
        }
        const double threshold = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                const double g = 100.0 * std::abs(apq);
                if (sweep > 4 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + g == std::abs(a(q, q))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                if (std::abs(apq) <= threshold) continue;

                const double h = a(q, q) - a(p, p);
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) {
        throw Error(ErrorKind::NoConvergence, "Jacobi sweeps exceeded the cap");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    SymmetricEigen out{Vector(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    canonicalize_signs(out.vectors);
    return out;
}

Matrix sqrt_spd(const Matrix& a) {
    return from_eigen(spd_eigen(a), [](double x) { return std::sqrt(x); });
}

Matrix inv_spd(const Matrix& a) {
    return from_eigen(spd_eigen(a), [](double x) { return 1.0 / x; });
}

Matrix inv_sqrt_spd(const Matrix& a) {
    return from_eigen(spd_eigen(a), [](double x) { return 1.0 / std::sqrt(x); });
}

std::vector<std::complex<double>> eigvals_general(const Matrix& input) {
    require_square(input, "eigvals_general");
    if (!all_finite(input)) throw Error(ErrorKind::NonFinite, "matrix has NaN or Inf entries");
    const int n = static_cast<int>(input.rows());
    if (n > tol::kGeneralEigDimCap) {
        throw Error(ErrorKind::DimensionCap,
                    "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(tol::kGeneralEigDimCap));
    }

    Matrix m = input;
    // 1-based accessor keeps the classic Hessenberg/QR index arithmetic readable.
    auto a = [&m](int i, int j) -> double& { return m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)); };

    // Balance.
    constexpr double radix = 2.0;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 1; i <= n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= radix * radix;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= radix * radix;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (int j = 1; j <= n; ++j) a(i, j) *= g;
                for (int j = 1; j <= n; ++j) a(j, i) *= f;
            }
        }
    }

    // Reduce to upper Hessenberg form by stabilized elementary similarity transforms.
    for (int mm = 2; mm < n; ++mm) {
        double x = 0.0;
        int i = mm;
        for (int j = mm; j <= n; ++j) {
            if (std::abs(a(j, mm - 1)) > std::abs(x)) {
                x = a(j, mm - 1);
                i = j;
            }
        }
        if (i != mm) {
            for (int j = mm - 1; j <= n; ++j) std::swap(a(i, j), a(mm, j));
            for (int j = 1; j <= n; ++j) std::swap(a(j, i), a(j, mm));
        }
        if (x != 0.0) {
            for (i = mm + 1; i <= n; ++i) {
                double y = a(i, mm - 1);
                if (y == 0.0) continue;
                y /= x;
                a(i, mm - 1) = y;
                for (int j = mm; j <= n; ++j) a(i, j) -= y * a(mm, j);
                for (int j = 1; j <= n; ++j) a(j, mm) += y * a(j, i);
            }
        }
    }
    for (int i = 3; i <= n; ++i)
        for (int j = 1; j <= i - 2; ++j) a(i, j) = 0.0;

    // Francis double-shift QR on the Hessenberg matrix.
    std::vector<double> wr(static_cast<std::size_t>(n) + 1), wi(static_cast<std::size_t>(n) + 1);
    double anorm = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

    constexpr int kMaxIterations = 60;
    int nn = n;
    double t = 0.0;
    while (nn >= 1) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 2; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) + s == s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = a(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                --nn;
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    const double p = 0.5 * (y - x);
                    const double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + std::copysign(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn] = z;
                        wi[nn - 1] = -z;
                    }
                    nn -= 2;
                } else {
                    if (its == kMaxIterations) {
                        throw Error(ErrorKind::NoConvergence, "Hessenberg QR iteration cap reached");
                    }
                    if (its == 10 || its == 20 || its == 40) {
                        t += x;
                        for (int i = 1; i <= nn; ++i) a(i, i) -= x;
                        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int mm;
                    double p = 0.0, q = 0.0, r = 0.0, z;
                    for (mm = nn - 2; mm >= l; --mm) {
                        z = a(mm, mm);
                        r = x - z;
                        double s = y - z;
                        p = (r * s - w) / a(mm + 1, mm) + a(mm, mm + 1);
                        q = a(mm + 1, mm + 1) - z - r - s;
                        r = a(mm + 2, mm + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (mm == l) break;
                        const double u = std::abs(a(mm, mm - 1)) * (std::abs(q) + std::abs(r));
                        const double v =
                            std::abs(p) * (std::abs(a(mm - 1, mm - 1)) + std::abs(z) + std::abs(a(mm + 1, mm + 1)));
                        if (u + v == v) break;
                    }
                    for (int i = mm + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != mm + 2) a(i, i - 3) = 0.0;
                    }
                    for (int k = mm; k <= nn - 1; ++k) {
                        if (k != mm) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) r = a(k + 2, k - 1);
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == mm) {
                            if (l != mm) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = a(k, j) + q * a(k + 1, j);
                            if (k != nn - 1) {
                                p += r * a(k + 2, j);
                                a(k + 2, j) -= p * z;
                            }
                            a(k + 1, j) -= p * y;
                            a(k, j) -= p * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x * a(i, k) + y * a(i, k + 1);
                            if (k != nn - 1) {
                                p += z * a(i, k + 2);
                                a(i, k + 2) -= p * r;
                            }
                            a(i, k + 1) -= p * q;
                            a(i, k) -= p;
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }

    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.emplace_back(wr[i], wi[i]);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return out;
}

Vector jm_moduli(const Matrix& m) {
    require_spd(m);
    if (m.rows() % 2 != 0) throw Error(ErrorKind::OddDimension, "J*M needs an even-dimensional M");
    const std::size_t n = m.rows() / 2;
    Matrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1.0;
        j(n + i, i) = -1.0;
    }
    const Matrix root = sqrt_spd(m);
    const Matrix k = root * j * root;
    const SymmetricEigen e = eigh(symmetrize(k.transpose() * k));
    Vector moduli(n);
    // Eigenvalues of -K^2 = K^T K come in equal pairs; average each pair.
    for (std::size_t p = 0; p < n; ++p) {
        const double mean = 0.5 * (e.values[2 * n - 1 - 2 * p] + e.values[2 * n - 2 - 2 * p]);
        moduli[p] = std::sqrt(std::max(mean, 0.0));
    }
    return moduli;
}

Vector hermitian_eigvals(const Matrix& re, const Matrix& im) {
    const std::size_t n = re.rows();
    if (!re.is_square() || im.rows() != n || im.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "Hermitian parts must be square and of equal size");
    }
    const Matrix embedded = block2x2(re, -im, im, re);
    const SymmetricEigen e = eigh(symmetrize(embedded));
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = 0.5 * (e.values[2 * k] + e.values[2 * k + 1]);
    return out;
}

Matrix random_orthogonal(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    Matrix q(dim, dim);
    for (double& x : q.data()) x = rng.normal();
    for (std::size_t j = 0; j < dim; ++j) {
        Vector v = q.col(j);
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const Vector qk = q.col(k);
                const double d = dot(v, qk);
                for (std::size_t i = 0; i < dim; ++i) v[i] -= d * qk[i];
            }
        }
        const double nv = norm2(v);
        for (double& x : v) x /= nv;
        q.set_col(j, v);
    }
    return q;
}

Matrix random_spd(std::size_t dim, std::uint64_t seed, double lo, double hi) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Vector w(dim);
    for (double& x : w) x = std::exp(rng.uniform(std::log(lo), std::log(hi)));
    const Matrix q = random_orthogonal(dim, rng.next_u64());
    return symmetrize(q * Matrix::diagonal(w) * q.transpose());
}

}  // namespace symblob
