// Acceptance run: one PASS/FAIL line per criterion, indented notes below some of them.
// Usage: symblob_acceptance [--only K]
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "golden.hpp"
#include "symblob/symblob.hpp"

namespace {

using namespace symblob;

constexpr double kPi = std::numbers::pi;

struct Verdict {
    Verdict() = default;
    Verdict(bool p, std::string d) : pass(p), detail(std::move(d)) {}

    bool pass = false;
    std::string detail;
    std::vector<std::string> notes;
};

struct Criterion {
    int id;
    const char* title;
    double time_limit;  // seconds, 0 for none
    std::function<Verdict()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double max_symplectic_defect(const Matrix& s) {
    const Matrix j = standard_J(s.rows() / 2);
    return max_abs_diff(s.transpose() * j * s, j);
}

Matrix random_psd_increment(std::size_t dim, Rng& rng) {
    Matrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) p(i, j) = rng.uniform(-1.0, 1.0);
    return symmetrize(p.transpose() * p);
}

Matrix two_mode_squeezer(double r) {
    const double c = std::cosh(r), s = std::sinh(r);
    Matrix m(4, 4);
    m(0, 0) = m(1, 1) = c;
    m(0, 1) = m(1, 0) = s;
    m(2, 2) = m(3, 3) = c;
    m(2, 3) = m(3, 2) = -s;
    return m;
}

// ---------------------------------------------------------------- 1

Verdict williamson_reconstruction() {
    int bad = 0;
    double worst_rec = 0.0, worst_symp = 0.0;
    for (std::uint64_t k = 0; k < 500; ++k) {
        const std::size_t n = 1 + k % 5;
        const Matrix m = random_spd(2 * n, 100000 + k);
        const WilliamsonForm w = williamson_diagonalize(m);
        const double rec = max_abs_diff(w.reconstruct(), m) / max_abs(m);
        const double symp = max_symplectic_defect(w.s);
        worst_rec = std::max(worst_rec, rec);
        worst_symp = std::max(worst_symp, symp);
        if (rec > 1e-8 || symp > 1e-9) ++bad;
    }
    return {bad == 0, fmt("500 matrices, %d violations; worst relative residual %.2e, worst |S^T J S - J| %.2e", bad,
                          worst_rec, worst_symp)};
}

// ---------------------------------------------------------------- 2, 3

struct PlaneSample {
    Ellipsoid blob;
    SymplecticPlane plane;
};

const std::vector<PlaneSample>& plane_sample() {
    static const std::vector<PlaneSample> sample = [] {
        std::vector<PlaneSample> v;
        for (std::uint64_t b = 0; b < 200; ++b) {
            const std::size_t n = 1 + b % 4;
            const Ellipsoid e = blob_to_ellipsoid(QuantumBlob(random_symplectic(n, 200000 + b)));
            for (std::uint64_t k = 0; k < 50; ++k) v.push_back({e, random_symplectic_plane(n, 300000 + 50 * b + k)});
        }
        return v;
    }();
    return sample;
}

Verdict section_invariance() {
    int bad = 0, bad_n1 = 0, total_n1 = 0;
    double lo = 1e300, hi = 0.0;
    for (const PlaneSample& s : plane_sample()) {
        const double ratio = section_area(s.blob, s.plane) / kPi;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        const bool ok = std::abs(ratio - 1.0) <= 1e-7;
        if (!ok) ++bad;
        if (s.blob.dof() == 1) {
            ++total_n1;
            if (!ok) ++bad_n1;
        }
    }
    Verdict v{bad == 0, fmt("10000 sections, %d off pi*hbar by more than 1e-7 relative; area/(pi hbar) in [%.4f, %.4f]",
                            bad, lo, hi)};
    v.notes.push_back(fmt("n = 1 (plane = whole space): %d of %d sections within tolerance", total_n1 - bad_n1, total_n1));

    int omega_bad = 0;
    double omega_worst = 0.0;
    for (std::uint64_t k = 0; k < 2000; ++k) {
        const std::size_t n = 1 + k % 4;
        const Matrix s = random_symplectic(n, 400000 + k);
        const SymplecticPlane l = random_complex_line(n, 500000 + k);
        const SymplecticPlane image = make_plane(s * l.u, s * l.v);
        const double a = section_area(blob_to_ellipsoid(QuantumBlob(s)), image) * std::abs(image.omega());
        omega_worst = std::max(omega_worst, std::abs(a / kPi - 1.0));
        if (std::abs(a / kPi - 1.0) > 1e-7) ++omega_bad;
    }
    v.notes.push_back(fmt("invariant that does hold: omega-area of blob S(B) cut by S(L), L a complex line: "
                          "%d of 2000 off by more than 1e-7 (worst %.1e)",
                          omega_bad, omega_worst));
    const double r = 0.5;
    const double a = section_area(blob_to_ellipsoid(QuantumBlob(two_mode_squeezer(r))), symplectic_plane_coordinate(2, 1));
    v.notes.push_back(fmt("counterexample: two-mode squeezer r = 0.5, (x1, p1) section = %.12f = pi/cosh(1) = %.12f", a,
                          kPi / std::cosh(2.0 * r)));
    return v;
}

Verdict linear_non_squeezing() {
    int bad = 0;
    double lo = 1e300;
    for (const PlaneSample& s : plane_sample()) {
        const double a = projection_area(s.blob, s.plane);
        lo = std::min(lo, a / kPi);
        if (a < kPi - 1e-9) ++bad;
    }
    Verdict v{bad == 0, fmt("10000 projections, %d below pi*hbar - 1e-9; smallest area/(pi hbar) %.4f", bad, lo)};

    int line_bad = 0;
    double line_lo = 1e300;
    for (std::uint64_t k = 0; k < 2000; ++k) {
        const std::size_t n = 1 + k % 4;
        const Ellipsoid e = blob_to_ellipsoid(QuantumBlob(random_symplectic(n, 600000 + k)));
        const double a = projection_area(e, random_complex_line(n, 700000 + k));
        line_lo = std::min(line_lo, a / kPi);
        if (a < kPi - 1e-9) ++line_bad;
    }
    v.notes.push_back(fmt("invariant that does hold: projections onto complex lines: %d of 2000 below pi*hbar "
                          "(smallest ratio %.6f)",
                          line_bad, line_lo));
    const double h = 1.0 / std::sqrt(2.0);
    const Ellipsoid e = blob_to_ellipsoid(QuantumBlob(Matrix::diagonal(Vector{0.5, 1.0, 2.0, 1.0})));
    const SymplecticPlane p{Vector{1, 0, 0, 0}, Vector{0, h, h, 0}};
    v.notes.push_back(fmt("counterexample: blob S = diag(1/2, 1, 2, 1), plane span{x1, (x2 + p1)/sqrt 2}: "
                          "projection = %.12f = pi sqrt(0.625) = %.12f",
                          projection_area(e, p), kPi * std::sqrt(0.625)));
    return v;
}

// ---------------------------------------------------------------- 4

Verdict spectral_monotonicity() {
    int bad = 0;
    for (std::uint64_t k = 0; k < 500; ++k) {
        const std::size_t n = 1 + k % 4;
        Rng rng(800000 + k);
        const Matrix m = random_spd(2 * n, 810000 + k);
        const Matrix m2 = symmetrize(m + random_psd_increment(2 * n, rng));
        const SymplecticSpectrum a = symplectic_spectrum(m);
        const SymplecticSpectrum b = symplectic_spectrum(m2);
        for (std::size_t j = 0; j < n; ++j) {
            if (a.values[j] > b.values[j] + 1e-9) {
                ++bad;
                break;
            }
        }
    }
    return {bad == 0, fmt("500 pairs, %d with a component of Spec(M) above Spec(M + P^T P)", bad)};
}

// ---------------------------------------------------------------- 5

Verdict ellipsoid_embedding() {
    int feasible_bad = 0, infeasible_bad = 0;
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const std::size_t n = 1 + k % 4;
        Rng rng(900000 + k);
        const Matrix big = random_spd(2 * n, 910000 + k);
        const Matrix small = symmetrize(big + random_psd_increment(2 * n, rng) + Matrix::identity(2 * n) * 0.05);
        // {z^T small z <= 1} fits into {z^T big z <= 1}, never the other way round.
        const auto s = embed_ellipsoid(small, big);
        if (!s) {
            ++feasible_bad;
        } else {
            const double m = max_boundary_image(small, *s, big, 1000, 920000 + k);
            worst = std::max(worst, m);
            if (m > 1.0 + 1e-9 || !is_symplectic(*s).symplectic) ++feasible_bad;
        }
        if (embed_ellipsoid(big, small)) ++infeasible_bad;
    }
    return {feasible_bad == 0 && infeasible_bad == 0,
            fmt("feasible: %d of 100 failed (worst boundary image %.12f); infeasible: %d of 100 wrongly embedded",
                feasible_bad, worst, infeasible_bad)};
}

// ---------------------------------------------------------------- 6

Verdict gaussian_blob_bijection() {
    int bad = 0;
    double worst_xy = 0.0, worst_f = 0.0;
    for (std::uint64_t k = 0; k < 500; ++k) {
        const std::size_t n = 1 + k % 4;
        const double hbar = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 0.5 : 2.0);
        const GaussianPureState psi = random_pure_state(n, 1000000 + k, hbar);
        const GaussianPureState back = gaussian_from_blob(blob_from_gaussian(psi));
        const double dxy = std::max(max_abs_diff(back.x(), psi.x()), max_abs_diff(back.y(), psi.y()));

        const QuantumBlob q(random_symplectic(n, 1010000 + k), hbar);
        const Matrix f = blob_to_ellipsoid(q).f();
        const double df = max_abs_diff(blob_to_ellipsoid(blob_from_gaussian(gaussian_from_blob(q))).f(), f) / max_abs(f);
        worst_xy = std::max(worst_xy, dxy);
        worst_f = std::max(worst_f, df);
        if (dxy > 1e-9 || df > 1e-9) ++bad;
    }
    return {bad == 0, fmt("500 round trips each way, %d violations; worst |dX|,|dY| %.2e, worst relative |dF| %.2e",
                          bad, worst_xy, worst_f)};
}

// ---------------------------------------------------------------- 7

Verdict uncertainty_equivalence() {
    int disagree = 0, wrong = 0, admissible = 0, n1 = 0, n1_bad = 0;
    double worst_n1 = 0.0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const std::size_t n = 1 + k % 4;
        const double hbar = (k % 3 == 0) ? 1.0 : (k % 3 == 1 ? 0.5 : 2.0);
        Rng rng(1100000 + k);
        // Largest symplectic eigenvalue on either side of 1, the rest below it.
        double top = rng.uniform(0.6, 1.4);
        if (std::abs(top - 1.0) < 1e-4) top = 1.0 + std::copysign(1e-4, top - 1.0);
        Vector d(2 * n);
        d[0] = d[n] = top;
        for (std::size_t j = 1; j < n; ++j) d[j] = d[n + j] = rng.uniform(0.3, top);
        const Matrix r = random_symplectic(n, 1110000 + k);
        const Ellipsoid e(symmetrize(r.transpose() * Matrix::diagonal(d) * r), hbar);
        const bool truth = top <= 1.0;
        admissible += truth;

        AdmissibilityConditions c;
        try {
            c = admissibility_conditions(e);
        } catch (const Error&) {
            ++disagree;
            continue;
        }
        if (!(c.a == c.b && c.b == c.c && c.c == c.d)) ++disagree;
        if (c.a != truth || is_admissible(e) != truth) ++wrong;

        if (n == 1) {
            ++n1;
            const Matrix sigma = covariance(WignerGaussian(e.f(), hbar)).sigma;
            const double sx = std::sqrt(sigma(0, 0)), sp = std::sqrt(sigma(1, 1));
            const double rho = sigma(0, 1) / (sx * sp);
            const double product = sx * sp * std::sqrt(1.0 - rho * rho);
            const double dev = std::abs(product - hbar / (2.0 * top));
            worst_n1 = std::max(worst_n1, dev);
            if (dev > 1e-10 || (product >= hbar / 2.0 * (1.0 - tol::kAdm)) != truth) ++n1_bad;
        }
    }
    return {disagree == 0 && wrong == 0 && n1_bad == 0,
            fmt("1000 instances (%d admissible): %d disagreements among A-D, %d wrong verdicts; "
                "n = 1: %d of %d off the sx*sp*sqrt(1 - rho^2) test (worst %.1e)",
                admissible, disagree, wrong, n1_bad, n1, worst_n1)};
}

// ---------------------------------------------------------------- 8

Verdict wigner_oracle() {
    int bad = 0;
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 50; ++k) {
        Rng rng(1200000 + k);
        const double hbar = (k % 2 == 0) ? 1.0 : 0.5;
        const GaussianPureState base = random_pure_state(1, 1210000 + k, hbar);
        const GaussianPureState psi(base.x(), base.y(), hbar, PhasePoint{{rng.uniform(-1, 1), rng.uniform(-1, 1)}});
        const WignerGaussian w = wigner_matrix(psi);
        for (int i = 0; i < 10; ++i) {
            const PhasePoint z{{psi.center().coords[0] + rng.uniform(-2, 2), psi.center().coords[1] + rng.uniform(-2, 2)}};
            const double d = std::abs(wigner_quadrature_oracle(psi, z) - wigner_eval(w, z));
            worst = std::max(worst, d);
            if (d > 1e-6) ++bad;
        }
    }
    return {bad == 0, fmt("50 states x 10 points, %d off by more than 1e-6; worst %.2e", bad, worst)};
}

// ---------------------------------------------------------------- 9

// Evaluates a 1-mode Gaussian Wigner function without allocation.
struct Gauss2 {
    double a, b, c, norm, x0, p0, hbar;
    explicit Gauss2(const WignerGaussian& w)
        : a(w.shape()(0, 0)), b(w.shape()(0, 1)), c(w.shape()(1, 1)), norm(w.normalization()),
          x0(w.center().coords[0]), p0(w.center().coords[1]), hbar(w.hbar()) {}
    double operator()(double x, double p) const {
        const double dx = x - x0, dp = p - p0;
        return norm * std::exp(-(a * dx * dx + 2.0 * b * dx * dp + c * dp * dp) / hbar);
    }
};

Verdict smoothing_law() {
    int law_bad = 0, adm_bad = 0, grid_bad = 0;
    double law_worst = 0.0, grid_worst = 0.0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        const std::size_t n = 1 + k % 4;
        const Matrix h = random_spd(2 * n, 1300000 + k);
        const WignerGaussian s = smooth(WignerGaussian(h), williamson_frame_blob(h));
        const SymplecticSpectrum before = symplectic_spectrum(h);
        const SymplecticSpectrum after = symplectic_spectrum(s.shape());
        for (std::size_t j = 0; j < n; ++j) {
            const double l = before.values[j];
            const double d = std::abs(after.values[j] - l / (1.0 + l));
            law_worst = std::max(law_worst, d);
            if (d > 1e-8) {
                ++law_bad;
                break;
            }
        }
    }
    for (std::uint64_t k = 0; k < 300; ++k) {
        const std::size_t n = 1 + k % 4;
        const WignerGaussian s =
            smooth(WignerGaussian(random_spd(2 * n, 1310000 + k)), QuantumBlob(random_symplectic(n, 1320000 + k)));
        if (!is_admissible(s.ellipsoid())) ++adm_bad;
    }
    for (std::uint64_t k = 0; k < 3; ++k) {
        Rng rng(1330000 + k);
        const WignerGaussian w(random_spd(2, 1340000 + k), 1.0, PhasePoint{{rng.uniform(-1, 1), rng.uniform(-1, 1)}});
        const QuantumBlob q(random_symplectic(1, 1350000 + k), 1.0, PhasePoint{{rng.uniform(-1, 1), rng.uniform(-1, 1)}});
        const Gauss2 f(w);
        const Gauss2 g(WignerGaussian(blob_to_ellipsoid(q).f(), 1.0, q.center()));
        const Gauss2 sm(smooth(w, q));
        const double step = 0.04;
        for (double x = -6.0; x <= 6.0 + 1e-9; x += 1.5) {
            for (double p = -6.0; p <= 6.0 + 1e-9; p += 1.5) {
                double total = 0.0;
                for (double a = -12.0; a <= 12.0; a += step)
                    for (double b = -12.0; b <= 12.0; b += step) total += f(x - a, p - b) * g(a, b);
                const double d = std::abs(total * step * step - sm(x, p));
                grid_worst = std::max(grid_worst, d);
                if (d > 1e-4) ++grid_bad;
            }
        }
    }
    return {law_bad == 0 && adm_bad == 0 && grid_bad == 0,
            fmt("spectral law: %d of 100 off (worst %.1e); %d of 300 smoothed states not admissible; "
                "grid convolution: %d of 243 points off by more than 1e-4 (worst %.1e)",
                law_bad, law_worst, adm_bad, grid_bad, grid_worst)};
}

// ---------------------------------------------------------------- 10, 11

Verdict debruijn_boundary() {
    int bad = 0;
    for (double ab : {1.0, 1.0 + 1e-6, 1.5})
        for (std::size_t n : {1, 2, 3})
            if (!debruijn_admissible(2.0, ab / 2.0, n)) ++bad;
    for (double ab : {1.0 - 1e-3, 0.8})
        for (std::size_t n : {1, 2, 3})
            if (debruijn_admissible(2.0, ab / 2.0, n)) ++bad;
    return {bad == 0, fmt("alpha*beta in {1, 1+1e-6, 1.5} admissible, {1-1e-3, 0.8} not, n = 1..3: %d wrong", bad)};
}

Verdict volume_constants() {
    const double v = blob_volume(QuantumBlob(Matrix::identity(4)));
    const std::size_t d = quant_manifold_dim(1);
    return {std::abs(v - kPi * kPi / 2.0) <= 1e-12 && d == 4,
            fmt("volume(n = 2) - pi^2/2 = %.1e; quant_manifold_dim(1) = %zu", v - kPi * kPi / 2.0, d)};
}

// ---------------------------------------------------------------- 12

Verdict cli_goldens() {
    using namespace symblob::golden;
    const std::vector<Case> cases = load_cases(SYMBLOB_GOLDEN_CASES, SYMBLOB_GOLDEN_DATA);
    int bad = 0;
    Verdict v;
    for (const Case& c : cases) {
        const Outcome first = run_case(c);
        const Outcome second = run_case(c);
        std::string problem = check_case(c, first, SYMBLOB_GOLDEN_EXPECTED);
        if (problem.empty() && (first.out != second.out || first.exit_code != second.exit_code)) {
            problem = "second run differs";
        }
        if (!problem.empty()) {
            ++bad;
            v.notes.push_back(c.name + ": " + problem);
        }
    }
    v.pass = bad == 0;
    v.detail = fmt("%zu cases run twice, %d not byte-identical to the golden files", cases.size(), bad);
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::strcmp(argv[1], "--only") == 0) only = std::atoi(argv[2]);

    const std::vector<Criterion> criteria = {
        {1, "Williamson reconstruction", 10.0, williamson_reconstruction},
        {2, "section area of a blob is pi*hbar on every symplectic plane", 30.0, section_invariance},
        {3, "projection area of a blob is >= pi*hbar on every symplectic plane", 0.0, linear_non_squeezing},
        {4, "symplectic spectrum is monotone", 0.0, spectral_monotonicity},
        {5, "ellipsoid embedding is constructive", 0.0, ellipsoid_embedding},
        {6, "Gaussian states <-> blobs bijection", 0.0, gaussian_blob_bijection},
        {7, "uncertainty conditions A-D agree", 0.0, uncertainty_equivalence},
        {8, "Wigner closed form matches quadrature", 60.0, wigner_oracle},
        {9, "smoothing law", 0.0, smoothing_law},
        {10, "de Bruijn boundary", 0.0, debruijn_boundary},
        {11, "volume and dimension constants", 0.0, volume_constants},
        {12, "CLI golden reports", 0.0, cli_goldens},
    };

    int failed = 0, ran = 0;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit > 0.0 && secs > c.time_limit) {
            v.pass = false;
            v.detail += fmt("; took %.1f s, limit %.0f s", secs, c.time_limit);
        }
        std::printf("%s criterion %2d: %s: %s [%.2f s]\n", v.pass ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(),
                    secs);
        for (const std::string& note : v.notes) std::printf("      note: %s\n", note.c_str());
        std::fflush(stdout);
        if (!v.pass) ++failed;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    std::printf("%d of %d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
