#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "io.hpp"
#include "symblob/symblob.hpp"

namespace symblob::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxDof = static_cast<std::size_t>(tol::kGeneralEigDimCap) / 2;

struct Options {
    std::string matrix;
    std::string matrix2;
    double hbar = 1.0;
    std::string plane = "1";
    std::size_t samples = 64;
    std::uint64_t seed = 0;
    std::string out;
    bool json = false;
    std::size_t n = 1;
    std::vector<std::size_t> indices;
    std::vector<double> point;
    double alpha = 0.0;
    double beta = 0.0;
};

class Report {
public:
    explicit Report(std::string command, const Options& opts) : command_(std::move(command)) {
        inputs_["hbar"] = opts.hbar;
    }

    json& inputs() { return inputs_; }
    json& results() { return results_; }

    json finish() const {
        const json tolerances = {
            {"adm", tol::kAdm},   {"blob", tol::kBlob},   {"cap", tol::kCap},
            {"cluster", tol::kCluster}, {"eig", tol::kEig}, {"embed_slack", tol::kEmbedSlack},
            {"herm", tol::kHerm}, {"pd", tol::kPd},      {"plane", tol::kPlane},
            {"spec", tol::kSpec}, {"sym", tol::kSym},     {"symp", tol::kSymp},
            {"wil", tol::kWil},
        };
        return rounded(json{{"command", command_},
                            {"inputs", inputs_},
                            {"results", results_},
                            {"tolerances", tolerances},
                            {"version", kVersion}});
    }

private:
    std::string command_;
    json inputs_ = json::object();
    json results_ = json::object();
};

// Prints the report as JSON (--json) or as "key: value" lines.
void emit(const Report& report, const Options& opts, std::ostream& out) {
    const json doc = report.finish();
    if (opts.json) {
        out << doc.dump(2) << '\n';
        return;
    }
    out << doc.at("command").get<std::string>() << '\n';
    for (const auto& [key, value] : doc.at("results").items()) out << "  " << key << ": " << value.dump() << '\n';
}

json load_input(const std::string& path, const char* name, Report& report) {
    if (path.empty()) throw ParseError(std::string("--") + name + " is required");
    LoadedFile file = load_json_file(path);
    report.inputs()[name] = file.digest;
    return std::move(file.doc);
}

Matrix load_matrix(const std::string& path, const char* name, Report& report) {
    return matrix_from_json(load_input(path, name, report));
}

// Shape of a Wigner function: a matrix file, or the G of a Gaussian-state document.
WignerGaussian load_shape(const std::string& path, const char* name, Report& report, double hbar) {
    const json doc = load_input(path, name, report);
    if (is_gaussian_document(doc)) return wigner_matrix(gaussian_from_json(doc, hbar));
    return WignerGaussian(matrix_from_json(doc), hbar);
}

SymplecticPlane parse_plane(const std::string& spec, std::size_t n, Report& report) {
    report.inputs()["plane"] = spec;
    std::size_t pos = 0;
    unsigned long long index = 0;
    bool numeric = !spec.empty();
    try {
        index = std::stoull(spec, &pos);
        numeric = pos == spec.size();
    } catch (const std::exception&) {
        numeric = false;
    }
    if (numeric) return symplectic_plane_coordinate(n, static_cast<std::size_t>(index));

    LoadedFile file = load_json_file(spec);
    report.inputs()["plane"] = file.digest;
    const Matrix b = matrix_from_json(file.doc);
    if (b.cols() != 2 || b.rows() != 2 * n) {
        throw Error(ErrorKind::DimensionMismatch, "plane file must be a " + std::to_string(2 * n) + "x2 basis");
    }
    return make_plane(b.col(0), b.col(1));
}

json spectrum_json(const SymplecticSpectrum& s) { return json(s.values); }

void write_or_print(const Options& opts, const std::string& text, Report& report, std::ostream& out) {
    if (opts.out.empty()) {
        out << text;
        return;
    }
    write_text_file(opts.out, text);
    report.results()["written"] = fnv1a_digest(text);
    emit(report, opts, out);
}

std::size_t checked_dof(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "--n must be positive");
    if (n > kMaxDof) {
        throw Error(ErrorKind::DimensionCap, "--n " + std::to_string(n) + " exceeds the cap " + std::to_string(kMaxDof));
    }
    return n;
}

// ---------------------------------------------------------------- commands

void cmd_spectrum(const Options& o, std::ostream& out) {
    Report r("spectrum", o);
    const Ellipsoid e(load_matrix(o.matrix, "matrix", r), o.hbar);
    const SymplecticSpectrum spec = symplectic_spectrum(e.f());
    json radii = json::array();
    for (auto it = spec.values.rbegin(); it != spec.values.rend(); ++it) radii.push_back(std::sqrt(o.hbar / *it));
    r.results()["spectrum"] = spectrum_json(spec);
    r.results()["radii"] = radii;
    r.results()["capacity"] = gromov_width(e);
    r.results()["admissible"] = is_admissible(e);
    emit(r, o, out);
}

void cmd_williamson(const Options& o, std::ostream& out) {
    Report r("williamson", o);
    const Matrix m = load_matrix(o.matrix, "matrix", r);
    const WilliamsonForm w = williamson_diagonalize(m);
    r.results()["spectrum"] = spectrum_json(w.spectrum);
    r.results()["d"] = matrix_to_json(w.d());
    r.results()["s"] = matrix_to_json(w.s);
    r.results()["reconstruction_residual"] = max_abs_diff(w.reconstruct(), m);
    r.results()["symplectic_residual"] = is_symplectic(w.s).residual;
    if (!o.out.empty()) write_text_file(o.out, matrix_to_json(w.s).dump() + "\n");
    emit(r, o, out);
}

void cmd_blob_check(const Options& o, std::ostream& out) {
    Report r("blob check", o);
    const Ellipsoid e(load_matrix(o.matrix, "matrix", r), o.hbar);
    r.results()["blob"] = is_quantum_blob(e);
    r.results()["spectrum"] = spectrum_json(symplectic_spectrum(e.f()));
    r.results()["admissible"] = is_admissible(e);
    r.results()["gromov_width"] = gromov_width(e);
    emit(r, o, out);
}

void cmd_blob_area(const Options& o, std::ostream& out, bool section) {
    Report r(section ? "blob section" : "blob project", o);
    const Ellipsoid e(load_matrix(o.matrix, "matrix", r), o.hbar);
    const SymplecticPlane plane = parse_plane(o.plane, e.dof(), r);
    const double area = section ? section_area(e, plane) : projection_area(e, plane);
    r.results()["area"] = area;
    r.results()["area_over_pi_hbar"] = area / (kPi * o.hbar);
    r.results()["plane_omega"] = plane.omega();
    emit(r, o, out);
}

void cmd_blob_volume(const Options& o, std::ostream& out) {
    Report r("blob volume", o);
    std::size_t n = 0;
    if (!o.matrix.empty()) {
        const QuantumBlob q = blob_from_ellipsoid(Ellipsoid(load_matrix(o.matrix, "matrix", r), o.hbar));
        n = q.dof();
        r.results()["volume"] = blob_volume(q);
    } else {
        n = checked_dof(o.n);
        r.inputs()["n"] = n;
        r.results()["volume"] = blob_volume(QuantumBlob(Matrix::identity(2 * n), o.hbar));
    }
    r.results()["dof"] = n;
    r.results()["quant_manifold_dim"] = quant_manifold_dim(n);
    emit(r, o, out);
}

void cmd_blob_companion(const Options& o, std::ostream& out) {
    Report r("blob companion", o);
    const Ellipsoid e(load_matrix(o.matrix, "matrix", r), o.hbar);
    const QuantumBlob q = companion_blob(e);
    r.results()["s"] = matrix_to_json(q.s());
    r.results()["companion_f"] = matrix_to_json(blob_to_ellipsoid(q).f());
    r.results()["gromov_width"] = gromov_width(e);
    if (!o.out.empty()) write_text_file(o.out, matrix_to_json(q.s()).dump() + "\n");
    emit(r, o, out);
}

void cmd_blob_subspace(const Options& o, std::ostream& out) {
    Report r("blob subspace", o);
    const QuantumBlob q = blob_from_ellipsoid(Ellipsoid(load_matrix(o.matrix, "matrix", r), o.hbar));
    r.inputs()["indices"] = o.indices;
    const Ellipsoid section = section_ellipsoid(blob_to_ellipsoid(q), o.indices);
    r.results()["section_f"] = matrix_to_json(section.f());
    r.results()["spectrum"] = spectrum_json(symplectic_spectrum(section.f()));
    const QuantumBlob sub = coordinate_subspace_section(q, o.indices);
    r.results()["blob"] = true;
    r.results()["s"] = matrix_to_json(sub.s());
    emit(r, o, out);
}

void cmd_gaussian_from_blob(const Options& o, std::ostream& out) {
    Report r("gaussian from-blob", o);
    const QuantumBlob q = blob_from_ellipsoid(Ellipsoid(load_matrix(o.matrix, "matrix", r), o.hbar));
    const GaussianPureState psi = gaussian_from_blob(q);
    r.results()["x"] = matrix_to_json(psi.x());
    r.results()["y"] = matrix_to_json(psi.y());
    if (!o.out.empty()) write_text_file(o.out, gaussian_to_json(psi).dump() + "\n");
    emit(r, o, out);
}

void cmd_gaussian_to_blob(const Options& o, std::ostream& out) {
    Report r("gaussian to-blob", o);
    const GaussianPureState psi = gaussian_from_json(load_input(o.matrix, "matrix", r), o.hbar);
    const QuantumBlob q = blob_from_gaussian(psi);
    const Matrix f = blob_to_ellipsoid(q).f();
    r.results()["s"] = matrix_to_json(q.s());
    r.results()["f"] = matrix_to_json(f);
    if (!o.out.empty()) write_text_file(o.out, matrix_to_json(f).dump() + "\n");
    emit(r, o, out);
}

void cmd_gaussian_wigner(const Options& o, std::ostream& out) {
    Report r("gaussian wigner", o);
    const json doc = load_input(o.matrix, "matrix", r);
    std::optional<GaussianPureState> psi;
    if (is_gaussian_document(doc)) psi = gaussian_from_json(doc, o.hbar);
    const WignerGaussian w = psi ? wigner_matrix(*psi) : WignerGaussian(matrix_from_json(doc), o.hbar);
    const PhasePoint z = o.point.empty() ? w.center() : PhasePoint{o.point};
    if (z.coords.size() != w.shape().rows()) {
        throw Error(ErrorKind::DimensionMismatch, "--point needs " + std::to_string(w.shape().rows()) + " coordinates");
    }
    r.inputs()["point"] = z.coords;
    r.results()["g"] = matrix_to_json(w.shape());
    r.results()["normalization"] = w.normalization();
    r.results()["pure"] = w.is_pure();
    r.results()["value"] = wigner_eval(w, z);
    if (psi && psi->dof() == 1) r.results()["quadrature_value"] = wigner_quadrature_oracle(*psi, z);
    emit(r, o, out);
}

void cmd_gaussian_covariance(const Options& o, std::ostream& out) {
    Report r("gaussian covariance", o);
    const WignerGaussian w = load_shape(o.matrix, "matrix", r, o.hbar);
    const CovarianceMatrix c = covariance(w);
    r.results()["sigma"] = matrix_to_json(c.sigma);
    r.results()["j_sigma_moduli"] = jm_moduli(c.sigma);
    r.results()["pure"] = w.is_pure();
    emit(r, o, out);
}

void cmd_gaussian_squeezed(const Options& o, std::ostream& out) {
    Report r("gaussian squeezed", o);
    const WignerGaussian w = load_shape(o.matrix, "matrix", r, o.hbar);
    r.results()["squeezed"] = is_squeezed(covariance(w));
    r.results()["squeezed_ellipsoid"] = is_squeezed_ellipsoid(w.ellipsoid());
    r.results()["min_sigma_eigenvalue"] = eigh(covariance(w).sigma).values.front();
    emit(r, o, out);
}

void cmd_gaussian_smooth(const Options& o, std::ostream& out) {
    Report r("gaussian smooth", o);
    const WignerGaussian w = load_shape(o.matrix, "matrix", r, o.hbar);
    const QuantumBlob q = blob_from_ellipsoid(Ellipsoid(load_matrix(o.matrix2, "matrix2", r), o.hbar));
    const WignerGaussian s = smooth(w, q);
    r.results()["f"] = matrix_to_json(s.shape());
    r.results()["spectrum"] = spectrum_json(symplectic_spectrum(s.shape()));
    r.results()["normalization"] = s.normalization();
    r.results()["admissible"] = is_admissible(s.ellipsoid());
    r.results()["pure"] = s.is_pure();
    emit(r, o, out);
}

void cmd_gaussian_debruijn(const Options& o, std::ostream& out) {
    Report r("gaussian debruijn", o);
    const std::size_t n = checked_dof(o.n);
    r.inputs()["alpha"] = o.alpha;
    r.inputs()["beta"] = o.beta;
    r.inputs()["n"] = n;
    r.results()["admissible"] = debruijn_admissible(o.alpha, o.beta, n, o.hbar);
    r.results()["alpha_beta"] = o.alpha * o.beta;
    emit(r, o, out);
}

void cmd_plot_section(const Options& o, std::ostream& out) {
    Report r("plot-section", o);
    const Ellipsoid e(load_matrix(o.matrix, "matrix", r), o.hbar);
    const SymplecticPlane plane = parse_plane(o.plane, e.dof(), r);
    r.inputs()["samples"] = o.samples;
    const std::vector<BoundarySample> pts = section_boundary(e, plane, o.samples);
    const double area = section_area(e, plane);

    std::string csv = "theta,u,v\n";
    char line[128];
    for (const BoundarySample& p : pts) {
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g\n", round12(p.theta), round12(p.u), round12(p.v));
        csv += line;
    }
    std::snprintf(line, sizeof line, "# area=%.12g\n", area);
    csv += line;

    double shoelace = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const BoundarySample& a = pts[k];
        const BoundarySample& b = pts[(k + 1) % pts.size()];
        shoelace += a.u * b.v - b.u * a.v;
    }
    r.results()["area"] = area;
    r.results()["polygon_area"] = 0.5 * std::abs(shoelace);
    write_or_print(o, csv, r, out);
}

void cmd_random(const Options& o, std::ostream& out, const std::string& kind) {
    Report r("random " + kind, o);
    const std::size_t n = checked_dof(o.n);
    r.inputs()["n"] = n;
    r.inputs()["seed"] = o.seed;
    json doc;
    if (kind == "spd") {
        doc = matrix_to_json(random_spd(2 * n, o.seed));
    } else if (kind == "symplectic") {
        doc = matrix_to_json(random_symplectic(n, o.seed));
    } else if (kind == "blob") {
        doc = matrix_to_json(blob_to_ellipsoid(QuantumBlob(random_symplectic(n, o.seed), o.hbar)).f());
    } else {
        doc = gaussian_to_json(random_pure_state(n, o.seed, o.hbar));
    }
    write_or_print(o, doc.dump() + "\n", r, out);
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* app, Options& o) {
    app->add_option("--matrix", o.matrix, "Input JSON file (matrix or Gaussian-state document)");
    app->add_option("--matrix2", o.matrix2, "Second input JSON file");
    app->add_option("--hbar", o.hbar, "Value of hbar (default 1)");
    app->add_option("--plane", o.plane, "Coordinate plane index j or a 2n x 2 basis file");
    app->add_option("--samples", o.samples, "Number of boundary samples");
    app->add_option("--seed", o.seed, "Seed for random generators");
    app->add_option("--out", o.out, "Output file");
    app->add_flag("--json", o.json, "Print the report as JSON");
    app->add_option("--n", o.n, "Degrees of freedom");
    app->add_option("--indices", o.indices, "1-based coordinate indices, comma separated")->delimiter(',');
    app->add_option("--point", o.point, "Phase-space point x_1..x_n,p_1..p_n")->delimiter(',');
}

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Options& o,
               std::function<void()> action) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_common(sub, o);
    sub->callback(std::move(action));
    return sub;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSymmetric:
        case ErrorKind::NotPositiveDefinite:
        case ErrorKind::NotSymplectic:
        case ErrorKind::OddDimension:
        case ErrorKind::NonFinite:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::DegeneratePlane:
            return kExitInvariant;
        default:
            return kExitDomain;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Symplectic phase-space toolkit: Williamson forms, quantum blobs, Gaussian states", "symblob"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    leaf(&app, "spectrum", "Symplectic spectrum, Williamson radii and capacity", o, [&] { cmd_spectrum(o, out); });
    leaf(&app, "williamson", "Williamson normal form M = S^T D S", o, [&] { cmd_williamson(o, out); });

    CLI::App* blob = app.add_subcommand("blob", "Quantum blob operations");
    blob->require_subcommand(1);
    leaf(blob, "check", "Recognize a quantum blob", o, [&] { cmd_blob_check(o, out); });
    leaf(blob, "section", "Area of a planar section", o, [&] { cmd_blob_area(o, out, true); });
    leaf(blob, "project", "Area of a planar projection", o, [&] { cmd_blob_area(o, out, false); });
    leaf(blob, "volume", "Blob volume and dim Quant(n)", o, [&] { cmd_blob_volume(o, out); });
    leaf(blob, "companion", "Companion blob of a capacity pi*hbar ellipsoid", o, [&] { cmd_blob_companion(o, out); });
    leaf(blob, "subspace", "Section by a coordinate symplectic subspace", o, [&] { cmd_blob_subspace(o, out); });

    CLI::App* gauss = app.add_subcommand("gaussian", "Gaussian state operations");
    gauss->require_subcommand(1);
    leaf(gauss, "from-blob", "Gaussian state of a blob", o, [&] { cmd_gaussian_from_blob(o, out); });
    leaf(gauss, "to-blob", "Blob of a Gaussian state", o, [&] { cmd_gaussian_to_blob(o, out); });
    leaf(gauss, "wigner", "Evaluate the Wigner function", o, [&] { cmd_gaussian_wigner(o, out); });
    leaf(gauss, "covariance", "Covariance matrix", o, [&] { cmd_gaussian_covariance(o, out); });
    leaf(gauss, "squeezed", "Squeezing tests", o, [&] { cmd_gaussian_squeezed(o, out); });
    leaf(gauss, "smooth", "Smooth a Wigner function by a blob", o, [&] { cmd_gaussian_smooth(o, out); });
    CLI::App* debruijn = leaf(gauss, "debruijn", "Admissibility of |x|^2/a^2 + |p|^2/b^2 <= hbar", o,
                              [&] { cmd_gaussian_debruijn(o, out); });
    debruijn->add_option("alpha", o.alpha, "Position semi-axis factor")->required();
    debruijn->add_option("beta", o.beta, "Momentum semi-axis factor")->required();

    leaf(&app, "plot-section", "Boundary of a planar section as CSV", o, [&] { cmd_plot_section(o, out); });

    CLI::App* random = app.add_subcommand("random", "Seeded generators");
    random->require_subcommand(1);
    for (const char* kind : {"spd", "symplectic", "blob", "gaussian"}) {
        const std::string k = kind;
        leaf(random, k, "Random " + k, o, [&o, &out, k] { cmd_random(o, out, k); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "symblob: " << e.what() << '\n';
        return kExitParse;
    } catch (const ParseError& e) {
        err << "symblob: parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        err << "symblob: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const json::exception& e) {
        err << "symblob: parse error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}

}  // namespace symblob::cli
