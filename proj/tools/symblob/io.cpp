#include "io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace symblob::cli {

LoadedFile load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();
    json doc = json::parse(bytes, nullptr, false);
    if (doc.is_discarded()) throw ParseError("'" + path + "' is not valid JSON");
    return LoadedFile{std::move(doc), fnv1a_digest(bytes)};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw ParseError("matrix document needs \"rows\", \"cols\" and \"data\"");
    }
    const json& rows = j.at("rows");
    const json& cols = j.at("cols");
    const json& data = j.at("data");
    if (!rows.is_number_unsigned() || !cols.is_number_unsigned() || rows.get<std::size_t>() == 0 ||
        cols.get<std::size_t>() == 0) {
        throw ParseError("\"rows\" and \"cols\" must be positive integers");
    }
    if (!data.is_array()) throw ParseError("\"data\" must be an array");
    const std::size_t r = rows.get<std::size_t>();
    const std::size_t c = cols.get<std::size_t>();
    if (data.size() != r * c) {
        throw ParseError("\"data\" has " + std::to_string(data.size()) + " entries, expected rows*cols = " +
                         std::to_string(r * c));
    }
    Vector values;
    values.reserve(data.size());
    for (const json& x : data) {
        if (!x.is_number()) throw ParseError("\"data\" entries must be numbers");
        values.push_back(x.get<double>());
    }
    return Matrix(r, c, std::move(values));
}

json matrix_to_json(const Matrix& m) {
    json data = json::array();
    for (double x : m.data()) data.push_back(x);
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

bool is_gaussian_document(const json& j) { return j.is_object() && j.contains("X"); }

GaussianPureState gaussian_from_json(const json& j, double hbar) {
    if (!j.contains("X") || !j.contains("Y")) throw ParseError("Gaussian document needs \"X\" and \"Y\"");
    std::optional<PhasePoint> center;
    if (j.contains("center")) {
        if (!j.at("center").is_array()) throw ParseError("\"center\" must be an array");
        PhasePoint c;
        for (const json& x : j.at("center")) {
            if (!x.is_number()) throw ParseError("\"center\" entries must be numbers");
            c.coords.push_back(x.get<double>());
        }
        center = std::move(c);
    }
    return GaussianPureState(matrix_from_json(j.at("X")), matrix_from_json(j.at("Y")), hbar, std::move(center));
}

json gaussian_to_json(const GaussianPureState& psi) {
    return json{{"X", matrix_to_json(psi.x())}, {"Y", matrix_to_json(psi.y())}, {"center", psi.center().coords}};
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

double round12(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json rounded(const json& j) {
    if (j.is_number_float()) return round12(j.get<double>());
    if (j.is_array() || j.is_object()) {
        json out = j;
        for (auto& item : out) item = rounded(item);
        return out;
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
    if (!out) throw ParseError("failed writing '" + path + "'");
}

}  // namespace symblob::cli
