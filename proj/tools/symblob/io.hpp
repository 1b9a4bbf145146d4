#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "symblob/gaussian_states.hpp"
#include "symblob/matrix.hpp"

namespace symblob::cli {

using json = nlohmann::json;

/// Malformed input file: unreadable, invalid JSON, or wrong schema (exit code 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LoadedFile {
    json doc;
    std::string digest;  ///< "fnv1a64:<16 hex digits>" of the raw bytes
};

LoadedFile load_json_file(const std::string& path);

/// {"rows": R, "cols": C, "data": [...]} row-major.
Matrix matrix_from_json(const json& j);
json matrix_to_json(const Matrix& m);

/// {"X": MatrixFile, "Y": MatrixFile} with an optional "center": [...].
bool is_gaussian_document(const json& j);
GaussianPureState gaussian_from_json(const json& j, double hbar);
json gaussian_to_json(const GaussianPureState& psi);

std::string fnv1a_digest(const std::string& bytes);

/// Doubles rounded to 12 significant digits and -0 folded into 0, recursively.
json rounded(const json& j);
double round12(double x);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace symblob::cli
