#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ghx/herm.hpp"

namespace ghx {

using Json = nlohmann::ordered_json;

/// Plain-text matrix format: a dimension line, then n lines of n complex
/// "a+bi" tokens separated by whitespace. Hermitian symmetry is validated;
/// violations are reported with line and column.
HermitianForm parse_matrix(std::istream& in);
HermitianForm parse_matrix_text(const std::string& text);
HermitianForm parse_matrix_file(const std::string& path);

/// 17-significant-digit rendering, round-trip exact for 64-bit floats.
std::string format_double(double v);

/// Matrix in the text format above, every entry as "re+imi" with 17
/// significant digits per part.
std::string format_matrix(const HermitianForm& A);

/// JSON serializer emitting every float with 17 significant digits.
/// Key order follows insertion order; output is deterministic byte for byte.
std::string dump_json17(const Json& j);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ghx
