#ifndef ORDMEAN_IO_HPP
#define ORDMEAN_IO_HPP

#include "ordmean/means.hpp"

#include <string>
#include <vector>

namespace ordmean {

/// Shortest form of "%.17g": 17 significant digits, round-trips bit-exactly.
std::string format_double(double x);

/// {"dim": n, "rows": [[...], ...]} followed by a newline.
std::string matrix_to_json(const SymMatrix& a);

/// Parses the matrix literal format. Rows must form a square, finite,
/// symmetric (to 1e-12 relative) array whose size matches "dim".
/// Throws ParseError.
SymMatrix parse_matrix(const std::string& text);

/// JSON array of positive numbers. Throws ParseError.
WeightVector parse_weights(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

SymMatrix read_matrix_file(const std::string& path);
WeightVector read_weights_file(const std::string& path);

}  // namespace ordmean

#endif  // ORDMEAN_IO_HPP
