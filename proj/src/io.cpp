#include "ordmean/io.hpp"

#include "ordmean/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ordmean {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_to_json(const SymMatrix& a) {
  std::string out = "{\"dim\": " + std::to_string(a.dim()) + ", \"rows\": [";
  for (int i = 0; i < a.dim(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (int j = 0; j < a.dim(); ++j) {
      if (j > 0) out += ", ";
      out += format_double(a(i, j));
    }
    out += "]";
  }
  out += "]}\n";
  return out;
}

SymMatrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows")) {
    throw ParseError("matrix file: expected an object with \"dim\" and \"rows\"");
  }
  if (!j["dim"].is_number_integer()) throw ParseError("matrix file: \"dim\" must be an integer");
  const auto dim = j["dim"].get<long long>();
  if (dim < 1 || dim > kMaxDim) throw ParseError("matrix file: \"dim\" must lie in [1, 16]");
  const auto& rows = j["rows"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != dim) {
    throw ParseError("matrix file: \"rows\" must hold dim rows");
  }
  Matrix m(dim, dim);
  for (long long r = 0; r < dim; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long long>(row.size()) != dim) {
      throw ParseError("matrix file: row " + std::to_string(r) + " must hold dim entries");
    }
    for (long long c = 0; c < dim; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw ParseError("matrix file: non-numeric entry");
      m(r, c) = v.get<double>();
      if (!std::isfinite(m(r, c))) throw ParseError("matrix file: non-finite entry");
    }
  }
  const double scale = m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ParseError("matrix file: matrix is not symmetric");
  }
  return SymMatrix(m);
}

WeightVector parse_weights(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("weights file: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw ParseError("weights file: expected a non-empty JSON array");
  std::vector<double> w;
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError("weights file: non-numeric entry");
    w.push_back(v.get<double>());
  }
  try {
    return WeightVector(std::move(w));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("weights file: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

SymMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_text_file(path)); }

WeightVector read_weights_file(const std::string& path) { return parse_weights(read_text_file(path)); }

}  // namespace ordmean
