#pragma once

// JSON and CSV plumbing shared by the file formats. Complex matrices are
// stored as nested arrays [[[re, im], ...], ...]; the dimension is implicit
// from the shape. Reals survive a round trip bit-exactly.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "uniterp/errors.hpp"
#include "uniterp/linalg.hpp"

namespace uniterp {

using json = nlohmann::json;

inline json cmat_to_json(const CMat& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      row.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CMat cmat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw IoError("matrix: expected a non-empty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  CMat a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw IoError("matrix: ragged rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const json& entry = row.at(static_cast<std::size_t>(k));
      if (!entry.is_array() || entry.size() != 2) {
        throw IoError("matrix: entry is not an [re, im] pair");
      }
      a(i, k) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  if (!a.allFinite()) {
    throw IoError("matrix: non-finite entry");
  }
  return a;
}

inline json rvec_to_json(const RVec& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

inline RVec rvec_from_json(const json& j) {
  RVec v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = j.at(static_cast<std::size_t>(i)).get<double>();
  }
  return v;
}

inline json rmat_to_json(const RMat& m) {
  // Row-major flattened, shape carried alongside by the caller.
  json arr = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) arr.push_back(m(i, k));
  }
  return arr;
}

inline RMat rmat_from_json(const json& j, Eigen::Index rows, Eigen::Index cols) {
  if (static_cast<Eigen::Index>(j.size()) != rows * cols) {
    throw IoError("matrix: flat array length does not match shape");
  }
  RMat m(rows, cols);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = j.at(idx++).get<double>();
  }
  return m;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

inline json parse_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw IoError("malformed JSON in " + path.string());
  }
  return j;
}

/// Shortest round-trip decimal for a double (17 significant digits at most).
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace uniterp
