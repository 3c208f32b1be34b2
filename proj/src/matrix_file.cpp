// Copyright 2026 The tripent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tripent/matrix_file.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "tripent/error.hpp"

namespace tripent {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::Parse, "matrix file: " + what);
}

std::string expected_basis(int dim) { return dim == 8 ? "ABC" : "XY"; }

double read_real(const json& v, const char* what) {
  if (!v.is_number()) fail(std::string(what) + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(std::string(what) + " is not finite");
  return d;
}

std::string number(double v) { return json(v).dump(); }

template <std::size_t N>
MatrixFile from_matrix(const Matrix<N>& m, std::optional<std::string> label) {
  MatrixFile f;
  f.dim = static_cast<int>(N);
  f.entries.assign(m.data().begin(), m.data().end());
  f.basis = expected_basis(f.dim);
  f.label = std::move(label);
  return f;
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level is not an object");

  MatrixFile f;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    fail("missing integer \"dim\"");
  f.dim = doc["dim"].get<int>();
  if (f.dim != 4 && f.dim != 8) fail("dim must be 4 or 8");

  if (!doc.contains("basis") || !doc["basis"].is_string())
    fail("missing string \"basis\"");
  f.basis = doc["basis"].get<std::string>();
  if (f.basis != expected_basis(f.dim))
    fail("basis \"" + f.basis + "\" does not match dim " + std::to_string(f.dim));

  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail("\"label\" is not a string");
    f.label = doc["label"].get<std::string>();
  }

  if (!doc.contains("entries") || !doc["entries"].is_array())
    fail("missing array \"entries\"");
  const json& rows = doc["entries"];
  if (rows.size() != static_cast<std::size_t>(f.dim))
    fail("expected " + std::to_string(f.dim) + " rows");
  f.entries.reserve(static_cast<std::size_t>(f.dim * f.dim));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(f.dim))
      fail("row " + std::to_string(r) + " must have " + std::to_string(f.dim) +
           " entries");
    for (const json& z : row) {
      if (!z.is_array() || z.size() != 2)
        fail("entry in row " + std::to_string(r) + " is not a [re, im] pair");
      f.entries.emplace_back(read_real(z[0], "real part"),
                             read_real(z[1], "imaginary part"));
    }
  }
  return f;
}

std::string serialize(const MatrixFile& file) {
  std::ostringstream os;
  os << "{\n  \"basis\": " << json(file.basis).dump() << ",\n";
  os << "  \"dim\": " << file.dim << ",\n";
  os << "  \"entries\": [\n";
  const std::size_t n = static_cast<std::size_t>(file.dim);
  for (std::size_t r = 0; r < n; ++r) {
    os << "    [";
    for (std::size_t c = 0; c < n; ++c) {
      const Complex& z = file.entries.at(r * n + c);
      os << (c ? ", " : "") << '[' << number(z.real()) << ", "
         << number(z.imag()) << ']';
    }
    os << ']' << (r + 1 < n ? "," : "") << '\n';
  }
  os << "  ]";
  if (file.label) os << ",\n  \"label\": " << json(*file.label).dump();
  os << "\n}\n";
  return os.str();
}

MatrixFile to_matrix_file(const Matrix8& m, std::optional<std::string> label) {
  return from_matrix(m, std::move(label));
}

MatrixFile to_matrix_file(const Matrix4& m, std::optional<std::string> label) {
  return from_matrix(m, std::move(label));
}

template <std::size_t N>
Matrix<N> to_matrix(const MatrixFile& file) {
  if (file.dim != static_cast<int>(N) || file.entries.size() != N * N)
    fail("expected a " + std::to_string(N) + "x" + std::to_string(N) +
         " matrix, got dim " + std::to_string(file.dim));
  Matrix<N> m;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m(r, c) = file.entries[r * N + c];
  return m;
}

template Matrix<4> to_matrix(const MatrixFile&);
template Matrix<8> to_matrix(const MatrixFile&);

}  // namespace tripent
