// Copyright 2026 The qcert authors
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

#include "qcert/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcert {

namespace {

using nlohmann::json;

json matrix_to_json_value(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json_value(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ParseError(std::string(what) + ": matrix must be a nonempty row list");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw ParseError(std::string(what) + ": empty matrix row");
  Matrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(std::string(what) + ": ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError(std::string(what) + ": entries must be [re, im]");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string(what) + ": invalid JSON");
  return j;
}

int get_count(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string(what) + ": missing integer field '" + key + "'");
  const int v = j[key].get<int>();
  if (v < 1) throw ParseError(std::string(what) + ": '" + key + "' must be >= 1");
  return v;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

KrausChannel channel_from_json(const std::string& text) {
  const json j = parse(text, "channel");
  KrausChannel c;
  c.dim_in = get_count(j, "dim_in", "channel");
  c.dim_out = get_count(j, "dim_out", "channel");
  if (!j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
    throw ParseError("channel: missing nonempty 'kraus' list");
  for (const json& k : j["kraus"]) {
    Matrix m = matrix_from_json_value(k, "channel");
    if (m.rows() != c.dim_out || m.cols() != c.dim_in)
      throw ParseError("channel: Kraus operator shape mismatch");
    c.kraus.push_back(std::move(m));
  }
  return c;
}

std::string channel_to_json(const KrausChannel& c) {
  json j;
  j["dim_in"] = c.dim_in;
  j["dim_out"] = c.dim_out;
  j["kraus"] = json::array();
  for (const Matrix& k : c.kraus) j["kraus"].push_back(matrix_to_json_value(k));
  return j.dump(2) + "\n";
}

KrausChannel load_channel(const std::string& path) {
  return channel_from_json(read_file(path));
}

void save_channel(const std::string& path, const KrausChannel& c) {
  write_file(path, channel_to_json(c));
}

SubsystemDecomposition decomposition_from_json(const std::string& text) {
  const json j = parse(text, "decomposition");
  SubsystemDecomposition d;
  d.dim_A = get_count(j, "dim_A", "decomposition");
  d.dim_B = get_count(j, "dim_B", "decomposition");
  if (!j.contains("embed")) throw ParseError("decomposition: missing 'embed'");
  d.embed = matrix_from_json_value(j["embed"], "decomposition");
  if (d.embed.cols() != d.dim_A * d.dim_B)
    throw ParseError("decomposition: embed has wrong number of columns");
  return d;
}

std::string decomposition_to_json(const SubsystemDecomposition& d) {
  json j;
  j["dim_A"] = d.dim_A;
  j["dim_B"] = d.dim_B;
  j["embed"] = matrix_to_json_value(d.embed);
  return j.dump(2) + "\n";
}

SubsystemDecomposition load_decomposition(const std::string& path) {
  return decomposition_from_json(read_file(path));
}

StinespringIsometry isometry_from_json(const std::string& text) {
  const json j = parse(text, "isometry");
  StinespringIsometry v;
  v.dim_in = get_count(j, "dim_in", "isometry");
  v.dim_out = get_count(j, "dim_out", "isometry");
  v.dim_env = get_count(j, "dim_env", "isometry");
  if (!j.contains("v")) throw ParseError("isometry: missing 'v'");
  v.v = matrix_from_json_value(j["v"], "isometry");
  if (v.v.rows() != v.dim_out * v.dim_env || v.v.cols() != v.dim_in)
    throw ParseError("isometry: matrix shape mismatch");
  return v;
}

std::string isometry_to_json(const StinespringIsometry& v) {
  json j;
  j["dim_in"] = v.dim_in;
  j["dim_out"] = v.dim_out;
  j["dim_env"] = v.dim_env;
  j["v"] = matrix_to_json_value(v.v);
  return j.dump(2) + "\n";
}

ThresholdScheme scheme_from_json(const std::string& text) {
  const json j = parse(text, "scheme");
  ThresholdScheme s;
  s.k = get_count(j, "k", "scheme");
  s.n = get_count(j, "n", "scheme");
  s.secret_dim = get_count(j, "secret_dim", "scheme");
  if (!j.contains("share_dims") || !j["share_dims"].is_array())
    throw ParseError("scheme: missing 'share_dims' list");
  for (const json& d : j["share_dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw ParseError("scheme: share dims must be positive integers");
    s.share_dims.push_back(d.get<int>());
  }
  if (!j.contains("encoder")) throw ParseError("scheme: missing 'encoder'");
  s.encoder = matrix_from_json_value(j["encoder"], "scheme");
  return s;
}

std::string scheme_to_json(const ThresholdScheme& s) {
  json j;
  j["k"] = s.k;
  j["n"] = s.n;
  j["secret_dim"] = s.secret_dim;
  j["share_dims"] = s.share_dims;
  j["encoder"] = matrix_to_json_value(s.encoder);
  return j.dump(2) + "\n";
}

ThresholdScheme load_scheme(const std::string& path) {
  return scheme_from_json(read_file(path));
}

void save_scheme(const std::string& path, const ThresholdScheme& s) {
  write_file(path, scheme_to_json(s));
}

SubsystemDecomposition load_subspace_basis(const std::string& path) {
  const json j = parse(read_file(path), "basis");
  if (!j.is_array() || j.empty())
    throw ParseError("basis: expected a nonempty list of vectors");
  std::vector<Vector> basis;
  for (const json& vec : j) {
    if (!vec.is_array() || vec.empty())
      throw ParseError("basis: each vector must be a nonempty entry list");
    Vector v(vec.size());
    for (std::size_t i = 0; i < vec.size(); ++i) {
      const json& e = vec[i];
      if (!e.is_array() || e.size() != 2)
        throw ParseError("basis: entries must be [re, im]");
      v(i) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    basis.push_back(std::move(v));
  }
  return subspace_decomposition(basis);
}

}  // namespace qcert
