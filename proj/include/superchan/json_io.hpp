// Copyright 2026 The superchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON formats.
//
//   matrix     [[[re, im], ...], ...]            rows of complex entries
//   state      matrix | {"ket": [[re, im], ...]}
//   channel    {"dim_in", "dim_out", "kraus": [matrix, ...]}
//   extension  channel + {"amplitudes": [[re, im], ...]}
//   comb       channel + {"steps": [[in, out], ...]}
//   descriptor {"kind": "...", "params": {...}}
//   poset      {"parties": [...], "leq": [["A", "B"], ...]}

#ifndef SUPERCHAN_JSON_IO_HPP
#define SUPERCHAN_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "superchan/capacity.hpp"
#include "superchan/supermaps.hpp"
#include "superchan/vacuum.hpp"

namespace superchan::json {

using nlohmann::json;

/// Structurally wrong JSON (missing field, wrong type, ragged matrix).
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

namespace detail {

inline const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

inline std::size_t positive_count(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
    throw FormatError(std::string("field '") + name + "' must be a positive integer");
  return v.get<std::size_t>();
}

}  // namespace detail

inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("complex entry must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

inline CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw FormatError("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

inline json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline DensityMatrix state_from_json(const json& j) {
  if (j.is_object() && j.contains("ket")) {
    const json& k = j.at("ket");
    if (!k.is_array() || k.empty()) throw FormatError("ket must be a non-empty array");
    CVector v(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) v(i) = complex_from_json(k[i]);
    if (v.norm() == 0.0) throw ValidationError("ket has zero norm");
    return DensityMatrix::pure(v / v.norm());
  }
  return DensityMatrix(matrix_from_json(j));
}

inline json state_to_json(const DensityMatrix& s) { return matrix_to_json(s.matrix()); }

inline Channel channel_from_json(const json& j) {
  const std::size_t din = detail::positive_count(j, "dim_in");
  const std::size_t dout = detail::positive_count(j, "dim_out");
  const json& ks = detail::field(j, "kraus");
  if (!ks.is_array() || ks.empty()) throw FormatError("'kraus' must be a non-empty array");
  std::vector<CMatrix> kraus;
  for (const auto& k : ks) {
    CMatrix m = matrix_from_json(k);
    if (static_cast<std::size_t>(m.rows()) != dout || static_cast<std::size_t>(m.cols()) != din)
      throw DimensionError("Kraus operator is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " + std::to_string(dout) +
                           "x" + std::to_string(din));
    kraus.push_back(std::move(m));
  }
  return Channel::from_kraus(std::move(kraus));
}

inline json channel_to_json(const Channel& ch) {
  json ks = json::array();
  for (const auto& k : ch.kraus()) ks.push_back(matrix_to_json(k));
  return {{"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}, {"kraus", std::move(ks)}};
}

inline VacuumExtendedChannel extension_from_json(const json& j) {
  Channel base = channel_from_json(j);
  const json& a = detail::field(j, "amplitudes");
  if (!a.is_array()) throw FormatError("'amplitudes' must be an array");
  std::vector<Complex> amps;
  for (const auto& z : a) amps.push_back(complex_from_json(z));
  return VacuumExtendedChannel(std::move(base), std::move(amps));
}

inline json extension_to_json(const VacuumExtendedChannel& v) {
  json j = channel_to_json(v.base());
  json a = json::array();
  for (const auto& z : v.amplitudes()) a.push_back(complex_to_json(z));
  j["amplitudes"] = std::move(a);
  return j;
}

inline MultiPartiteChannel comb_from_json(const json& j) {
  Channel ch = channel_from_json(j);
  const json& s = detail::field(j, "steps");
  if (!s.is_array() || s.empty()) throw FormatError("'steps' must be a non-empty array");
  std::vector<StepDims> steps;
  for (const auto& p : s) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() ||
        !p[1].is_number_unsigned())
      throw FormatError("each step must be [in_dim, out_dim]");
    steps.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
  }
  return MultiPartiteChannel(std::move(ch), std::move(steps));
}

inline SupermapDescriptor descriptor_from_json(const json& j) {
  const json& kind = detail::field(j, "kind");
  if (!kind.is_string()) throw FormatError("'kind' must be a string");
  SupermapParams p;
  if (j.contains("params")) {
    const json& q = j.at("params");
    if (!q.is_object()) throw FormatError("'params' must be an object");
    if (q.contains("omega")) p.omega = state_from_json(q.at("omega"));
    if (q.contains("xi")) p.xi = state_from_json(q.at("xi"));
    if (q.contains("phi")) p.phi = state_from_json(q.at("phi"));
    if (q.contains("e")) p.e = channel_from_json(q.at("e"));
    if (q.contains("r")) p.r = channel_from_json(q.at("r"));
    if (q.contains("d")) p.d = channel_from_json(q.at("d"));
    if (q.contains("m")) p.m = detail::positive_count(q, "m");
    if (q.contains("arity")) p.arity = detail::positive_count(q, "arity");
    if (q.contains("dim")) p.dim = detail::positive_count(q, "dim");
  }
  return SupermapDescriptor(supermap_kind_from_string(kind.get<std::string>()), std::move(p));
}

inline CausalPoset poset_from_json(const json& j) {
  const json& parties = detail::field(j, "parties");
  if (!parties.is_array()) throw FormatError("'parties' must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& p : parties) {
    if (!p.is_string()) throw FormatError("party labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> leq;
  if (j.contains("leq")) {
    for (const auto& pr : j.at("leq")) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        throw FormatError("'leq' entries must be [\"A\", \"B\"] pairs");
      leq.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  return CausalPoset(std::move(labels), leq);
}

inline json ensemble_to_json(const Ensemble& e) {
  json states = json::array();
  for (const auto& s : e.states()) states.push_back(state_to_json(s));
  return {{"probs", e.probs()}, {"states", std::move(states)}};
}

}  // namespace superchan::json

#endif  // SUPERCHAN_JSON_IO_HPP
