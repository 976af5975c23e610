#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eaforge/codes.hpp"
#include "eaforge/eaqecc.hpp"
#include "eaforge/grs.hpp"

// JSON wire formats. Object keys are emitted in sorted order and nothing is
// serialized as a float, so a given value always dumps to the same bytes.

namespace eaforge {

using json = nlohmann::json;

namespace detail {

inline const json& require_key(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    fail(errc::parse_error, std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

inline int require_int(const json& j, const char* where) {
  if (!j.is_number_integer())
    fail(errc::parse_error, std::string(where) + ": expected an integer");
  return j.get<int>();
}

inline std::string require_string(const json& j, const char* where) {
  if (!j.is_string())
    fail(errc::parse_error, std::string(where) + ": expected a string");
  return j.get<std::string>();
}

}  // namespace detail

inline json field_to_json(const Field& f) {
  return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

inline const Field& field_from_json(const json& j) {
  int p = detail::require_int(detail::require_key(j, "p", "field"), "field.p");
  int m = detail::require_int(detail::require_key(j, "m", "field"), "field.m");
  const json& mod = detail::require_key(j, "modulus", "field");
  if (!mod.is_array()) fail(errc::parse_error, "field.modulus: expected an array");
  std::vector<int> coeffs;
  for (const auto& c : mod) coeffs.push_back(detail::require_int(c, "field.modulus"));
  return Field::get(p, m, coeffs);
}

inline std::vector<int> codes_from_json(const Field& f, const json& j, const char* where) {
  if (!j.is_array()) fail(errc::parse_error, std::string(where) + ": expected an array");
  std::vector<int> out;
  for (const auto& e : j) {
    int v = detail::require_int(e, where);
    if (v < 0 || v >= f.q())
      fail(errc::parse_error,
           std::string(where) + ": element code " + std::to_string(v) + " is outside the field");
    out.push_back(v);
  }
  return out;
}

inline json mat_entries(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.get(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json mat_to_json(const Mat& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", mat_entries(m)}};
}

inline Mat mat_from_entries(const Field& f, const json& entries, const char* where) {
  if (!entries.is_array() || entries.empty())
    fail(errc::parse_error, std::string(where) + ": expected a nonempty array of rows");
  int rows = (int)entries.size();
  if (!entries[0].is_array() || entries[0].empty())
    fail(errc::parse_error, std::string(where) + ": row 0 must be a nonempty array");
  int cols = (int)entries[0].size();
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || (int)row.size() != cols)
      fail(errc::parse_error, std::string(where) + ": row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(cols));
    for (int j = 0; j < cols; ++j) {
      int v = detail::require_int(row[j], where);
      if (v < 0 || v >= f.q())
        fail(errc::parse_error, std::string(where) + ": entry " + std::to_string(v) + " in row " +
                                    std::to_string(i) + " is outside the field");
      m.set(i, j, v);
    }
  }
  return m;
}

inline Mat mat_from_json(const Field& f, const json& j) {
  Mat m = mat_from_entries(f, detail::require_key(j, "entries", "matrix"), "matrix.entries");
  int rows = detail::require_int(detail::require_key(j, "rows", "matrix"), "matrix.rows");
  int cols = detail::require_int(detail::require_key(j, "cols", "matrix"), "matrix.cols");
  if (rows != m.rows() || cols != m.cols())
    fail(errc::parse_error, "matrix: declared shape disagrees with entries");
  return m;
}

// Code files carry one matrix and say which role it plays.
inline json code_file_json(const Field& f, const std::string& kind, const Mat& m) {
  return json{{"field", field_to_json(f)}, {"kind", kind}, {"matrix", mat_entries(m)}};
}

inline json code_to_json(const LinearCode& c, const std::string& kind = "generator") {
  return code_file_json(*c.f, kind, kind == "parity" ? c.par : c.gen);
}

inline LinearCode code_from_json(const json& j) {
  const Field& f = field_from_json(detail::require_key(j, "field", "code file"));
  std::string kind = detail::require_string(detail::require_key(j, "kind", "code file"),
                                            "code file.kind");
  Mat m = mat_from_entries(f, detail::require_key(j, "matrix", "code file"), "code file.matrix");
  if (kind == "generator") return code_from_generator(f, m);
  if (kind == "parity") return code_from_parity(f, m);
  fail(errc::parse_error, "code file: kind must be \"generator\" or \"parity\"");
}

inline json grs_to_json(const GrsSpec& s) {
  return json{{"field", field_to_json(*s.f)}, {"k", s.k}, {"gamma", s.gamma}, {"w", s.w}};
}

inline GrsSpec grs_from_json(const json& j) {
  GrsSpec s;
  s.f = &field_from_json(detail::require_key(j, "field", "grs file"));
  s.k = detail::require_int(detail::require_key(j, "k", "grs file"), "grs file.k");
  s.gamma = codes_from_json(*s.f, detail::require_key(j, "gamma", "grs file"), "grs file.gamma");
  s.w = codes_from_json(*s.f, detail::require_key(j, "w", "grs file"), "grs file.w");
  validate_grs(s);
  return s;
}

inline json rational_to_json(const Rational& r) { return json::array({r.num, r.den}); }

inline json eaqecc_to_json(const EaqeccParams& p) {
  return json{{"q", p.q},
              {"n", p.n},
              {"k", p.k},
              {"d", p.d},
              {"c", p.c},
              {"rate", rational_to_json(p.rate)},
              {"net_rate", rational_to_json(p.net_rate)},
              {"flags", json{{"singleton", singleton_name(p.singleton)},
                             {"maximal", p.maximal},
                             {"degenerate", p.degenerate}}}};
}

// First path at which the two documents disagree, in key-sorted order;
// dotted keys plus [i] for array positions, e.g. "eaqecc.d" or "family[3].hull".
inline std::optional<std::string> first_divergence(const json& a, const json& b,
                                                   const std::string& prefix = "") {
  auto at = [&](const std::string& leaf) { return prefix.empty() ? leaf : prefix + "." + leaf; };
  if (a.is_object() && b.is_object()) {
    std::vector<std::string> keys;
    for (auto it = a.begin(); it != a.end(); ++it) keys.push_back(it.key());
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key())) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) {
      if (!a.contains(k) || !b.contains(k)) return at(k);
      if (auto d = first_divergence(a.at(k), b.at(k), at(k))) return d;
    }
    return std::nullopt;
  }
  if (a.is_array() && b.is_array()) {
    if (a.size() != b.size()) return prefix + "[size]";
    for (size_t i = 0; i < a.size(); ++i)
      if (auto d = first_divergence(a[i], b[i], prefix + "[" + std::to_string(i) + "]")) return d;
    return std::nullopt;
  }
  if (a != b) return prefix.empty() ? std::string("$") : prefix;
  return std::nullopt;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "invalid JSON in " + path);
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write " + path);
  out << text;
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace eaforge
