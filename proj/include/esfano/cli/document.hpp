// Copyright 2026 The esfano Authors.
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

#pragma once

// Matrix documents: a field descriptor plus rows of scalar strings. Two
// encodings are accepted. JSON:
//
//   {"field": "Q", "rows": [["1", "0", "-1/2"], ["0", "1", "3"]]}
//   {"field": "Fp", "prime": 5, "rows": [[1, 0, 4], [0, 1, 2]]}
//
// and plain text, one row per line, entries separated by blanks or commas,
// '#' starting a comment, with an optional leading "field Q" / "field F5"
// line.

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "esfano/errors.hpp"
#include "esfano/linalg.hpp"
#include "esfano/scalar.hpp"

namespace esfano::cli {

struct FieldDescriptor {
  std::uint32_t prime = 0;  // 0 means the rationals

  bool is_rational() const { return prime == 0; }
  std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(prime); }

  static FieldDescriptor parse(std::string_view kind, std::uint64_t prime = 0) {
    if (kind == "Q" || kind == "QQ") return {};
    if (kind == "Fp") {
      if (prime == 0) throw ParseError("field Fp needs a prime");
      return {checked_prime(prime)};
    }
    if (kind.size() > 1 && kind.front() == 'F') {
      std::uint64_t p = 0;
      for (char c : kind.substr(1)) {
        if (c < '0' || c > '9' || p > (1ull << 32)) throw ParseError("bad field descriptor '" + std::string(kind) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return {checked_prime(p)};
    }
    throw ParseError("unknown field '" + std::string(kind) + "' (expected Q, Fp or F<prime>)");
  }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  static std::uint32_t checked_prime(std::uint64_t p) {
    if (p >= (1ull << 31) || !is_prime(p)) throw ParseError("not a prime below 2^31: " + std::to_string(p));
    return static_cast<std::uint32_t>(p);
  }
};

// Calls fn(Rationals{}) or fn(PrimeField{p}).
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& desc, Fn&& fn) {
  if (desc.is_rational()) return fn(Rationals{});
  return fn(PrimeField(desc.prime));
}

struct MatrixDocument {
  FieldDescriptor field;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ParseError("matrix entries must be strings or integers, got " + v.dump());
}

inline MatrixDocument parse_json_document(std::string_view text, const FieldDescriptor& fallback) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw ParseError("JSON document needs a \"rows\" array");
  MatrixDocument doc{fallback, {}};
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw ParseError("\"field\" must be a string");
    std::uint64_t prime = 0;
    if (j.contains("prime")) {
      if (!j["prime"].is_number_unsigned()) throw ParseError("\"prime\" must be a positive integer");
      prime = j["prime"].get<std::uint64_t>();
    }
    doc.field = FieldDescriptor::parse(j["field"].get<std::string>(), prime);
  }
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw ParseError("each row must be an array");
    auto& out = doc.rows.emplace_back();
    for (const auto& v : row) out.push_back(scalar_text(v));
  }
  return doc;
}

inline MatrixDocument parse_text_document(std::string_view text, const FieldDescriptor& fallback) {
  MatrixDocument doc{fallback, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == ',' || c == '\t' || c == '\r') c = ' ';
    std::istringstream tokens(line);
    std::vector<std::string> row;
    for (std::string tok; tokens >> tok;) row.push_back(tok);
    if (row.empty()) continue;
    if (first && row.front() == "field") {
      if (row.size() != 2) throw ParseError("field line must read 'field <Q|F<p>>'");
      doc.field = FieldDescriptor::parse(row[1]);
    } else {
      doc.rows.push_back(std::move(row));
    }
    first = false;
  }
  return doc;
}

}  // namespace detail

inline MatrixDocument parse_matrix_document(std::string_view text, const FieldDescriptor& fallback = {}) {
  auto start = text.find_first_not_of(" \t\r\n");
  MatrixDocument doc = (start != std::string_view::npos && text[start] == '{')
                           ? detail::parse_json_document(text, fallback)
                           : detail::parse_text_document(text, fallback);
  if (doc.rows.empty()) throw ParseError("document has no rows");
  for (const auto& r : doc.rows)
    if (r.size() != doc.rows.front().size()) throw ParseError("document rows have different lengths");
  if (doc.rows.front().empty()) throw ParseError("document rows are empty");
  return doc;
}

template <ExactField F>
Matrix<F> to_matrix(const MatrixDocument& doc, const F& field) {
  std::vector<std::vector<typename F::value_type>> rows;
  for (const auto& r : doc.rows) {
    auto& out = rows.emplace_back();
    for (const auto& s : r) out.push_back(field.parse(s));
  }
  return Matrix<F>(field, rows);
}

}  // namespace esfano::cli
