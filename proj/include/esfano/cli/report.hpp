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

// Reports: a command name, a structured result tree and an exit status.
//
// The default text encoding writes one leaf per line as `path = value`,
// path segments joined by '.', array positions as decimal segments, values
// as JSON literals (empty containers as [] and {}). Object keys come out
// sorted, so identical results give byte-identical text. --json emits the
// same tree as indented JSON.

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "esfano/errors.hpp"

namespace esfano::cli {

enum ExitStatus : int { kSuccess = 0, kNegative = 1, kInputError = 2 };

struct Report {
  std::string command;
  nlohmann::json result = nlohmann::json::object();
  int status = kSuccess;

  nlohmann::json tree() const { return {{"command", command}, {"result", result}, {"status", status}}; }

  std::string to_json() const { return tree().dump(2) + "\n"; }
  std::string to_text() const;

  static Report from_tree(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("command") || !j.contains("result") || !j.contains("status"))
      throw ParseError("report needs command, result and status");
    return {j.at("command").get<std::string>(), j.at("result"), j.at("status").get<int>()};
  }
  static Report from_json(std::string_view text) { return from_tree(nlohmann::json::parse(text)); }
  static Report from_text(std::string_view text);

  friend bool operator==(const Report&, const Report&) = default;
};

namespace detail {

inline bool is_index(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline void check_key(const std::string& key) {
  if (key.empty() || is_index(key)) throw std::logic_error("report key '" + key + "' is empty or numeric");
  for (char c : key)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw std::logic_error("report key '" + key + "' has characters outside [A-Za-z0-9_]");
}

inline void flatten(const nlohmann::json& node, const std::string& path, std::string& out) {
  auto join = [&](const std::string& seg) { return path.empty() ? seg : path + "." + seg; };
  if (node.is_object() && !node.empty()) {
    for (const auto& [k, v] : node.items()) {
      check_key(k);
      flatten(v, join(k), out);
    }
  } else if (node.is_array() && !node.empty()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], join(std::to_string(i)), out);
  } else {
    out += path + " = " + node.dump() + "\n";
  }
}

}  // namespace detail

inline std::string Report::to_text() const {
  std::string out;
  detail::flatten(tree(), "", out);
  return out;
}

inline Report Report::from_text(std::string_view text) {
  nlohmann::json root = nlohmann::json::object();
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw ParseError("report line without ' = ': " + line);
    nlohmann::json value;
    try {
      value = nlohmann::json::parse(line.substr(eq + 3));
    } catch (const nlohmann::json::parse_error&) {
      throw ParseError("bad value in report line: " + line);
    }
    nlohmann::json* node = &root;
    std::string_view path(line.data(), eq);
    while (true) {
      const auto dot = path.find('.');
      const std::string seg(path.substr(0, dot));
      if (detail::is_index(seg)) {
        if (node->is_null()) *node = nlohmann::json::array();
        const std::size_t idx = std::stoul(seg);
        if (!node->is_array() || idx > node->size()) throw ParseError("bad array path in line: " + line);
        if (idx == node->size()) node->push_back(nullptr);
        node = &(*node)[idx];
      } else {
        if (node->is_null()) *node = nlohmann::json::object();
        if (!node->is_object()) throw ParseError("bad object path in line: " + line);
        node = &(*node)[seg];
      }
      if (dot == std::string_view::npos) break;
      path.remove_prefix(dot + 1);
    }
    *node = std::move(value);
  }
  return from_tree(root);
}

}  // namespace esfano::cli
