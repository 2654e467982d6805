// Copyright 2026 The NAGTI Authors
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

// JSON helpers shared by the file parsers. Private to the library.

#ifndef NAGTI_SRC_JSON_SUPPORT_H_
#define NAGTI_SRC_JSON_SUPPORT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nagti/errors.h"

namespace nagti::internal {

struct Position {
  uint64_t line = 1;
  uint64_t column = 1;
};

inline Position PositionOf(std::string_view text, uint64_t byte) {
  Position p;
  for (uint64_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// Line of the first occurrence of "key", or 0 when absent.
inline uint64_t LineOfKey(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const size_t at = text.find(quoted);
  return at == std::string_view::npos ? 0 : PositionOf(text, at).line;
}

// Reads JSON from `text`, which belongs to a source called `what`.
class JsonReader {
 public:
  JsonReader(std::string_view text, std::string what)
      : text_(text), what_(std::move(what)) {
    try {
      root_ = nlohmann::json::parse(text_);
    } catch (const nlohmann::json::parse_error& err) {
      const Position p = PositionOf(text_, err.byte == 0 ? 0 : err.byte - 1);
      throw ConfigError(what_ + ":" + std::to_string(p.line) + ":" +
                        std::to_string(p.column) + ": malformed JSON (" +
                        std::string(err.what()) + ")");
    }
    if (!root_.is_object()) Fail("", "top level must be an object");
  }

  const nlohmann::json& root() const { return root_; }
  bool Has(const std::string& key) const { return root_.contains(key); }

  [[noreturn]] void Fail(const std::string& key, const std::string& message) const {
    const uint64_t line = key.empty() ? 1 : LineOfKey(text_, key);
    std::string where = what_;
    if (line > 0) where += ":" + std::to_string(line);
    if (!key.empty()) where += ": '" + key + "'";
    throw ConfigError(where + ": " + message);
  }

  uint64_t UInt(const nlohmann::json& value, const std::string& key) const {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<int64_t>() >= 0)) {
      Fail(key, "expected a non-negative integer");
    }
    return value.get<uint64_t>();
  }

  uint64_t UInt(const std::string& key) const {
    if (!Has(key)) Fail(key, "missing required field");
    return UInt(root_.at(key), key);
  }

  uint64_t UInt(const std::string& key, uint64_t fallback) const {
    return Has(key) ? UInt(root_.at(key), key) : fallback;
  }

  // Accepts a single integer or a list of them.
  std::vector<uint64_t> UIntList(const std::string& key) const {
    if (!Has(key)) Fail(key, "missing required field");
    const nlohmann::json& value = root_.at(key);
    std::vector<uint64_t> out;
    if (value.is_array()) {
      for (const auto& item : value) out.push_back(UInt(item, key));
    } else {
      out.push_back(UInt(value, key));
    }
    return out;
  }

  std::string String(const std::string& key, const std::string& fallback) const {
    if (!Has(key)) return fallback;
    if (!root_.at(key).is_string()) Fail(key, "expected a string");
    return root_.at(key).get<std::string>();
  }

  bool Bool(const std::string& key, bool fallback) const {
    if (!Has(key)) return fallback;
    if (!root_.at(key).is_boolean()) Fail(key, "expected true or false");
    return root_.at(key).get<bool>();
  }

  // Rejects keys outside `known`, which catches typos in configs.
  void RequireKnownKeys(const std::vector<std::string>& known) const {
    for (const auto& [key, value] : root_.items()) {
      bool ok = false;
      for (const auto& k : known) ok = ok || k == key;
      if (!ok) Fail(key, "unknown field");
    }
  }

 private:
  std::string_view text_;
  std::string what_;
  nlohmann::json root_;
};

}  // namespace nagti::internal

#endif  // NAGTI_SRC_JSON_SUPPORT_H_
