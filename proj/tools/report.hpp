/*
  Copyright (c) 2026 the sepchan authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef SEPCHAN_TOOLS_REPORT_HPP
#define SEPCHAN_TOOLS_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sepchan_cli {

/// Ordered JSON value. Objects keep insertion order and numbers print with
/// 17 significant digits, so identical inputs serialize to identical bytes.
class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() : value_(nullptr) {}
  Json(std::nullptr_t) : value_(nullptr) {}
  Json(bool b) : value_(b) {}
  Json(int i) : value_(static_cast<long long>(i)) {}
  Json(long long i) : value_(i) {}
  Json(double d) : value_(d) {}
  Json(const char* s) : value_(std::string(s)) {}
  Json(std::string s) : value_(std::move(s)) {}
  Json(Array a) : value_(std::move(a)) {}
  Json(Object o) : value_(std::move(o)) {}

  static Json object() { return Json(Object{}); }
  static Json array() { return Json(Array{}); }

  /// Appends a key (objects only); duplicate keys are the caller's bug.
  Json& set(std::string key, Json value) {
    std::get<Object>(value_).emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Json& push(Json value) {
    std::get<Array>(value_).push_back(std::move(value));
    return *this;
  }

  const std::variant<std::nullptr_t, bool, long long, double, std::string,
                     Array, Object>&
  value() const {
    return value_;
  }

 private:
  std::variant<std::nullptr_t, bool, long long, double, std::string, Array,
               Object>
      value_;
};

/// Compact deterministic serialization.
std::string dump(const Json& j);

/// Doubles formatted with "%.17g" (round-trips exactly).
std::string format_double(double d);

/// Report envelope shared by all subcommands. Key order: tool_version,
/// command, tolerance, pass (when present), payload.
Json make_envelope(const std::string& command, double tolerance,
                   std::optional<bool> pass, Json payload);

}  // namespace sepchan_cli

#endif
