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

#include "report.hpp"

#include <cstdio>

#include "sepchan/sepchan.h"

namespace sepchan_cli {

std::string format_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", d);
  return buf;
}

namespace {

void escape_into(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void dump_into(const Json& j, std::string& out) {
  const auto& v = j.value();
  if (std::holds_alternative<std::nullptr_t>(v)) {
    out += "null";
  } else if (std::holds_alternative<bool>(v)) {
    out += std::get<bool>(v) ? "true" : "false";
  } else if (std::holds_alternative<long long>(v)) {
    out += std::to_string(std::get<long long>(v));
  } else if (std::holds_alternative<double>(v)) {
    out += format_double(std::get<double>(v));
  } else if (std::holds_alternative<std::string>(v)) {
    escape_into(std::get<std::string>(v), out);
  } else if (std::holds_alternative<Json::Array>(v)) {
    out += '[';
    const auto& arr = std::get<Json::Array>(v);
    for (size_t i = 0; i < arr.size(); ++i) {
      if (i) out += ',';
      dump_into(arr[i], out);
    }
    out += ']';
  } else {
    out += '{';
    const auto& obj = std::get<Json::Object>(v);
    for (size_t i = 0; i < obj.size(); ++i) {
      if (i) out += ',';
      escape_into(obj[i].first, out);
      out += ':';
      dump_into(obj[i].second, out);
    }
    out += '}';
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json make_envelope(const std::string& command, double tolerance,
                   std::optional<bool> pass, Json payload) {
  Json env = Json::object();
  env.set("tool_version", sepchan_version());
  env.set("command", command);
  env.set("tolerance", tolerance);
  if (pass.has_value()) env.set("pass", *pass);
  env.set("payload", std::move(payload));
  return env;
}

}  // namespace sepchan_cli
