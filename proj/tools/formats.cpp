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

#include "formats.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sepchan_cli {

namespace {

using nlohmann::json;

[[noreturn]] void format_error(const std::string& where,
                               const std::string& detail) {
  throw CliError{2, where + ": " + detail};
}

json parse_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    format_error(where, std::string("parse error at byte ") +
                            std::to_string(e.byte) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    format_error(where, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) format_error(where, "expected a number");
  return j.get<double>();
}

int int_at(const json& j, const std::string& where) {
  if (!j.is_number_integer()) format_error(where, "expected an integer");
  return j.get<int>();
}

// Complex entries are two-element [re, im] arrays.
std::pair<double, double> complex_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    format_error(where, "expected a [re, im] pair");
  }
  return {number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]")};
}

std::vector<double> interleaved_at(const json& j, const std::string& where) {
  if (!j.is_array()) format_error(where, "expected an array");
  std::vector<double> data;
  data.reserve(2 * j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const auto [re, im] =
        complex_at(j[i], where + "[" + std::to_string(i) + "]");
    data.push_back(re);
    data.push_back(im);
  }
  return data;
}

std::pair<int, int> dims_at(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    format_error(where, "expected a [dim_a, dim_b] pair");
  }
  return {int_at(j[0], where + "[0]"), int_at(j[1], where + "[1]")};
}

MatrixHandle matrix_at(const json& j, const std::string& where) {
  const int rows = int_at(field(j, "rows", where), where + ".rows");
  const int cols = int_at(field(j, "cols", where), where + ".cols");
  const std::vector<double> data =
      interleaved_at(field(j, "data", where), where + ".data");
  if (data.size() != 2 * static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    format_error(where, "data length does not equal rows*cols");
  }
  MatrixHandle m;
  check_api(sepchan_matrix_create(rows, cols, m.out()), where);
  check_api(sepchan_matrix_set_data(m.get(), data.data(), data.size()), where);
  return m;
}

ProtocolHandle protocol_at(const json& j, const std::string& where) {
  const json& party_json = field(j, "party", where);
  if (!party_json.is_string()) format_error(where + ".party", "expected a string");
  const std::string party_name = party_json.get<std::string>();
  sepchan_party party;
  if (party_name == "alice") {
    party = SEPCHAN_PARTY_ALICE;
  } else if (party_name == "bob") {
    party = SEPCHAN_PARTY_BOB;
  } else {
    format_error(where + ".party", "expected \"alice\" or \"bob\"");
  }
  const json& ops = field(j, "operators", where);
  if (!ops.is_array() || ops.empty()) {
    format_error(where + ".operators", "expected a non-empty array");
  }
  const json* children = nullptr;
  if (j.contains("children")) {
    children = &j.at("children");
    if (!children->is_array() || children->size() != ops.size()) {
      format_error(where + ".children",
                   "expected an array matching \"operators\" in length");
    }
  }

  ProtocolHandle node;
  check_api(sepchan_protocol_create(party, node.out()), where);
  for (size_t i = 0; i < ops.size(); ++i) {
    const std::string op_where =
        where + ".operators[" + std::to_string(i) + "]";
    MatrixHandle op = matrix_at(ops[i], op_where);
    ProtocolHandle child;
    if (children && !(*children)[i].is_null()) {
      child = protocol_at((*children)[i],
                          where + ".children[" + std::to_string(i) + "]");
    }
    check_api(sepchan_protocol_add_branch(node.get(), op.get(), child.get()),
              op_where);
  }
  return node;
}

Json complex_json(double re, double im) {
  Json pair = Json::array();
  pair.push(re);
  pair.push(im);
  return pair;
}

}  // namespace

void check_api(sepchan_status status, const std::string& context) {
  if (status != SEPCHAN_OK) {
    throw CliError{2, context + ": " + sepchan_last_error()};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, path + ": cannot open file"};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{2, path + ": cannot open for writing"};
  out << content;
  if (!out) throw CliError{2, path + ": write failed"};
}

MatrixHandle parse_matrix_json(const std::string& text,
                               const std::string& where) {
  return matrix_at(parse_text(text, where), where);
}

StateVariant parse_state_file(const std::string& path, double tol) {
  const json j = parse_text(read_file(path), path);
  const json& kind_json = field(j, "kind", path);
  if (!kind_json.is_string()) format_error(path + ".kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  const auto [da, db] = dims_at(field(j, "dims", path), path + ".dims");

  if (kind == "pure") {
    const std::vector<double> amp =
        interleaved_at(field(j, "amplitudes", path), path + ".amplitudes");
    PureHandle p;
    check_api(
        sepchan_pure_create(da, db, amp.data(), amp.size(), 0, tol, p.out()),
        path);
    return StateVariant(std::move(p));
  }
  if (kind == "density") {
    MatrixHandle m = matrix_at(field(j, "matrix", path), path + ".matrix");
    const size_t len = 2 * static_cast<size_t>(sepchan_matrix_rows(m.get())) *
                       static_cast<size_t>(sepchan_matrix_cols(m.get()));
    std::vector<double> data(len);
    check_api(sepchan_matrix_get_data(m.get(), data.data(), data.size()),
              path);
    DensityHandle d;
    check_api(sepchan_density_create(da, db, data.data(), data.size(), tol,
                                     d.out()),
              path);
    return StateVariant(std::move(d));
  }
  format_error(path + ".kind", "expected \"pure\" or \"density\"");
}

PureHandle parse_pure_state_file(const std::string& path, double tol) {
  StateVariant v = parse_state_file(path, tol);
  if (!std::holds_alternative<PureHandle>(v)) {
    throw CliError{2, path + ": expected a pure state file"};
  }
  return std::move(std::get<PureHandle>(v));
}

ChannelHandle parse_channel_file(const std::string& path) {
  const json j = parse_text(read_file(path), path);
  const auto [da_in, db_in] =
      dims_at(field(j, "dims_in", path), path + ".dims_in");
  const auto [da_out, db_out] =
      dims_at(field(j, "dims_out", path), path + ".dims_out");
  const json& kraus = field(j, "kraus", path);
  if (!kraus.is_array() || kraus.empty()) {
    format_error(path + ".kraus", "expected a non-empty array of matrices");
  }
  ChannelHandle ch;
  check_api(sepchan_channel_create(da_in, db_in, da_out, db_out, ch.out()),
            path);
  for (size_t i = 0; i < kraus.size(); ++i) {
    const std::string where = path + ".kraus[" + std::to_string(i) + "]";
    MatrixHandle m = matrix_at(kraus[i], where);
    check_api(sepchan_channel_add_operator(ch.get(), m.get()), where);
  }
  return ch;
}

ProtocolHandle parse_protocol_file(const std::string& path) {
  return protocol_at(parse_text(read_file(path), path), path);
}

Json emit_matrix(const sepchan_matrix* m) {
  const int rows = sepchan_matrix_rows(m);
  const int cols = sepchan_matrix_cols(m);
  std::vector<double> data(2 * static_cast<size_t>(rows) *
                           static_cast<size_t>(cols));
  check_api(sepchan_matrix_get_data(m, data.data(), data.size()),
            "emit_matrix");
  Json entries = Json::array();
  for (size_t i = 0; i + 1 < data.size(); i += 2) {
    entries.push(complex_json(data[i], data[i + 1]));
  }
  Json out = Json::object();
  out.set("rows", rows);
  out.set("cols", cols);
  out.set("data", std::move(entries));
  return out;
}

Json emit_pure(const sepchan_pure* p) {
  int da = 0, db = 0;
  check_api(sepchan_pure_dims(p, &da, &db), "emit_pure");
  std::vector<double> amp(2 * static_cast<size_t>(da) *
                          static_cast<size_t>(db));
  check_api(sepchan_pure_get_amplitudes(p, amp.data(), amp.size()),
            "emit_pure");
  Json amps = Json::array();
  for (size_t i = 0; i + 1 < amp.size(); i += 2) {
    amps.push(complex_json(amp[i], amp[i + 1]));
  }
  Json dims = Json::array();
  dims.push(da);
  dims.push(db);
  Json out = Json::object();
  out.set("kind", "pure");
  out.set("dims", std::move(dims));
  out.set("amplitudes", std::move(amps));
  return out;
}

Json emit_density(const sepchan_density* d) {
  int da = 0, db = 0;
  check_api(sepchan_density_dims(d, &da, &db), "emit_density");
  MatrixHandle m;
  check_api(sepchan_density_get_matrix(d, m.out()), "emit_density");
  Json dims = Json::array();
  dims.push(da);
  dims.push(db);
  Json out = Json::object();
  out.set("kind", "density");
  out.set("dims", std::move(dims));
  out.set("matrix", emit_matrix(m.get()));
  return out;
}

Json emit_channel(const sepchan_channel* ch) {
  int da_in = 0, db_in = 0, da_out = 0, db_out = 0;
  check_api(sepchan_channel_dims(ch, &da_in, &db_in, &da_out, &db_out),
            "emit_channel");
  Json dims_in = Json::array();
  dims_in.push(da_in);
  dims_in.push(db_in);
  Json dims_out = Json::array();
  dims_out.push(da_out);
  dims_out.push(db_out);
  Json kraus = Json::array();
  for (int i = 0; i < sepchan_channel_operator_count(ch); ++i) {
    MatrixHandle m;
    check_api(sepchan_channel_get_operator(ch, i, m.out()), "emit_channel");
    kraus.push(emit_matrix(m.get()));
  }
  Json out = Json::object();
  out.set("dims_in", std::move(dims_in));
  out.set("dims_out", std::move(dims_out));
  out.set("kraus", std::move(kraus));
  return out;
}

Json emit_protocol(const sepchan_protocol* node) {
  Json operators = Json::array();
  Json children = Json::array();
  for (int i = 0; i < sepchan_protocol_branch_count(node); ++i) {
    MatrixHandle op;
    check_api(sepchan_protocol_branch_operator(node, i, op.out()),
              "emit_protocol");
    operators.push(emit_matrix(op.get()));
    ProtocolHandle child;
    check_api(sepchan_protocol_branch_child(node, i, child.out()),
              "emit_protocol");
    children.push(child ? emit_protocol(child.get()) : Json(nullptr));
  }
  Json out = Json::object();
  out.set("party", sepchan_protocol_party(node) == SEPCHAN_PARTY_ALICE
                       ? "alice"
                       : "bob");
  out.set("operators", std::move(operators));
  out.set("children", std::move(children));
  return out;
}

std::vector<double> parse_weight_spec(const std::string& spec, double tol) {
  if (spec.empty()) throw CliError{2, "empty weight specification"};
  if (spec[0] == '@') {
    const std::string path = spec.substr(1);
    PureHandle p = parse_pure_state_file(path, tol);
    int da = 0, db = 0;
    check_api(sepchan_pure_dims(p.get(), &da, &db), path);
    std::vector<double> w(static_cast<size_t>(std::min(da, db)));
    check_api(sepchan_pure_schmidt_weights(p.get(), tol, w.data(), w.size()),
              path);
    return w;
  }
  std::vector<double> weights;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const double v = std::stod(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
      weights.push_back(v);
    } catch (const std::exception&) {
      throw CliError{2, "weight list \"" + spec + "\": cannot parse \"" +
                            item + "\" as a number"};
    }
  }
  if (weights.empty()) {
    throw CliError{2, "weight list \"" + spec + "\" is empty"};
  }
  return weights;
}

}  // namespace sepchan_cli
