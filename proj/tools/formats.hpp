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

#ifndef SEPCHAN_TOOLS_FORMATS_HPP
#define SEPCHAN_TOOLS_FORMATS_HPP

#include <string>
#include <variant>

#include "sepchan/sepchan.h"

#include "report.hpp"

namespace sepchan_cli {

/// Error carrying the process exit code (2 = usage/IO/format, 1 = a
/// completed check that failed).
struct CliError {
  int exit_code;
  std::string message;
};

/// Throws CliError{2} with the library's last error message appended.
void check_api(sepchan_status status, const std::string& context);

/// Owned C API handle.
template <typename T, void (*Deleter)(T*)>
class Handle {
 public:
  Handle() = default;
  explicit Handle(T* p) : ptr_(p) {}
  Handle(Handle&& other) noexcept : ptr_(other.release()) {}
  Handle& operator=(Handle&& other) noexcept {
    if (this != &other) {
      reset(other.release());
    }
    return *this;
  }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { reset(); }

  T* get() const { return ptr_; }
  explicit operator bool() const { return ptr_ != nullptr; }
  T** out() {
    reset();
    return &ptr_;
  }
  T* release() {
    T* p = ptr_;
    ptr_ = nullptr;
    return p;
  }
  void reset(T* p = nullptr) {
    if (ptr_) Deleter(ptr_);
    ptr_ = p;
  }

 private:
  T* ptr_ = nullptr;
};

using MatrixHandle = Handle<sepchan_matrix, sepchan_matrix_destroy>;
using PureHandle = Handle<sepchan_pure, sepchan_pure_destroy>;
using DensityHandle = Handle<sepchan_density, sepchan_density_destroy>;
using ChannelHandle = Handle<sepchan_channel, sepchan_channel_destroy>;
using ProtocolHandle = Handle<sepchan_protocol, sepchan_protocol_destroy>;
using SchmidtHandle = Handle<sepchan_schmidt, sepchan_schmidt_destroy>;
using SpanReportHandle =
    Handle<sepchan_span_report, sepchan_span_report_destroy>;
using SepReportHandle = Handle<sepchan_sep_report, sepchan_sep_report_destroy>;
using DistillReportHandle =
    Handle<sepchan_distill_report, sepchan_distill_report_destroy>;
using CaseReportHandle =
    Handle<sepchan_case_report, sepchan_case_report_destroy>;
using EigensystemHandle =
    Handle<sepchan_eigensystem, sepchan_eigensystem_destroy>;
using ProtocolReportHandle =
    Handle<sepchan_protocol_report, sepchan_protocol_report_destroy>;
using SimulationHandle =
    Handle<sepchan_simulation, sepchan_simulation_destroy>;
using ViolationsHandle =
    Handle<sepchan_violations, sepchan_violations_destroy>;
using EnsembleHandle = Handle<sepchan_ensemble, sepchan_ensemble_destroy>;

/// Either kind of state file content.
using StateVariant = std::variant<PureHandle, DensityHandle>;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Parsers: throw CliError{2, ...} with the path and the offending field.
MatrixHandle parse_matrix_json(const std::string& text,
                               const std::string& where);
StateVariant parse_state_file(const std::string& path, double tol);
PureHandle parse_pure_state_file(const std::string& path, double tol);
ChannelHandle parse_channel_file(const std::string& path);
ProtocolHandle parse_protocol_file(const std::string& path);

/// Emitters: produce the documented schemas (deterministic byte output via
/// dump()).
Json emit_matrix(const sepchan_matrix* m);
Json emit_pure(const sepchan_pure* p);
Json emit_density(const sepchan_density* d);
Json emit_channel(const sepchan_channel* ch);
Json emit_protocol(const sepchan_protocol* node);

/// "w1,w2,..." into a weight vector, or "@path" to take the Schmidt weights
/// of the pure state stored at path.
std::vector<double> parse_weight_spec(const std::string& spec, double tol);

}  // namespace sepchan_cli

#endif
