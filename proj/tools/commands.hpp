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

#ifndef SEPCHAN_TOOLS_COMMANDS_HPP
#define SEPCHAN_TOOLS_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace sepchan_cli {

struct GlobalOptions {
  double tol = 1e-10;
  bool json_format = false;
};

int cmd_schmidt(const GlobalOptions& g, const std::string& state_path);
int cmd_span_scan(const GlobalOptions& g, const std::string& path1,
                  const std::string& path2);
int cmd_channel_verify(const GlobalOptions& g, const std::string& channel_path);
int cmd_channel_apply(const GlobalOptions& g, const std::string& channel_path,
                      const std::string& state_path,
                      const std::optional<std::string>& out_path);
int cmd_paper_emit(const GlobalOptions& g,
                   const std::optional<std::string>& channel_out,
                   const std::optional<std::string>& source_out, double p,
                   const std::optional<std::string>& target_out);
int cmd_distill_verify(const GlobalOptions& g,
                       const std::optional<std::string>& channel_path,
                       double p, const std::optional<std::string>& source_path,
                       const std::optional<std::string>& target_path);
int cmd_case_analysis(const GlobalOptions& g,
                      const std::optional<std::string>& channel_path,
                      const std::optional<std::string>& psi1_path,
                      const std::optional<std::string>& psi2_path,
                      const std::optional<std::string>& phi_path);
int cmd_pmax(const GlobalOptions& g, const std::string& src_spec,
             const std::string& tgt_spec);
int cmd_majorize(const GlobalOptions& g, const std::string& src_spec,
                 const std::string& tgt_spec);
int cmd_locc_validate(const GlobalOptions& g,
                      const std::string& protocol_path);
int cmd_locc_simulate(const GlobalOptions& g, const std::string& protocol_path,
                      const std::vector<std::string>& input_paths,
                      const std::vector<int>& check_pair, double cutoff);
int cmd_locc_nielsen(const GlobalOptions& g, const std::string& src_path,
                     const std::string& tgt_path,
                     const std::optional<std::string>& out_path);

}  // namespace sepchan_cli

#endif
