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

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sepchan/sepchan.h"

#include "commands.hpp"
#include "formats.hpp"

namespace {

using sepchan_cli::GlobalOptions;

std::optional<std::string> opt_of(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("SEPCHAN_MAX_DIM")) {
    const int cap = std::atoi(env);
    if (cap >= 1) sepchan_set_max_dim(cap);
  }

  CLI::App app{"sepchan — separable-operation and LOCC analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string format = "text";
  app.add_option("--format", format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tol", g.tol, "Tolerance for checks (default 1e-10)");

  std::function<int()> run;

  // schmidt <state>
  {
    auto* cmd = app.add_subcommand("schmidt",
                                   "Schmidt weights and rank of a pure state");
    auto state = std::make_shared<std::string>();
    cmd->add_option("state", *state, "Pure state JSON file")->required();
    cmd->callback([&, state]() {
      run = [&, state]() { return sepchan_cli::cmd_schmidt(g, *state); };
    });
  }

  // span-scan <state1> <state2>
  {
    auto* cmd = app.add_subcommand(
        "span-scan", "Classify product vectors in span{psi1, psi2}");
    auto s1 = std::make_shared<std::string>();
    auto s2 = std::make_shared<std::string>();
    cmd->add_option("state1", *s1, "First pure state JSON file")->required();
    cmd->add_option("state2", *s2, "Second pure state JSON file")->required();
    cmd->callback([&, s1, s2]() {
      run = [&, s1, s2]() { return sepchan_cli::cmd_span_scan(g, *s1, *s2); };
    });
  }

  // channel-verify <channel>
  {
    auto* cmd = app.add_subcommand(
        "channel-verify", "Check Kraus completeness and separability");
    auto path = std::make_shared<std::string>();
    cmd->add_option("channel", *path, "Channel JSON file")->required();
    cmd->callback([&, path]() {
      run = [&, path]() { return sepchan_cli::cmd_channel_verify(g, *path); };
    });
  }

  // channel-apply --channel --state [--out]
  {
    auto* cmd = app.add_subcommand("channel-apply",
                                   "Apply a channel to a state");
    auto ch = std::make_shared<std::string>();
    auto st = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--channel", *ch, "Channel JSON file")->required();
    cmd->add_option("--state", *st, "State JSON file (pure or density)")
        ->required();
    cmd->add_option("--out", *out, "Write the output density here");
    cmd->callback([&, ch, st, out]() {
      run = [&, ch, st, out]() {
        return sepchan_cli::cmd_channel_apply(g, *ch, *st, opt_of(*out));
      };
    });
  }

  // paper-emit [--out] [--source-out --p] [--target-out]
  {
    auto* cmd = app.add_subcommand(
        "paper-emit", "Emit the built-in channel, source and target");
    auto out = std::make_shared<std::string>();
    auto source_out = std::make_shared<std::string>();
    auto target_out = std::make_shared<std::string>();
    auto p = std::make_shared<double>(0.5);
    cmd->add_option("--out", *out, "Write the channel JSON here");
    cmd->add_option("--source-out", *source_out,
                    "Write the source density rho(p) here");
    cmd->add_option("--p", *p, "Mixing weight for the source (default 0.5)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--target-out", *target_out,
                    "Write the target pure state here");
    cmd->callback([&, out, source_out, target_out, p]() {
      run = [&, out, source_out, target_out, p]() {
        return sepchan_cli::cmd_paper_emit(g, opt_of(*out),
                                           opt_of(*source_out), *p,
                                           opt_of(*target_out));
      };
    });
  }

  // distill-verify
  {
    auto* cmd = app.add_subcommand(
        "distill-verify",
        "Verify a deterministic mixed-to-pure distillation channel");
    auto ch = std::make_shared<std::string>();
    auto source = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto p = std::make_shared<double>(0.5);
    auto builtin_channel = std::make_shared<bool>(false);
    auto builtin_source = std::make_shared<bool>(false);
    auto builtin_target = std::make_shared<bool>(false);
    cmd->add_option("--channel", *ch,
                    "Channel JSON file (default: built-in channel)");
    cmd->add_flag("--builtin-channel", *builtin_channel,
                  "Use the built-in six-operator channel");
    cmd->add_option("--source", *source, "Source state JSON file");
    cmd->add_flag("--builtin-source", *builtin_source,
                  "Use the built-in source rho(p)");
    cmd->add_option("--p", *p, "Mixing weight for the built-in source")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--target", *target, "Target pure state JSON file");
    cmd->add_flag("--builtin-target", *builtin_target,
                  "Use the built-in target");
    cmd->callback([&, ch, source, target, p, builtin_channel, builtin_source,
                   builtin_target]() {
      run = [&, ch, source, target, p, builtin_channel, builtin_source,
             builtin_target]() {
        if ((*builtin_channel && !ch->empty()) ||
            (*builtin_source && !source->empty()) ||
            (*builtin_target && !target->empty())) {
          throw sepchan_cli::CliError{
              2, "choose either a file or the built-in object, not both"};
        }
        return sepchan_cli::cmd_distill_verify(g, opt_of(*ch), *p,
                                               opt_of(*source),
                                               opt_of(*target));
      };
    });
  }

  // case-analysis
  {
    auto* cmd = app.add_subcommand(
        "case-analysis",
        "Per-operator (c, d) dichotomy of a separable channel");
    auto ch = std::make_shared<std::string>();
    auto psi1 = std::make_shared<std::string>();
    auto psi2 = std::make_shared<std::string>();
    auto phi = std::make_shared<std::string>();
    auto builtin = std::make_shared<bool>(false);
    cmd->add_option("--channel", *ch,
                    "Channel JSON file (default: built-in channel)");
    cmd->add_option("--psi1", *psi1, "First source eigenstate (pure)");
    cmd->add_option("--psi2", *psi2, "Second source eigenstate (pure)");
    cmd->add_option("--phi", *phi, "Target pure state");
    cmd->add_flag("--builtin", *builtin,
                  "Use the built-in psi1, psi2 and target");
    cmd->callback([&, ch, psi1, psi2, phi, builtin]() {
      run = [&, ch, psi1, psi2, phi, builtin]() {
        if (*builtin && (!psi1->empty() || !psi2->empty() || !phi->empty())) {
          throw sepchan_cli::CliError{
              2, "--builtin conflicts with explicit state files"};
        }
        if (!*builtin && (psi1->empty() || psi2->empty() || phi->empty())) {
          throw sepchan_cli::CliError{
              2, "need --psi1, --psi2 and --phi (or --builtin)"};
        }
        return sepchan_cli::cmd_case_analysis(g, opt_of(*ch), opt_of(*psi1),
                                              opt_of(*psi2), opt_of(*phi));
      };
    });
  }

  // pmax / majorize
  {
    auto* cmd = app.add_subcommand(
        "pmax", "Maximum conversion probability between pure-state spectra");
    auto src = std::make_shared<std::string>();
    auto tgt = std::make_shared<std::string>();
    cmd->add_option("--src", *src,
                    "Source weights \"w1,w2,...\" or @pure-state-file")
        ->required();
    cmd->add_option("--tgt", *tgt,
                    "Target weights \"w1,w2,...\" or @pure-state-file")
        ->required();
    cmd->callback([&, src, tgt]() {
      run = [&, src, tgt]() { return sepchan_cli::cmd_pmax(g, *src, *tgt); };
    });
  }
  {
    auto* cmd = app.add_subcommand(
        "majorize", "Deterministic pure-state convertibility check");
    auto src = std::make_shared<std::string>();
    auto tgt = std::make_shared<std::string>();
    cmd->add_option("--src", *src,
                    "Source weights \"w1,w2,...\" or @pure-state-file")
        ->required();
    cmd->add_option("--tgt", *tgt,
                    "Target weights \"w1,w2,...\" or @pure-state-file")
        ->required();
    cmd->callback([&, src, tgt]() {
      run = [&, src, tgt]() {
        return sepchan_cli::cmd_majorize(g, *src, *tgt);
      };
    });
  }

  // locc-validate <protocol>
  {
    auto* cmd = app.add_subcommand(
        "locc-validate", "Validate a protocol tree (completeness per node)");
    auto path = std::make_shared<std::string>();
    cmd->add_option("protocol", *path, "Protocol JSON file")->required();
    cmd->callback([&, path]() {
      run = [&, path]() { return sepchan_cli::cmd_locc_validate(g, *path); };
    });
  }

  // locc-simulate
  {
    auto* cmd = app.add_subcommand(
        "locc-simulate", "Run a protocol tree on one or more pure inputs");
    auto path = std::make_shared<std::string>();
    auto inputs = std::make_shared<std::vector<std::string>>();
    auto check = std::make_shared<std::vector<int>>();
    auto cutoff = std::make_shared<double>(1e-12);
    cmd->add_option("--protocol", *path, "Protocol JSON file")->required();
    cmd->add_option("--input", *inputs,
                    "Pure state JSON file (repeat for several inputs)")
        ->required();
    cmd->add_option("--check", *check,
                    "Two input indices for the branch-nonvanishing check")
        ->expected(2);
    cmd->add_option("--cutoff", *cutoff,
                    "Branch probability cutoff (default 1e-12)");
    cmd->callback([&, path, inputs, check, cutoff]() {
      run = [&, path, inputs, check, cutoff]() {
        return sepchan_cli::cmd_locc_simulate(g, *path, *inputs, *check,
                                              *cutoff);
      };
    });
  }

  // locc-nielsen
  {
    auto* cmd = app.add_subcommand(
        "locc-nielsen",
        "Build the one-round deterministic conversion protocol (rank <= 2)");
    auto src = std::make_shared<std::string>();
    auto tgt = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--src", *src, "Source pure state JSON file")->required();
    cmd->add_option("--tgt", *tgt, "Target pure state JSON file")->required();
    cmd->add_option("--out", *out, "Write the protocol JSON here");
    cmd->callback([&, src, tgt, out]() {
      run = [&, src, tgt, out]() {
        return sepchan_cli::cmd_locc_nielsen(g, *src, *tgt, opt_of(*out));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << app.help() << std::flush;
    return 2;
  }

  g.json_format = format == "json";

  try {
    return run();
  } catch (const sepchan_cli::CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
