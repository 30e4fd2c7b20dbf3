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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "sepchan/sepchan.h"

#include "formats.hpp"
#include "report.hpp"

namespace sepchan_cli {

namespace {

void print_report(const GlobalOptions& g, const std::string& command,
                  std::optional<bool> pass, Json payload,
                  const std::vector<std::string>& text_lines) {
  if (g.json_format) {
    std::cout << dump(make_envelope(command, g.tol, pass, std::move(payload)))
              << "\n";
    return;
  }
  std::cout << "sepchan " << sepchan_version() << " — " << command << "\n";
  std::cout << "tolerance: " << format_double(g.tol) << "\n";
  for (const std::string& line : text_lines) std::cout << line << "\n";
  if (pass.has_value()) {
    std::cout << "result: " << (*pass ? "PASS" : "FAIL") << "\n";
  }
}

/// A completed check failed for a structural reason (non-complete channel,
/// majorization violation, ...): report and exit 1.
int fail_check(const GlobalOptions& g, const std::string& command,
               const std::string& message) {
  Json payload = Json::object();
  payload.set("error", message);
  print_report(g, command, false, std::move(payload), {"error: " + message});
  return 1;
}

std::string fmt(double v) { return format_double(v); }

Json complex_json(double re, double im) {
  Json pair = Json::array();
  pair.push(re);
  pair.push(im);
  return pair;
}

Json weights_json(const std::vector<double>& w) {
  Json arr = Json::array();
  for (double x : w) arr.push(x);
  return arr;
}

std::string weights_text(const std::vector<double>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += fmt(w[i]);
  }
  return s;
}

std::vector<double> pure_amplitudes(const sepchan_pure* p) {
  int da = 0, db = 0;
  check_api(sepchan_pure_dims(p, &da, &db), "state dims");
  std::vector<double> amp(2 * static_cast<size_t>(da) *
                          static_cast<size_t>(db));
  check_api(sepchan_pure_get_amplitudes(p, amp.data(), amp.size()),
            "state amplitudes");
  return amp;
}

double overlap_magnitude(const sepchan_pure* a, const sepchan_pure* b) {
  const std::vector<double> x = pure_amplitudes(a);
  const std::vector<double> y = pure_amplitudes(b);
  if (x.size() != y.size()) {
    throw CliError{2, "overlap: states live on different dims"};
  }
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i + 1 < x.size(); i += 2) {
    // conj(a) * b
    re += x[i] * y[i] + x[i + 1] * y[i + 1];
    im += x[i] * y[i + 1] - x[i + 1] * y[i];
  }
  return std::sqrt(re * re + im * im);
}

DensityHandle state_as_density(StateVariant state) {
  if (std::holds_alternative<DensityHandle>(state)) {
    return std::move(std::get<DensityHandle>(state));
  }
  DensityHandle d;
  check_api(
      sepchan_density_from_pure(std::get<PureHandle>(state).get(), d.out()),
      "state conversion");
  return d;
}

ChannelHandle load_channel_or_builtin(
    const std::optional<std::string>& channel_path) {
  ChannelHandle ch;
  if (channel_path.has_value()) {
    ch = parse_channel_file(*channel_path);
  } else {
    check_api(sepchan_paper_channel(ch.out()), "built-in channel");
  }
  return ch;
}

const char* case_name(sepchan_overlap_case kind) {
  switch (kind) {
    case SEPCHAN_CASE_BOTH_NONZERO:
      return "both-nonzero";
    case SEPCHAN_CASE_ONE_NONZERO:
      return "one-nonzero";
    case SEPCHAN_CASE_BOTH_ZERO:
      return "both-zero";
    default:
      return "not-proportional";
  }
}

const char* branch_status_name(sepchan_branch_status s) {
  switch (s) {
    case SEPCHAN_BRANCH_ZERO:
      return "zero";
    case SEPCHAN_BRANCH_PROPORTIONAL:
      return "proportional";
    default:
      return "not-proportional";
  }
}

}  // namespace

int cmd_schmidt(const GlobalOptions& g, const std::string& state_path) {
  PureHandle p = parse_pure_state_file(state_path, g.tol);
  int da = 0, db = 0;
  check_api(sepchan_pure_dims(p.get(), &da, &db), state_path);
  SchmidtHandle s;
  check_api(sepchan_schmidt_decompose(p.get(), g.tol, s.out()), state_path);
  std::vector<double> w(static_cast<size_t>(sepchan_schmidt_count(s.get())));
  check_api(sepchan_schmidt_weights(s.get(), w.data(), w.size()), state_path);
  const int rank = sepchan_schmidt_get_rank(s.get());

  Json dims = Json::array();
  dims.push(da);
  dims.push(db);
  Json payload = Json::object();
  payload.set("dims", std::move(dims));
  payload.set("weights", weights_json(w));
  payload.set("rank", rank);

  print_report(g, "schmidt", std::nullopt, std::move(payload),
               {"state: " + state_path,
                "dims: " + std::to_string(da) + "x" + std::to_string(db),
                "schmidt weights: " + weights_text(w),
                "schmidt rank: " + std::to_string(rank)});
  return 0;
}

int cmd_span_scan(const GlobalOptions& g, const std::string& path1,
                  const std::string& path2) {
  PureHandle p1 = parse_pure_state_file(path1, g.tol);
  PureHandle p2 = parse_pure_state_file(path2, g.tol);
  SpanReportHandle r;
  check_api(sepchan_span_scan(p1.get(), p2.get(), g.tol, r.out()),
            "span-scan");

  const sepchan_span_verdict verdict = sepchan_span_report_verdict(r.get());
  const char* verdict_name = verdict == SEPCHAN_SPAN_NO_PRODUCT
                                 ? "no-product"
                                 : (verdict == SEPCHAN_SPAN_FINITE_SET
                                        ? "finite-set"
                                        : "all-of-span");
  Json witnesses = Json::array();
  std::vector<std::string> lines{"verdict: " + std::string(verdict_name)};
  for (int i = 0; i < sepchan_span_report_witness_count(r.get()); ++i) {
    double cr = 0, ci = 0, dr = 0, di = 0;
    check_api(sepchan_span_report_witness(r.get(), i, &cr, &ci, &dr, &di),
              "span-scan");
    Json w = Json::object();
    w.set("c", complex_json(cr, ci));
    w.set("d", complex_json(dr, di));
    witnesses.push(std::move(w));
    lines.push_back("witness " + std::to_string(i) + ": c=(" + fmt(cr) + ", " +
                    fmt(ci) + ") d=(" + fmt(dr) + ", " + fmt(di) + ")");
  }
  Json payload = Json::object();
  payload.set("verdict", verdict_name);
  payload.set("witnesses", std::move(witnesses));
  print_report(g, "span-scan", std::nullopt, std::move(payload), lines);
  return 0;
}

int cmd_channel_verify(const GlobalOptions& g,
                       const std::string& channel_path) {
  ChannelHandle ch = parse_channel_file(channel_path);
  double deviation = 0.0;
  int complete = 0;
  check_api(sepchan_channel_validate(ch.get(), g.tol, &deviation, &complete),
            channel_path);

  Json payload = Json::object();
  payload.set("completeness_deviation", deviation);
  payload.set("complete", complete != 0);
  std::vector<std::string> lines{
      "channel: " + channel_path,
      "operators: " +
          std::to_string(sepchan_channel_operator_count(ch.get())),
      "completeness deviation: " + fmt(deviation) + (complete ? "  [ok]"
                                                              : "  [FAIL]")};

  SepReportHandle sep;
  const sepchan_status sep_status =
      sepchan_channel_is_separable(ch.get(), g.tol, sep.out());
  if (sep_status == SEPCHAN_ERR_UNSUPPORTED) {
    payload.set("separable", nullptr);
    lines.push_back("separability: not applicable (rectangular channel)");
  } else {
    check_api(sep_status, channel_path);
    const bool separable = sepchan_sep_report_separable(sep.get()) != 0;
    payload.set("separable", separable);
    Json ops = Json::array();
    int product_count = 0;
    for (int i = 0; i < sepchan_sep_report_count(sep.get()); ++i) {
      int is_product = 0;
      double second = 0.0, residual = 0.0;
      check_api(sepchan_sep_report_operator(sep.get(), i, &is_product, &second,
                                            &residual),
                channel_path);
      product_count += is_product;
      Json op = Json::object();
      op.set("index", i);
      op.set("product", is_product != 0);
      op.set("second_singular_value", second);
      op.set("residual", residual);
      ops.push(std::move(op));
      lines.push_back("  op " + std::to_string(i) + ": " +
                      (is_product ? "product" : "NOT product") +
                      ", second singular value " + fmt(second) +
                      ", residual " + fmt(residual));
    }
    payload.set("operators", std::move(ops));
    lines.insert(lines.begin() + 3,
                 "separable: " + std::string(separable ? "yes" : "no") + " (" +
                     std::to_string(product_count) + "/" +
                     std::to_string(sepchan_sep_report_count(sep.get())) +
                     " operators factor)");
  }

  print_report(g, "channel-verify", complete != 0, std::move(payload), lines);
  return complete ? 0 : 1;
}

int cmd_channel_apply(const GlobalOptions& g, const std::string& channel_path,
                      const std::string& state_path,
                      const std::optional<std::string>& out_path) {
  ChannelHandle ch = parse_channel_file(channel_path);
  DensityHandle rho = state_as_density(parse_state_file(state_path, g.tol));

  DensityHandle result;
  const sepchan_status status =
      sepchan_channel_apply(ch.get(), rho.get(), g.tol, result.out());
  if (status == SEPCHAN_ERR_VALIDATION) {
    return fail_check(g, "channel-apply", sepchan_last_error());
  }
  check_api(status, "channel-apply");

  Json density = emit_density(result.get());
  Json payload = Json::object();
  payload.set("density", std::move(density));
  std::vector<std::string> lines{"channel: " + channel_path,
                                 "input: " + state_path};
  if (out_path.has_value()) {
    write_file(*out_path, dump(emit_density(result.get())) + "\n");
    payload.set("written", *out_path);
    lines.push_back("output written to " + *out_path);
  } else {
    lines.push_back("output density emitted in the JSON payload");
  }
  print_report(g, "channel-apply", std::nullopt, std::move(payload), lines);
  return 0;
}

int cmd_paper_emit(const GlobalOptions& g,
                   const std::optional<std::string>& channel_out,
                   const std::optional<std::string>& source_out, double p,
                   const std::optional<std::string>& target_out) {
  double alpha = 0.0, beta = 0.0;
  check_api(sepchan_paper_constants(&alpha, &beta), "paper-emit");
  ChannelHandle ch;
  check_api(sepchan_paper_channel(ch.out()), "paper-emit");

  Json payload = Json::object();
  payload.set("alpha", alpha);
  payload.set("beta", beta);
  payload.set("four_alpha_beta", 4.0 * alpha * beta);
  payload.set("alpha_beta_sq_plus_alpha", alpha * (beta * beta + 1.0));

  std::vector<std::string> lines{
      "alpha: " + fmt(alpha), "beta: " + fmt(beta),
      "4*alpha*beta: " + fmt(4.0 * alpha * beta),
      "alpha*(beta^2+1): " + fmt(alpha * (beta * beta + 1.0))};

  if (channel_out.has_value()) {
    write_file(*channel_out, dump(emit_channel(ch.get())) + "\n");
    payload.set("channel_written", *channel_out);
    lines.push_back("channel written to " + *channel_out);
  } else {
    payload.set("channel", emit_channel(ch.get()));
    lines.push_back("channel emitted in the JSON payload (6 operators)");
  }
  if (source_out.has_value()) {
    DensityHandle rho;
    check_api(sepchan_paper_source(p, rho.out()), "paper-emit");
    write_file(*source_out, dump(emit_density(rho.get())) + "\n");
    payload.set("source_written", *source_out);
    payload.set("source_p", p);
    lines.push_back("source rho(p=" + fmt(p) + ") written to " + *source_out);
  }
  if (target_out.has_value()) {
    PureHandle phi;
    check_api(sepchan_paper_target(phi.out()), "paper-emit");
    write_file(*target_out, dump(emit_pure(phi.get())) + "\n");
    payload.set("target_written", *target_out);
    lines.push_back("target written to " + *target_out);
  }
  print_report(g, "paper-emit", std::nullopt, std::move(payload), lines);
  return 0;
}

int cmd_distill_verify(const GlobalOptions& g,
                       const std::optional<std::string>& channel_path,
                       double p, const std::optional<std::string>& source_path,
                       const std::optional<std::string>& target_path) {
  ChannelHandle ch = load_channel_or_builtin(channel_path);
  DensityHandle rho;
  if (source_path.has_value()) {
    rho = state_as_density(parse_state_file(*source_path, g.tol));
  } else {
    check_api(sepchan_paper_source(p, rho.out()), "built-in source");
  }
  PureHandle phi;
  if (target_path.has_value()) {
    phi = parse_pure_state_file(*target_path, g.tol);
  } else {
    check_api(sepchan_paper_target(phi.out()), "built-in target");
  }

  DistillReportHandle r;
  const sepchan_status status =
      sepchan_distill_verify(ch.get(), rho.get(), phi.get(), g.tol, r.out());
  if (status == SEPCHAN_ERR_VALIDATION) {
    return fail_check(g, "distill-verify", sepchan_last_error());
  }
  check_api(status, "distill-verify");

  const bool success = sepchan_distill_report_success(r.get()) != 0;
  const int n_ops = sepchan_distill_report_operator_count(r.get());
  const int n_eigen = sepchan_distill_report_eigenstate_count(r.get());

  Json eigen_weights = Json::array();
  for (int i = 0; i < n_eigen; ++i) {
    double w = 0.0;
    check_api(sepchan_distill_report_eigen_weight(r.get(), i, &w),
              "distill-verify");
    eigen_weights.push(w);
  }

  std::vector<std::string> lines{
      "source eigenstates above tolerance: " + std::to_string(n_eigen),
      "kraus operators: " + std::to_string(n_ops)};

  Json per_operator = Json::array();
  for (int k = 0; k < n_ops; ++k) {
    Json probs = Json::array();
    Json coeffs = Json::array();
    Json statuses = Json::array();
    std::string branch_text = "  op " + std::to_string(k) + ":";
    for (int i = 0; i < n_eigen; ++i) {
      double prob = 0.0, coeff = 0.0;
      sepchan_branch_status st = SEPCHAN_BRANCH_ZERO;
      check_api(
          sepchan_distill_report_branch(r.get(), k, i, &prob, &coeff, &st),
          "distill-verify");
      probs.push(prob);
      coeffs.push(coeff);
      statuses.push(branch_status_name(st));
      branch_text += " psi" + std::to_string(i + 1) + ": p=" + fmt(prob) +
                     " (" + branch_status_name(st) + ")";
    }
    Json op = Json::object();
    op.set("index", k);
    op.set("probabilities", std::move(probs));
    op.set("coefficients", std::move(coeffs));
    op.set("statuses", std::move(statuses));
    per_operator.push(std::move(op));
    lines.push_back(branch_text);
  }

  Json totals = Json::array();
  for (int i = 0; i < n_eigen; ++i) {
    double t = 0.0;
    check_api(sepchan_distill_report_total_probability(r.get(), i, &t),
              "distill-verify");
    totals.push(t);
    lines.push_back("total probability for eigenstate " + std::to_string(i) +
                    ": " + fmt(t));
  }

  double input_fidelity = 0.0;
  check_api(sepchan_distill_report_input_fidelity(r.get(), &input_fidelity),
            "distill-verify");
  lines.push_back("fidelity of mapped input with target: " +
                  fmt(input_fidelity));

  Json grid = Json::array();
  double min_grid_fidelity = 1.0;
  for (int i = 0; i < sepchan_distill_report_grid_count(r.get()); ++i) {
    double gp = 0.0, gf = 0.0;
    check_api(sepchan_distill_report_grid_entry(r.get(), i, &gp, &gf),
              "distill-verify");
    Json entry = Json::array();
    entry.push(gp);
    entry.push(gf);
    grid.push(std::move(entry));
    min_grid_fidelity = std::min(min_grid_fidelity, gf);
  }
  if (sepchan_distill_report_grid_count(r.get()) > 0) {
    lines.push_back("minimum fidelity over the mixing grid: " +
                    fmt(min_grid_fidelity));
  }
  const std::string message = sepchan_distill_report_message(r.get());
  if (!message.empty()) lines.push_back("failure: " + message);

  Json payload = Json::object();
  payload.set("success", success);
  payload.set("eigen_weights", std::move(eigen_weights));
  payload.set("per_operator", std::move(per_operator));
  payload.set("total_probability", std::move(totals));
  payload.set("input_fidelity", input_fidelity);
  payload.set("fidelity_grid", std::move(grid));
  payload.set("message", message);

  print_report(g, "distill-verify", success, std::move(payload), lines);
  return success ? 0 : 1;
}

int cmd_case_analysis(const GlobalOptions& g,
                      const std::optional<std::string>& channel_path,
                      const std::optional<std::string>& psi1_path,
                      const std::optional<std::string>& psi2_path,
                      const std::optional<std::string>& phi_path) {
  ChannelHandle ch = load_channel_or_builtin(channel_path);
  PureHandle psi1, psi2, phi;
  if (psi1_path.has_value()) {
    psi1 = parse_pure_state_file(*psi1_path, g.tol);
  } else {
    check_api(sepchan_paper_psi1(psi1.out()), "built-in psi1");
  }
  if (psi2_path.has_value()) {
    psi2 = parse_pure_state_file(*psi2_path, g.tol);
  } else {
    check_api(sepchan_paper_psi2(psi2.out()), "built-in psi2");
  }
  if (phi_path.has_value()) {
    phi = parse_pure_state_file(*phi_path, g.tol);
  } else {
    check_api(sepchan_paper_target(phi.out()), "built-in phi");
  }

  CaseReportHandle r;
  const sepchan_status status = sepchan_case_analysis(
      ch.get(), psi1.get(), psi2.get(), phi.get(), g.tol, r.out());
  if (status == SEPCHAN_ERR_VALIDATION) {
    return fail_check(g, "case-analysis", sepchan_last_error());
  }
  check_api(status, "case-analysis");

  Json per_operator = Json::array();
  std::vector<std::string> lines;
  for (int k = 0; k < sepchan_case_report_count(r.get()); ++k) {
    double cr = 0, ci = 0, dr = 0, di = 0;
    sepchan_overlap_case kind = SEPCHAN_CASE_BOTH_ZERO;
    int rank_a = 0, rank_b = 0;
    check_api(sepchan_case_report_record(r.get(), k, &cr, &ci, &dr, &di,
                                         &kind, &rank_a, &rank_b),
              "case-analysis");
    Json rec = Json::object();
    rec.set("index", k);
    rec.set("c", complex_json(cr, ci));
    rec.set("d", complex_json(dr, di));
    rec.set("case", case_name(kind));
    rec.set("rank_a", rank_a);
    rec.set("rank_b", rank_b);

    int has_witness = 0, is_product = 0;
    double annihilation = 0.0;
    PureHandle witness;
    check_api(sepchan_case_report_witness(r.get(), k, &has_witness,
                                          &is_product, &annihilation,
                                          witness.out()),
              "case-analysis");
    std::string line = "  op " + std::to_string(k) + ": " + case_name(kind) +
                       " |c|=" + fmt(std::hypot(cr, ci)) +
                       " |d|=" + fmt(std::hypot(dr, di)) + " rank_a=" +
                       std::to_string(rank_a) + " rank_b=" +
                       std::to_string(rank_b);
    if (has_witness) {
      Json w = Json::object();
      w.set("is_product", is_product != 0);
      w.set("bob_annihilation", annihilation);
      w.set("state", emit_pure(witness.get()));
      rec.set("witness", std::move(w));
      line += std::string("; witness d*psi1-c*psi2 is ") +
              (is_product ? "a product vector" : "entangled") +
              ", ||(I(x)B)w|| = " + fmt(annihilation);
    } else {
      rec.set("witness", nullptr);
    }
    per_operator.push(std::move(rec));
    lines.push_back(std::move(line));
  }

  Json payload = Json::object();
  payload.set("per_operator", std::move(per_operator));
  print_report(g, "case-analysis", std::nullopt, std::move(payload), lines);
  return 0;
}

namespace {

int weights_pair_command(const GlobalOptions& g, const std::string& command,
                         const std::string& src_spec,
                         const std::string& tgt_spec, bool pass_is_majorize) {
  const std::vector<double> src = parse_weight_spec(src_spec, g.tol);
  const std::vector<double> tgt = parse_weight_spec(tgt_spec, g.tol);

  int majorized = 0;
  check_api(sepchan_majorization_check(src.data(), src.size(), tgt.data(),
                                       tgt.size(), &majorized),
            command);
  double pmax = 0.0;
  check_api(
      sepchan_vidal_pmax(src.data(), src.size(), tgt.data(), tgt.size(),
                         &pmax),
      command);

  Json payload = Json::object();
  payload.set("src_weights", weights_json(src));
  payload.set("tgt_weights", weights_json(tgt));
  if (pass_is_majorize) {
    payload.set("majorization", majorized != 0);
    payload.set("pmax", pmax);
  } else {
    payload.set("pmax", pmax);
    payload.set("majorization", majorized != 0);
  }
  std::vector<std::string> lines{
      "source weights: " + weights_text(src),
      "target weights: " + weights_text(tgt),
      "majorization (deterministic conversion): " +
          std::string(majorized ? "yes" : "no"),
      "maximum conversion probability: " + fmt(pmax)};

  if (pass_is_majorize) {
    print_report(g, command, majorized != 0, std::move(payload), lines);
    return majorized ? 0 : 1;
  }
  print_report(g, command, std::nullopt, std::move(payload), lines);
  return 0;
}

}  // namespace

int cmd_pmax(const GlobalOptions& g, const std::string& src_spec,
             const std::string& tgt_spec) {
  return weights_pair_command(g, "pmax", src_spec, tgt_spec, false);
}

int cmd_majorize(const GlobalOptions& g, const std::string& src_spec,
                 const std::string& tgt_spec) {
  return weights_pair_command(g, "majorize", src_spec, tgt_spec, true);
}

int cmd_locc_validate(const GlobalOptions& g,
                      const std::string& protocol_path) {
  ProtocolHandle proto = parse_protocol_file(protocol_path);
  ProtocolReportHandle r;
  check_api(sepchan_protocol_validate(proto.get(), g.tol, r.out()),
            protocol_path);

  Json nodes = Json::array();
  std::vector<std::string> lines{"protocol: " + protocol_path};
  for (int i = 0; i < sepchan_protocol_report_node_count(r.get()); ++i) {
    sepchan_party party = SEPCHAN_PARTY_ALICE;
    double deviation = 0.0;
    check_api(sepchan_protocol_report_node(r.get(), i, &party, &deviation),
              protocol_path);
    const std::string path = sepchan_protocol_report_node_path(r.get(), i);
    Json node = Json::object();
    node.set("path", path);
    node.set("party", party == SEPCHAN_PARTY_ALICE ? "alice" : "bob");
    node.set("completeness_deviation", deviation);
    nodes.push(std::move(node));
    lines.push_back("  node [" + (path.empty() ? std::string("root") : path) +
                    "] " + (party == SEPCHAN_PARTY_ALICE ? "alice" : "bob") +
                    ": deviation " + fmt(deviation));
  }
  double max_deviation = 0.0;
  check_api(sepchan_protocol_report_max_deviation(r.get(), &max_deviation),
            protocol_path);
  const bool complete = sepchan_protocol_report_complete(r.get()) != 0;
  const bool alternating = sepchan_protocol_report_alternating(r.get()) != 0;
  const int depth = sepchan_protocol_report_depth(r.get());

  Json payload = Json::object();
  payload.set("nodes", std::move(nodes));
  payload.set("max_deviation", max_deviation);
  payload.set("complete", complete);
  payload.set("alternating", alternating);
  payload.set("depth", depth);
  lines.push_back("max completeness deviation: " + fmt(max_deviation));
  lines.push_back("alternating: " + std::string(alternating ? "yes" : "no"));
  lines.push_back("depth: " + std::to_string(depth));

  print_report(g, "locc-validate", complete, std::move(payload), lines);
  return complete ? 0 : 1;
}

int cmd_locc_simulate(const GlobalOptions& g, const std::string& protocol_path,
                      const std::vector<std::string>& input_paths,
                      const std::vector<int>& check_pair, double cutoff) {
  ProtocolHandle proto = parse_protocol_file(protocol_path);
  std::vector<PureHandle> inputs;
  std::vector<const sepchan_pure*> raw;
  for (const std::string& path : input_paths) {
    inputs.push_back(parse_pure_state_file(path, g.tol));
    raw.push_back(inputs.back().get());
  }

  SimulationHandle sim;
  check_api(sepchan_simulate(proto.get(), raw.data(), raw.size(), cutoff,
                             sim.out()),
            protocol_path);

  const int n_branches = sepchan_simulation_branch_count(sim.get());
  const int n_inputs = sepchan_simulation_input_count(sim.get());
  Json branches = Json::array();
  std::vector<std::string> lines{
      "protocol: " + protocol_path,
      "inputs: " + std::to_string(n_inputs) + ", branches: " +
          std::to_string(n_branches)};
  for (int b = 0; b < n_branches; ++b) {
    Json per_input = Json::array();
    std::string line =
        "  branch " + std::string(sepchan_simulation_branch_id(sim.get(), b)) +
        ":";
    for (int i = 0; i < n_inputs; ++i) {
      double prob = 0.0;
      PureHandle post;
      check_api(sepchan_simulation_outcome(sim.get(), b, i, &prob, post.out()),
                protocol_path);
      Json outcome = Json::object();
      outcome.set("probability", prob);
      outcome.set("post", post ? emit_pure(post.get()) : Json(nullptr));
      per_input.push(std::move(outcome));
      line += " p[" + std::to_string(i) + "]=" + fmt(prob);
    }
    Json branch = Json::object();
    branch.set("id", std::string(sepchan_simulation_branch_id(sim.get(), b)));
    branch.set("per_input", std::move(per_input));
    branches.push(std::move(branch));
    lines.push_back(std::move(line));
  }

  Json payload = Json::object();
  payload.set("branches", std::move(branches));

  std::optional<bool> pass;
  int exit_code = 0;
  if (!check_pair.empty()) {
    ViolationsHandle v;
    check_api(sepchan_branch_nonvanishing_check(sim.get(), check_pair[0],
                                                check_pair[1], cutoff,
                                                v.out()),
              "branch check");
    Json violations = Json::array();
    for (int i = 0; i < sepchan_violations_count(v.get()); ++i) {
      int branch = 0, vanishing = 0, surviving = 0;
      check_api(sepchan_violations_get(v.get(), i, &branch, &vanishing,
                                       &surviving),
                "branch check");
      Json viol = Json::object();
      viol.set("branch_id",
               std::string(sepchan_violations_branch_id(v.get(), i)));
      viol.set("vanishing_input", vanishing);
      viol.set("surviving_input", surviving);
      violations.push(std::move(viol));
      lines.push_back("  violation at branch " +
                      std::string(sepchan_violations_branch_id(v.get(), i)) +
                      ": input " + std::to_string(vanishing) +
                      " vanishes, input " + std::to_string(surviving) +
                      " survives");
    }
    const int count = sepchan_violations_count(v.get());
    payload.set("violations", std::move(violations));
    lines.push_back("branch-nonvanishing violations: " +
                    std::to_string(count));
    pass = count == 0;
    exit_code = count == 0 ? 0 : 1;
  }

  print_report(g, "locc-simulate", pass, std::move(payload), lines);
  return exit_code;
}

int cmd_locc_nielsen(const GlobalOptions& g, const std::string& src_path,
                     const std::string& tgt_path,
                     const std::optional<std::string>& out_path) {
  PureHandle src = parse_pure_state_file(src_path, g.tol);
  PureHandle tgt = parse_pure_state_file(tgt_path, g.tol);

  ProtocolHandle proto;
  const sepchan_status status =
      sepchan_nielsen_rank2(src.get(), tgt.get(), g.tol, proto.out());
  if (status == SEPCHAN_ERR_VALIDATION) {
    return fail_check(g, "locc-nielsen", sepchan_last_error());
  }
  check_api(status, "locc-nielsen");

  ProtocolReportHandle vrep;
  check_api(sepchan_protocol_validate(proto.get(), g.tol, vrep.out()),
            "locc-nielsen");
  const bool complete = sepchan_protocol_report_complete(vrep.get()) != 0;

  const sepchan_pure* raw[1] = {src.get()};
  SimulationHandle sim;
  check_api(sepchan_simulate(proto.get(), raw, 1, 1e-12, sim.out()),
            "locc-nielsen");

  Json branches = Json::array();
  double total = 0.0;
  bool conversion_ok = true;
  std::vector<std::string> lines{"source: " + src_path,
                                 "target: " + tgt_path};
  for (int b = 0; b < sepchan_simulation_branch_count(sim.get()); ++b) {
    double prob = 0.0;
    PureHandle post;
    check_api(sepchan_simulation_outcome(sim.get(), b, 0, &prob, post.out()),
              "locc-nielsen");
    total += prob;
    double overlap = 0.0;
    if (post) {
      overlap = overlap_magnitude(post.get(), tgt.get());
      if (1.0 - overlap > g.tol) conversion_ok = false;
    }
    Json branch = Json::object();
    branch.set("id", std::string(sepchan_simulation_branch_id(sim.get(), b)));
    branch.set("probability", prob);
    branch.set("target_overlap", overlap);
    branches.push(std::move(branch));
    lines.push_back("  branch " +
                    std::string(sepchan_simulation_branch_id(sim.get(), b)) +
                    ": probability " + fmt(prob) + ", target overlap " +
                    fmt(overlap));
  }
  if (std::abs(total - 1.0) > g.tol) conversion_ok = false;
  lines.push_back("total conversion probability: " + fmt(total));

  Json payload = Json::object();
  payload.set("branches", std::move(branches));
  payload.set("total_probability", total);
  payload.set("protocol_complete", complete);
  payload.set("conversion_ok", conversion_ok);
  if (out_path.has_value()) {
    write_file(*out_path, dump(emit_protocol(proto.get())) + "\n");
    payload.set("protocol_written", *out_path);
    lines.push_back("protocol written to " + *out_path);
  } else {
    payload.set("protocol", emit_protocol(proto.get()));
  }

  const bool pass = complete && conversion_ok;
  print_report(g, "locc-nielsen", pass, std::move(payload), lines);
  return pass ? 0 : 1;
}

}  // namespace sepchan_cli
