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

#include "core/locc.hpp"

#include <cmath>
#include <sstream>

namespace sepchan {

ProtocolNode ProtocolNode::clone() const {
  ProtocolNode out(party);
  out.local_operators = local_operators;
  out.children.reserve(children.size());
  for (const auto& child : children) {
    out.children.push_back(
        child ? std::make_unique<ProtocolNode>(child->clone()) : nullptr);
  }
  return out;
}

namespace {

std::string path_string(const std::vector<int>& id) {
  std::string s;
  for (size_t i = 0; i < id.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(id[i]);
  }
  return s;
}

struct LocalDims {
  int alice = 0;  // 0 = not yet seen
  int bob = 0;
};

void walk_validate(const ProtocolNode& node, std::vector<int>& path,
                   LocalDims& dims, ProtocolValidationReport& report,
                   bool& alternating, int depth) {
  if (node.local_operators.empty()) {
    throw InvalidArgument("protocol node '" + path_string(path) +
                          "': empty operator list");
  }
  if (node.children.size() != node.local_operators.size()) {
    std::ostringstream os;
    os << "protocol node '" << path_string(path) << "': "
       << node.local_operators.size() << " operators but "
       << node.children.size() << " children";
    throw InvalidArgument(os.str());
  }
  const int n = static_cast<int>(node.local_operators[0].rows());
  int& expected = node.party == Party::Alice ? dims.alice : dims.bob;
  if (expected == 0) expected = n;
  for (const Mat& m : node.local_operators) {
    if (m.rows() != m.cols() || m.rows() != expected) {
      std::ostringstream os;
      os << "protocol node '" << path_string(path)
         << "': operator shape inconsistent with the party's local dimension "
         << expected;
      throw DimensionMismatch(os.str());
    }
    ensure_finite(m, "protocol operator");
  }

  Mat sum = Mat::Zero(n, n);
  for (const Mat& m : node.local_operators) sum += m.adjoint() * m;
  NodeCheck check;
  check.path = path_string(path);
  check.party = node.party;
  check.completeness_deviation = (sum - Mat::Identity(n, n)).norm();
  report.max_deviation =
      std::max(report.max_deviation, check.completeness_deviation);
  report.nodes.push_back(std::move(check));
  report.depth = std::max(report.depth, depth);

  for (size_t j = 0; j < node.children.size(); ++j) {
    if (!node.children[j]) continue;
    if (node.children[j]->party == node.party) alternating = false;
    path.push_back(static_cast<int>(j));
    walk_validate(*node.children[j], path, dims, report, alternating,
                  depth + 1);
    path.pop_back();
  }
}

}  // namespace

ProtocolValidationReport validate_protocol(const ProtocolNode& root,
                                           double tol) {
  ProtocolValidationReport report;
  bool alternating = true;
  LocalDims dims;
  std::vector<int> path;
  walk_validate(root, path, dims, report, alternating, 1);
  report.alternating = alternating;
  report.complete = report.max_deviation <= tol;
  return report;
}

namespace {

struct SimContext {
  BipartiteDims dims;
  double cutoff = kBranchCutoff;
  std::vector<BranchRecord>* out = nullptr;
};

void walk_simulate(const ProtocolNode& node, std::vector<int>& path,
                   const Mat& net, const std::vector<Vec>& vectors,
                   const SimContext& ctx) {
  if (node.local_operators.empty() ||
      node.children.size() != node.local_operators.size()) {
    throw InvalidArgument("simulate: malformed protocol node at '" +
                          path_string(path) + "'");
  }
  const int local = node.party == Party::Alice ? ctx.dims.dim_a
                                               : ctx.dims.dim_b;
  for (size_t j = 0; j < node.local_operators.size(); ++j) {
    const Mat& m = node.local_operators[j];
    if (m.rows() != local || m.cols() != local) {
      throw DimensionMismatch(
          "simulate: protocol operator does not match the input dims");
    }
    const Mat lifted =
        node.party == Party::Alice
            ? tensor_product(m, Mat(Mat::Identity(ctx.dims.dim_b,
                                                  ctx.dims.dim_b)))
            : tensor_product(Mat(Mat::Identity(ctx.dims.dim_a,
                                               ctx.dims.dim_a)),
                             m);
    std::vector<Vec> next;
    next.reserve(vectors.size());
    for (const Vec& v : vectors) next.push_back(lifted * v);
    Mat next_net = lifted * net;

    path.push_back(static_cast<int>(j));
    if (node.children[j]) {
      walk_simulate(*node.children[j], path, next_net, next, ctx);
    } else {
      BranchRecord record;
      record.branch_id = path;
      record.net_operator = std::move(next_net);
      for (Vec& v : next) {
        BranchOutcome outcome;
        outcome.probability = v.squaredNorm();
        if (outcome.probability > ctx.cutoff) {
          v /= v.norm();
          outcome.post = make_pure(ctx.dims, std::move(v));
        }
        record.per_input.push_back(std::move(outcome));
      }
      ctx.out->push_back(std::move(record));
    }
    path.pop_back();
  }
}

}  // namespace

std::vector<BranchRecord> simulate(const ProtocolNode& root,
                                   const std::vector<PureState>& inputs,
                                   double cutoff) {
  if (inputs.empty()) {
    throw InvalidArgument("simulate: needs at least one input state");
  }
  for (const PureState& psi : inputs) {
    if (!(psi.dims == inputs[0].dims)) {
      throw DimensionMismatch("simulate: inputs on different dims");
    }
  }
  SimContext ctx;
  ctx.dims = inputs[0].dims;
  ctx.cutoff = cutoff;
  std::vector<BranchRecord> records;
  ctx.out = &records;

  std::vector<Vec> vectors;
  vectors.reserve(inputs.size());
  for (const PureState& psi : inputs) vectors.push_back(psi.amplitudes);
  const int total = ctx.dims.total();
  std::vector<int> path;
  walk_simulate(root, path, Mat(Mat::Identity(total, total)), vectors, ctx);
  return records;
}

std::vector<NonvanishingViolation> branch_nonvanishing_check(
    const std::vector<BranchRecord>& records, int input_i, int input_j,
    double cutoff) {
  std::vector<NonvanishingViolation> violations;
  for (size_t b = 0; b < records.size(); ++b) {
    const auto& per_input = records[b].per_input;
    if (input_i < 0 || input_j < 0 ||
        static_cast<size_t>(input_i) >= per_input.size() ||
        static_cast<size_t>(input_j) >= per_input.size()) {
      throw InvalidArgument("branch_nonvanishing_check: input index range");
    }
    const bool alive_i = per_input[input_i].probability > cutoff;
    const bool alive_j = per_input[input_j].probability > cutoff;
    if (alive_i != alive_j) {
      NonvanishingViolation v;
      v.branch_index = static_cast<int>(b);
      v.branch_id = records[b].branch_id;
      v.vanishing_input = alive_i ? input_j : input_i;
      v.surviving_input = alive_i ? input_i : input_j;
      violations.push_back(std::move(v));
    }
  }
  return violations;
}

namespace {

// Permutation of the first two basis slots, identity elsewhere.
Mat swap01(int n) {
  Mat s = Mat::Identity(n, n);
  if (n >= 2) {
    s(0, 0) = Complex(0, 0);
    s(1, 1) = Complex(0, 0);
    s(0, 1) = Complex(1, 0);
    s(1, 0) = Complex(1, 0);
  }
  return s;
}

}  // namespace

ProtocolNode nielsen_rank2_protocol(const PureState& src, const PureState& tgt,
                                    double tol) {
  if (!(src.dims == tgt.dims)) {
    throw DimensionMismatch("nielsen_rank2_protocol: dims mismatch");
  }
  const SchmidtDecomposition sd_src = schmidt_decompose(src, tol);
  const SchmidtDecomposition sd_tgt = schmidt_decompose(tgt, tol);
  if (sd_src.rank > 2 || sd_tgt.rank > 2) {
    throw Unsupported("nielsen_rank2_protocol: Schmidt rank above 2");
  }
  const double p = sd_src.weights[0];
  const double q = sd_tgt.weights[0];
  if (p > q + 1e-12) {
    std::ostringstream os;
    os << "nielsen_rank2_protocol: majorization violation (source leading "
          "weight "
       << p << " exceeds target leading weight " << q << ")";
    throw ValidationError(os.str());
  }

  // Branch weights from q*N1 + (1-q)*N2 = p with N1 + N2 = 1. When q = 1/2
  // the majorized, sorted p equals 1/2 as well and one branch suffices.
  const double n1 = (q - 0.5 > 1e-12) ? (p + q - 1.0) / (2.0 * q - 1.0) : 1.0;
  const double n2 = 1.0 - n1;
  const bool two_branches = n2 > 1e-12;

  const int da = src.dims.dim_a;
  const int db = src.dims.dim_b;
  const Mat& u = sd_src.left_vectors;
  const Mat& v = sd_src.right_vectors;
  const Mat& u_t = sd_tgt.left_vectors;
  const Mat& v_t = sd_tgt.right_vectors;

  const double x1 = std::sqrt(q * n1 / p);
  const double y1 =
      (1.0 - p > 1e-12) ? std::sqrt((1.0 - q) * n1 / (1.0 - p)) : 1.0;

  auto diag_weights = [&](double x, double y, double kernel) {
    Mat d = Mat::Zero(da, da);
    d(0, 0) = x;
    if (da >= 2) d(1, 1) = y;
    for (int k = 2; k < da; ++k) d(k, k) = kernel;
    return d;
  };

  ProtocolNode root(Party::Alice);
  auto bob_leaf = [&](const Mat& correction) {
    auto node = std::make_unique<ProtocolNode>(Party::Bob);
    node->local_operators.push_back(correction);
    node->children.push_back(nullptr);
    return node;
  };

  if (!two_branches) {
    root.local_operators.push_back(
        Mat(u_t * diag_weights(x1, y1, 1.0) * u.adjoint()));
    root.children.push_back(bob_leaf(Mat(v_t * v.adjoint())));
    return root;
  }

  const double x2 = std::sqrt((1.0 - q) * n2 / p);
  const double y2 = std::sqrt(q * n2 / (1.0 - p));
  root.local_operators.push_back(
      Mat(u_t * diag_weights(x1, y1, std::sqrt(n1)) * u.adjoint()));
  root.local_operators.push_back(
      Mat(u_t * swap01(da) * diag_weights(x2, y2, std::sqrt(n2)) *
          u.adjoint()));
  root.children.push_back(bob_leaf(Mat(v_t * v.adjoint())));
  root.children.push_back(bob_leaf(Mat(v_t * swap01(db) * v.adjoint())));
  return root;
}

}  // namespace sepchan
