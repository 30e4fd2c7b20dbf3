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

#ifndef SEPCHAN_CORE_LOCC_HPP
#define SEPCHAN_CORE_LOCC_HPP

#include <memory>
#include <string>
#include <vector>

#include "core/channels.hpp"

namespace sepchan {

enum class Party { Alice, Bob };

/// One measurement round: the acting party applies a complete set of local
/// Kraus operators; each outcome either ends the protocol (null child) or
/// hands control to the next node.
struct ProtocolNode {
  Party party = Party::Alice;
  std::vector<Mat> local_operators;
  std::vector<std::unique_ptr<ProtocolNode>> children;  // one per operator

  ProtocolNode() = default;
  explicit ProtocolNode(Party p) : party(p) {}
  ProtocolNode(ProtocolNode&&) = default;
  ProtocolNode& operator=(ProtocolNode&&) = default;

  ProtocolNode clone() const;
};

struct NodeCheck {
  std::string path;  // outcome indices from the root, "" for the root
  Party party = Party::Alice;
  double completeness_deviation = 0.0;
};

struct ProtocolValidationReport {
  std::vector<NodeCheck> nodes;
  double max_deviation = 0.0;
  bool complete = false;     // all nodes within tol
  bool alternating = false;  // parties strictly alternate along every path
  int depth = 0;
};

/// Checks per-node completeness and party alternation. Non-alternating
/// trees are reported, not rejected. Throws on structural defects
/// (child-count mismatch, empty operator list, inconsistent local dims).
ProtocolValidationReport validate_protocol(const ProtocolNode& root,
                                           double tol = kDefaultTol);

/// One leaf of the outcome tree with the accumulated net operator and the
/// per-input branch data.
struct BranchRecord {
  std::vector<int> branch_id;  // outcome indices from the root
  Mat net_operator;            // product of lifted locals along the path
  std::vector<BranchOutcome> per_input;
};

/// Depth-first enumeration of all leaves. Local operators are lifted as
/// M (x) I or I (x) M according to the acting party. Zero-probability
/// branches are retained with absent posts.
std::vector<BranchRecord> simulate(const ProtocolNode& root,
                                   const std::vector<PureState>& inputs,
                                   double cutoff = kBranchCutoff);

/// A leaf where exactly one of the two chosen inputs survives. Any such
/// leaf certifies that the protocol cannot deterministically map every
/// mixture of the two inputs to one pure state.
struct NonvanishingViolation {
  int branch_index = 0;
  std::vector<int> branch_id;
  int vanishing_input = 0;
  int surviving_input = 0;
};

std::vector<NonvanishingViolation> branch_nonvanishing_check(
    const std::vector<BranchRecord>& records, int input_i, int input_j,
    double cutoff = kBranchCutoff);

/// Builds a two-round protocol (Alice measurement, Bob corrective unitary)
/// that deterministically converts src into tgt. Requires both states to
/// have Schmidt rank <= 2 and src's weights to be majorized by tgt's.
ProtocolNode nielsen_rank2_protocol(const PureState& src, const PureState& tgt,
                                    double tol = kDefaultTol);

}  // namespace sepchan

#endif
