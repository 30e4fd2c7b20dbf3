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

#ifndef SEPCHAN_CORE_DISTILL_HPP
#define SEPCHAN_CORE_DISTILL_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/channels.hpp"

namespace sepchan {

/// The constants behind the built-in six-operator channel. They satisfy
/// 4*alpha*beta = 1 and alpha*(beta^2 + 1) = 1, which is what makes the
/// channel complete and its target normalized.
struct PaperConstants {
  double alpha;  // (2 - sqrt(3)) / 4
  double beta;   // 2 + sqrt(3)
};

PaperConstants paper_constants();

/// The built-in six-operator separable channel on 3x3, assembled from its
/// local factors via tensor_product.
KrausChannel paper_channel();

/// psi1 = (|01> + |10>) / sqrt(2) on 3x3.
PureState paper_psi1();

/// psi2 = (|02> + |20>) / sqrt(2) on 3x3.
PureState paper_psi2();

/// rho(p) = p |psi1><psi1| + (1-p) |psi2><psi2|.
DensityOperator paper_source(double p);

/// phi = sqrt(alpha) (beta |00> + |11>).
PureState paper_target();

enum class BranchStatus { Zero, Proportional, NotProportional };

/// Per-Kraus record of a distillation check: branch data for every source
/// eigenstate.
struct DistillOperatorRecord {
  int op_index = 0;
  std::vector<double> probability;            // per eigenstate
  std::vector<double> coefficient_magnitude;  // |<phi|E psi_i>| per eigenstate
  std::vector<BranchStatus> status;           // per eigenstate
  bool pass = true;
  std::string reason;  // empty when pass
};

struct DistillationReport {
  bool success = false;
  std::vector<double> eigen_weights;           // descending, above tol
  std::vector<DistillOperatorRecord> per_operator;
  std::vector<double> total_probability;       // per eigenstate, should be 1
  double input_fidelity = 0.0;                 // fidelity of E(rho) with phi
  // Fidelity sweep p -> fidelity(E(p psi_1 + (1-p) psi_2), phi) over the two
  // leading eigenstates (present when the source has rank >= 2).
  std::vector<std::pair<double, double>> fidelity_grid;
  std::string failure_reason;  // empty when success
};

/// Checks that the channel deterministically maps rho to |phi><phi|: every
/// Kraus branch output on every eigenstate of rho must vanish or be
/// proportional to phi, branch probabilities must total 1 per eigenstate,
/// and the basis-independent fidelity checks must reach 1 - tol.
DistillationReport verify_deterministic_distillation(const KrausChannel& ch,
                                                     const DensityOperator& rho,
                                                     const PureState& phi,
                                                     double tol = kDefaultTol);

enum class OverlapCase { BothNonzero, OneNonzero, BothZero, NotProportional };

/// Per-Kraus record of the two-eigenstate case analysis: scalars c, d with
/// (A (x) B) psi_1 = c phi and (A (x) B) psi_2 = d phi, the case they land
/// in, local factor ranks, and (for BothNonzero) the candidate product
/// vector d psi_1 - c psi_2 together with its diagnostics.
struct CaseRecord {
  int op_index = 0;
  Complex c{0.0, 0.0};
  Complex d{0.0, 0.0};
  OverlapCase kind = OverlapCase::BothZero;
  int rank_a = 0;
  int rank_b = 0;
  std::optional<PureState> witness;
  bool witness_is_product = false;
  double witness_bob_annihilation = 0.0;  // ||(I (x) b_factor) witness||
};

struct CaseAnalysisReport {
  std::vector<CaseRecord> per_operator;
};

/// The impossibility-proof dichotomy, evaluated per Kraus operator of a
/// separable channel. Throws ValidationError when the channel is not
/// separable at tol; psi1, psi2 must be linearly independent.
CaseAnalysisReport thm1_case_analysis(const KrausChannel& ch,
                                      const PureState& psi1,
                                      const PureState& psi2,
                                      const PureState& phi,
                                      double tol = kDefaultTol);

}  // namespace sepchan

#endif
