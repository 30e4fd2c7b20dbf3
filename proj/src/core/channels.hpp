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

#ifndef SEPCHAN_CORE_CHANNELS_HPP
#define SEPCHAN_CORE_CHANNELS_HPP

#include <optional>
#include <vector>

#include "core/states.hpp"

namespace sepchan {

/// Ordered Kraus operator collection. Completeness (sum E_k^dagger E_k = I)
/// is a checked property via validate_channel, not a construction guarantee.
struct KrausChannel {
  BipartiteDims dims_in;
  BipartiteDims dims_out;
  std::vector<Mat> operators;  // each (out total) x (in total)
};

/// Verifies operator shapes and that at least one operator is present.
KrausChannel make_channel(BipartiteDims dims_in, BipartiteDims dims_out,
                          std::vector<Mat> operators);

struct CompletenessReport {
  double deviation = 0.0;  // ||sum E_k^dagger E_k - I||_F
  bool pass = false;
};

CompletenessReport validate_channel(const KrausChannel& ch,
                                    double tol = kDefaultTol);

/// sum_k E_k rho E_k^dagger, re-validated as a DensityOperator.
/// Throws ValidationError when the channel fails completeness at tol.
DensityOperator apply_to_density(const KrausChannel& ch,
                                 const DensityOperator& rho,
                                 double tol = kDefaultTol);

/// Outcome of a single Kraus branch on a pure input.
struct BranchOutcome {
  double probability = 0.0;           // ||E psi||^2
  std::optional<PureState> post;      // E psi normalized; absent below cutoff
};

/// out_dims defaults to the input dims (square operators).
BranchOutcome apply_branch(const Mat& e, const PureState& psi,
                           double cutoff = kBranchCutoff,
                           std::optional<BipartiteDims> out_dims = {});

/// Product factorization E = a_factor (x) b_factor with the gauge
/// ||a_factor||_F = 1 and its largest-magnitude entry real positive.
struct ProductFactorization {
  Mat a_factor;
  Mat b_factor;
  double residual = 0.0;  // ||E - a (x) b||_F
};

/// factor_product result: factors present iff the realignment is rank 1
/// at tol (second singular value <= tol * first).
struct FactorResult {
  std::optional<ProductFactorization> factorization;
  double second_singular_value = 0.0;
};

/// Realignment-based product test and factor extraction for a square
/// operator on dims. Zero operators factor as products by convention.
FactorResult factor_product(const Mat& e, BipartiteDims dims,
                            double tol = kDefaultTol);

/// Per-operator product factorization report; the channel is separable iff
/// every Kraus operator factorizes.
struct SeparabilityReport {
  bool separable = false;
  std::vector<FactorResult> per_operator;
};

SeparabilityReport is_separable(const KrausChannel& ch,
                                double tol = kDefaultTol);

}  // namespace sepchan

#endif
