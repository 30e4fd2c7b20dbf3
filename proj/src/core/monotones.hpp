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

#ifndef SEPCHAN_CORE_MONOTONES_HPP
#define SEPCHAN_CORE_MONOTONES_HPP

#include <vector>

#include "core/states.hpp"

namespace sepchan {

/// Descending probabilities summing to 1 — a Schmidt weight spectrum.
struct SchmidtWeights {
  std::vector<double> weights;
};

/// Validates (descending, in [0,1], summing to 1 within tol).
SchmidtWeights make_weights(std::vector<double> weights,
                            double tol = kDefaultTol);

SchmidtWeights weights_of(const PureState& psi, double tol = kDefaultTol);

/// Prefix-sum dominance: true iff every prefix sum of src is at most the
/// matching prefix sum of tgt (within 1e-12 slack; vectors zero-padded to a
/// common length). This is the deterministic pure-state convertibility
/// criterion.
bool majorization_check(const SchmidtWeights& src, const SchmidtWeights& tgt);

/// Sum of weights from 1-based position l to the end.
double tail_sum(const SchmidtWeights& w, int l);

/// Maximum conversion probability between pure states with these spectra:
/// min over l of tail_sum(src, l) / tail_sum(tgt, l), with 0/0 read as 1,
/// clamped to [0, 1]. Returns 0 when the target rank exceeds the source
/// rank.
double vidal_pmax(const SchmidtWeights& src, const SchmidtWeights& tgt);

/// Probability-weighted list of density operators.
struct Ensemble {
  std::vector<std::pair<double, DensityOperator>> members;
};

Ensemble make_ensemble(std::vector<std::pair<double, DensityOperator>> members,
                       double tol = kDefaultTol);

/// Average of the pure-state conversion probability toward phi over an
/// ensemble of (near-)pure members. Members whose largest eigenvalue falls
/// below 1 - 1e-8 are rejected: the mixed-state monotone is out of scope.
double ensemble_average_pmax(const Ensemble& ens, const PureState& phi,
                             double tol = kDefaultTol);

}  // namespace sepchan

#endif
