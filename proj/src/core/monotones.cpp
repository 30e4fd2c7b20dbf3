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

#include "core/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sepchan {

namespace {

// Tails at or below this level are treated as exact zeros for the rank
// screening inside vidal_pmax.
constexpr double kZeroTail = 1e-12;

std::vector<double> padded(const std::vector<double>& w, size_t len) {
  std::vector<double> out = w;
  out.resize(len, 0.0);
  return out;
}

}  // namespace

SchmidtWeights make_weights(std::vector<double> weights, double tol) {
  if (weights.empty()) {
    throw InvalidArgument("schmidt weights: empty vector");
  }
  double sum = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= -tol && w <= 1.0 + tol) || !std::isfinite(w)) {
      std::ostringstream os;
      os << "schmidt weights: entry " << i << " = " << w << " outside [0, 1]";
      throw ValidationError(os.str());
    }
    if (i > 0 && weights[i] > weights[i - 1] + tol) {
      throw ValidationError("schmidt weights: not sorted descending");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream os;
    os << "schmidt weights: sum " << sum << " deviates from 1 beyond " << tol;
    throw ValidationError(os.str());
  }
  return SchmidtWeights{std::move(weights)};
}

SchmidtWeights weights_of(const PureState& psi, double tol) {
  const SchmidtDecomposition sd = schmidt_decompose(psi, tol);
  std::vector<double> w(sd.weights.data(), sd.weights.data() + sd.weights.size());
  return SchmidtWeights{std::move(w)};
}

bool majorization_check(const SchmidtWeights& src, const SchmidtWeights& tgt) {
  const size_t len = std::max(src.weights.size(), tgt.weights.size());
  const std::vector<double> s = padded(src.weights, len);
  const std::vector<double> t = padded(tgt.weights, len);
  double ps = 0.0, pt = 0.0;
  for (size_t k = 0; k < len; ++k) {
    ps += s[k];
    pt += t[k];
    if (ps > pt + 1e-12) return false;
  }
  return true;
}

double tail_sum(const SchmidtWeights& w, int l) {
  if (l < 1 || static_cast<size_t>(l) > w.weights.size()) {
    std::ostringstream os;
    os << "tail_sum: index " << l << " outside 1.." << w.weights.size();
    throw InvalidArgument(os.str());
  }
  double sum = 0.0;
  for (size_t i = static_cast<size_t>(l) - 1; i < w.weights.size(); ++i) {
    sum += w.weights[i];
  }
  return sum;
}

double vidal_pmax(const SchmidtWeights& src, const SchmidtWeights& tgt) {
  const size_t len = std::max(src.weights.size(), tgt.weights.size());
  const std::vector<double> s = padded(src.weights, len);
  const std::vector<double> t = padded(tgt.weights, len);

  double min_ratio = 1.0;
  double tail_s = 0.0, tail_t = 0.0;
  for (size_t i = len; i-- > 0;) {
    tail_s += s[i];
    tail_t += t[i];
    const bool s_zero = tail_s <= kZeroTail;
    const bool t_zero = tail_t <= kZeroTail;
    if (t_zero) continue;  // 0/0 reads as 1; x/0 poses no constraint
    if (s_zero) return 0.0;  // the target outranks the source here
    min_ratio = std::min(min_ratio, tail_s / tail_t);
  }
  return std::clamp(min_ratio, 0.0, 1.0);
}

Ensemble make_ensemble(std::vector<std::pair<double, DensityOperator>> members,
                       double tol) {
  if (members.empty()) {
    throw InvalidArgument("ensemble: empty member list");
  }
  double sum = 0.0;
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i].first <= 0.0) {
      throw ValidationError("ensemble: probabilities must be positive");
    }
    sum += members[i].first;
    if (!(members[i].second.dims == members[0].second.dims)) {
      throw DimensionMismatch("ensemble: members on different dims");
    }
  }
  if (std::abs(sum - 1.0) > tol) {
    std::ostringstream os;
    os << "ensemble: probabilities sum to " << sum;
    throw ValidationError(os.str());
  }
  return Ensemble{std::move(members)};
}

double ensemble_average_pmax(const Ensemble& ens, const PureState& phi,
                             double tol) {
  const SchmidtWeights target = weights_of(phi, tol);
  double avg = 0.0;
  for (size_t i = 0; i < ens.members.size(); ++i) {
    const auto& [prob, rho] = ens.members[i];
    if (!(rho.dims == phi.dims)) {
      throw DimensionMismatch("ensemble_average_pmax: dims mismatch");
    }
    const auto eig = eigendecompose(rho, 1e-12);
    if (eig.empty() || eig[0].first < 1.0 - 1e-8) {
      std::ostringstream os;
      os << "ensemble_average_pmax: member " << i
         << " is not pure (largest eigenvalue "
         << (eig.empty() ? 0.0 : eig[0].first) << ")";
      throw ValidationError(os.str());
    }
    avg += prob * vidal_pmax(weights_of(eig[0].second, tol), target);
  }
  return avg;
}

}  // namespace sepchan
