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

#ifndef SEPCHAN_CORE_SAMPLING_HPP
#define SEPCHAN_CORE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "core/channels.hpp"

namespace sepchan {

/// Deterministic, seedable randomness source for the samplers below.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::mt19937_64& engine() { return engine_; }

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

Complex randn_complex(Rng& rng);

/// Matrix with independent complex-normal entries.
Mat random_matrix(Rng& rng, int rows, int cols);

/// Haar-random unitary (QR of a Ginibre matrix with phase fixing).
Mat random_unitary(Rng& rng, int n);

PureState random_pure_state(Rng& rng, BipartiteDims dims);

/// Descending probabilities of the given length summing to 1.
std::vector<double> random_weights(Rng& rng, int len);

/// Complete Kraus channel: Ginibre operators whitened by the inverse square
/// root of their completeness sum.
KrausChannel random_channel(Rng& rng, BipartiteDims dims, int n_operators);

/// A random channel built from product Kraus operators. The operator set is
/// rescaled so the largest eigenvalue of sum E^dagger E is 1 and the deficit
/// is closed by appending its square root. completion_product records
/// whether that completion operator itself factors (when it does not, the
/// channel is complete but NOT separable and callers doing separable-channel
/// statistics must discard the sample).
struct SeparableChannelSample {
  KrausChannel channel;
  bool completion_appended = false;
  bool completion_product = true;
  bool separable = true;
};

SeparableChannelSample random_separable_channel(Rng& rng, BipartiteDims dims,
                                                int n_operators);

/// Two orthonormal states whose span contains no product vector (resamples
/// until product_vectors_in_span reports NoProduct).
std::pair<PureState, PureState> random_entangled_span_pair(
    Rng& rng, BipartiteDims dims, double tol = kDefaultTol,
    int max_attempts = 256);

/// Random pure state with Schmidt rank exactly 2 (weights bounded away from
/// 0 and 1), built from random local bases.
PureState random_rank2_state(Rng& rng, BipartiteDims dims);

}  // namespace sepchan

#endif
