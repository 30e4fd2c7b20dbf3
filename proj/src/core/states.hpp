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

#ifndef SEPCHAN_CORE_STATES_HPP
#define SEPCHAN_CORE_STATES_HPP

#include <utility>
#include <vector>

#include "core/tensor.hpp"

namespace sepchan {

/// Unit-norm amplitude vector over the product basis |i>_A |j>_B, with
/// amplitudes[i * dim_b + j] = <ij|psi>.
struct PureState {
  BipartiteDims dims;
  Vec amplitudes;
};

/// Hermitian, positive semidefinite, trace-1 operator on the bipartite space.
struct DensityOperator {
  BipartiteDims dims;
  Mat matrix;
};

/// Schmidt data of a bipartite pure state. weights are the squared Schmidt
/// coefficients (descending, summing to 1); left/right vectors are full
/// orthonormal local bases whose leading columns carry the state.
struct SchmidtDecomposition {
  RealVec weights;
  Mat left_vectors;   // dim_a x dim_a
  Mat right_vectors;  // dim_b x dim_b
  int rank = 0;
  double tol = kDefaultTol;
};

enum class SpanVerdict { NoProduct, FiniteSet, AllOfSpan };

/// Projective coefficients (c, d), normalized so max(|c|, |d|) = 1, whose
/// combination c*psi1 + d*psi2 is a product vector.
struct SpanWitness {
  Complex c;
  Complex d;
};

/// Classification of the product vectors inside span{psi1, psi2}.
struct SpanProductReport {
  SpanVerdict verdict = SpanVerdict::NoProduct;
  std::vector<SpanWitness> witnesses;
};

/// Builds a validated PureState. With normalize set, the amplitudes are
/// rescaled to unit norm (rejecting near-zero vectors); otherwise a norm
/// deviating from 1 beyond tol is rejected.
PureState make_pure(BipartiteDims dims, Vec amplitudes, bool normalize = false,
                    double tol = kDefaultTol);

/// Builds a validated DensityOperator (Hermitian within tol, eigenvalues
/// >= -tol, trace 1 within tol).
DensityOperator make_density(BipartiteDims dims, Mat matrix,
                             double tol = kDefaultTol);

DensityOperator density_from_pure(const PureState& psi);

/// The dim_a x dim_b matrix C with C(i, j) = amplitudes[i * dim_b + j].
Mat coefficient_matrix(const PureState& psi);

/// Sum_i sqrt(weights[i]) * left.col(i) (x) right.col(i), validated.
PureState state_from_schmidt(BipartiteDims dims,
                             const std::vector<double>& weights,
                             const Mat& left_basis, const Mat& right_basis);

Complex inner_product(const PureState& a, const PureState& b);

/// 1 - |<a|b>| <= tol, i.e. equality up to global phase.
bool proportional_up_to_phase(const PureState& a, const PureState& b,
                              double tol);

SchmidtDecomposition schmidt_decompose(const PureState& psi,
                                       double tol = kDefaultTol);

/// Number of Schmidt weights above tol; 1 exactly for product states.
int schmidt_rank(const PureState& psi, double tol = kDefaultTol);

/// Spectral decomposition restricted to eigenvalues above tol, weights
/// descending, eigenstates orthonormal.
std::vector<std::pair<double, PureState>> eigendecompose(
    const DensityOperator& rho, double tol = kDefaultTol);

/// <phi| rho |phi>.
double fidelity_with_pure(const DensityOperator& rho, const PureState& phi);

/// Classifies every product vector in span{psi1, psi2} by finding the common
/// roots of all 2x2 minors of the pencil M1 + t*M2 of coefficient matrices
/// (t = infinity, i.e. psi2 alone, is tested separately). Inputs must be
/// linearly independent and live on dims with dim_a, dim_b >= 2.
SpanProductReport product_vectors_in_span(const PureState& psi1,
                                          const PureState& psi2,
                                          double tol = kDefaultTol);

}  // namespace sepchan

#endif
