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

#ifndef SEPCHAN_CORE_TENSOR_HPP
#define SEPCHAN_CORE_TENSOR_HPP

#include <complex>

#include <Eigen/Dense>

#include "core/errors.hpp"

namespace sepchan {

using Complex = std::complex<double>;

// Row-major storage so that flattened matrices and serialized data agree
// entry for entry.
using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealVec = Eigen::VectorXd;

/// Default cap on the total bipartite dimension dim_a * dim_b.
inline constexpr int kDefaultMaxDim = 16;
/// Default tolerance for rank decisions and invariant checks.
inline constexpr double kDefaultTol = 1e-10;
/// Default cutoff below which a branch probability counts as zero.
inline constexpr double kBranchCutoff = 1e-12;

/// Local dimensions of a bipartite system (Alice x Bob).
struct BipartiteDims {
  int dim_a = 1;
  int dim_b = 1;

  int total() const { return dim_a * dim_b; }
  bool operator==(const BipartiteDims&) const = default;
};

/// Validates local dimensions against the configured cap.
BipartiteDims make_dims(int dim_a, int dim_b, int max_total = kDefaultMaxDim);

/// Full SVD, singular values sorted descending.
struct SvdResult {
  Mat left_vectors;        // rows x rows, orthonormal columns
  RealVec singular_values; // min(rows, cols), descending, >= 0
  Mat right_vectors;       // cols x cols, orthonormal columns
};

/// Throws InvalidArgument if any entry is NaN or infinite.
void ensure_finite(const Mat& m, const char* what);

/// Kronecker product with the block layout
/// (a (x) b)[i*rows_b + k, j*cols_b + l] = a[i,j] * b[k,l].
/// Throws InvalidArgument when the result would exceed max_dim per side.
Mat tensor_product(const Mat& a, const Mat& b, int max_dim = kDefaultMaxDim);

/// Full SVD. Verifies the reconstruction error; a violation is reported as
/// NumericalError together with condition diagnostics of the input.
/// The zero matrix yields all-zero singular values with identity bases.
SvdResult svd(const Mat& m);

/// U * diag(s) * V^dagger with the rectangular diagonal implied by (rows, cols).
Mat svd_reconstruct(const SvdResult& s, int rows, int cols);

/// Operator realignment for a square operator on dims. The result R is
/// dim_a^2 x dim_b^2 with
///   R[i*dim_a + j, k*dim_b + l] = e[i*dim_b + k, j*dim_b + l]
/// and has rank 1 exactly when e = A (x) B for local A, B.
Mat realign(const Mat& e, BipartiteDims dims);

/// ||a - b||_F. Throws DimensionMismatch on shape mismatch.
double frobenius_distance(const Mat& a, const Mat& b);

/// Count of singular values above tol * max(1, largest).
int numerical_rank(const RealVec& singular_values, double tol);

/// ||x - y||_2 over flattened vectors; helper shared by states/channels.
double frobenius_norm(const Mat& m);

Mat identity_matrix(int n);

}  // namespace sepchan

#endif
