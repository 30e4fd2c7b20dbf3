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

#include "core/tensor.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace sepchan {

BipartiteDims make_dims(int dim_a, int dim_b, int max_total) {
  if (dim_a < 1 || dim_b < 1) {
    throw InvalidArgument("bipartite dimensions must be >= 1");
  }
  if (dim_a > max_total || dim_b > max_total || dim_a * dim_b > max_total) {
    std::ostringstream os;
    os << "bipartite dimension " << dim_a << "x" << dim_b
       << " exceeds the configured maximum total " << max_total;
    throw InvalidArgument(os.str());
  }
  return BipartiteDims{dim_a, dim_b};
}

void ensure_finite(const Mat& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidArgument(std::string(what) + ": non-finite entry");
  }
}

Mat tensor_product(const Mat& a, const Mat& b, int max_dim) {
  const long rows = static_cast<long>(a.rows()) * b.rows();
  const long cols = static_cast<long>(a.cols()) * b.cols();
  const long cap = static_cast<long>(max_dim) * max_dim;
  if (rows > cap || cols > cap) {
    std::ostringstream os;
    os << "tensor product of " << a.rows() << "x" << a.cols() << " and "
       << b.rows() << "x" << b.cols() << " exceeds the configured maximum side "
       << cap;
    throw InvalidArgument(os.str());
  }
  Mat out = Eigen::kroneckerProduct(a, b);
  return out;
}

Mat identity_matrix(int n) { return Mat::Identity(n, n); }

double frobenius_norm(const Mat& m) { return m.norm(); }

double frobenius_distance(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "frobenius_distance: shape mismatch " << a.rows() << "x" << a.cols()
       << " vs " << b.rows() << "x" << b.cols();
    throw DimensionMismatch(os.str());
  }
  return (a - b).norm();
}

Mat svd_reconstruct(const SvdResult& s, int rows, int cols) {
  Mat sigma = Mat::Zero(rows, cols);
  const int k = static_cast<int>(s.singular_values.size());
  for (int i = 0; i < k && i < rows && i < cols; ++i) {
    sigma(i, i) = s.singular_values[i];
  }
  return s.left_vectors * sigma * s.right_vectors.adjoint();
}

SvdResult svd(const Mat& m) {
  ensure_finite(m, "svd input");
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  const int k = std::min(rows, cols);

  const double norm = m.norm();
  if (norm == 0.0) {
    // Zero matrix: all-zero spectrum with identity bases keeps downstream
    // code free of a degenerate-input branch.
    SvdResult out;
    out.left_vectors = Mat::Identity(rows, rows);
    out.singular_values = RealVec::Zero(k);
    out.right_vectors = Mat::Identity(cols, cols);
    return out;
  }

  Eigen::JacobiSVD<Mat> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out;
  out.left_vectors = solver.matrixU();
  out.singular_values = solver.singularValues();
  out.right_vectors = solver.matrixV();

  const double err = (m - svd_reconstruct(out, rows, cols)).norm();
  const double bound = 1e-10 * std::max(1.0, norm);
  if (err > bound) {
    std::ostringstream os;
    os << "svd failed accuracy contract: reconstruction error " << err
       << " (bound " << bound << "), input " << rows << "x" << cols
       << ", ||m||_F=" << norm << ", sigma_max="
       << (out.singular_values.size() ? out.singular_values[0] : 0.0)
       << ", sigma_min="
       << (out.singular_values.size()
               ? out.singular_values[out.singular_values.size() - 1]
               : 0.0);
    throw NumericalError(os.str());
  }
  return out;
}

Mat realign(const Mat& e, BipartiteDims dims) {
  const int da = dims.dim_a;
  const int db = dims.dim_b;
  if (e.rows() != e.cols() || e.rows() != da * db) {
    std::ostringstream os;
    os << "realign: operator is " << e.rows() << "x" << e.cols()
       << " but dims are " << da << "x" << db;
    throw DimensionMismatch(os.str());
  }
  Mat r(da * da, db * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          r(i * da + j, k * db + l) = e(i * db + k, j * db + l);
        }
      }
    }
  }
  return r;
}

int numerical_rank(const RealVec& singular_values, double tol) {
  if (singular_values.size() == 0) return 0;
  const double cutoff = tol * std::max(1.0, singular_values[0]);
  int rank = 0;
  for (int i = 0; i < singular_values.size(); ++i) {
    if (singular_values[i] > cutoff) ++rank;
  }
  return rank;
}

}  // namespace sepchan
