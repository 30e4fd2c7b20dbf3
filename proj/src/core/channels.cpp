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

#include "core/channels.hpp"

#include <cmath>
#include <sstream>

namespace sepchan {

KrausChannel make_channel(BipartiteDims dims_in, BipartiteDims dims_out,
                          std::vector<Mat> operators) {
  if (operators.empty()) {
    throw InvalidArgument("channel: needs at least one Kraus operator");
  }
  const int rows = dims_out.total();
  const int cols = dims_in.total();
  for (size_t k = 0; k < operators.size(); ++k) {
    if (operators[k].rows() != rows || operators[k].cols() != cols) {
      std::ostringstream os;
      os << "channel: operator " << k << " is " << operators[k].rows() << "x"
         << operators[k].cols() << ", expected " << rows << "x" << cols;
      throw DimensionMismatch(os.str());
    }
    ensure_finite(operators[k], "channel operator");
  }
  return KrausChannel{dims_in, dims_out, std::move(operators)};
}

CompletenessReport validate_channel(const KrausChannel& ch, double tol) {
  const int n = ch.dims_in.total();
  Mat sum = Mat::Zero(n, n);
  for (const Mat& e : ch.operators) {
    if (e.cols() != n) {
      throw DimensionMismatch("validate_channel: operator shape mismatch");
    }
    sum += e.adjoint() * e;
  }
  CompletenessReport report;
  report.deviation = (sum - Mat::Identity(n, n)).norm();
  report.pass = report.deviation <= tol;
  return report;
}

DensityOperator apply_to_density(const KrausChannel& ch,
                                 const DensityOperator& rho, double tol) {
  if (!(ch.dims_in == rho.dims)) {
    throw DimensionMismatch("apply_to_density: channel/state dims mismatch");
  }
  const CompletenessReport completeness = validate_channel(ch, tol);
  if (!completeness.pass) {
    std::ostringstream os;
    os << "apply_to_density: channel is not complete (deviation "
       << completeness.deviation << " > " << tol << ")";
    throw ValidationError(os.str());
  }
  const int n = ch.dims_out.total();
  Mat out = Mat::Zero(n, n);
  for (const Mat& e : ch.operators) {
    out += e * rho.matrix * e.adjoint();
  }
  return make_density(ch.dims_out, std::move(out), std::max(tol, 1e-9));
}

BranchOutcome apply_branch(const Mat& e, const PureState& psi, double cutoff,
                           std::optional<BipartiteDims> out_dims) {
  if (e.cols() != psi.amplitudes.size()) {
    throw DimensionMismatch("apply_branch: operator/state shape mismatch");
  }
  const BipartiteDims dims = out_dims.value_or(psi.dims);
  if (e.rows() != dims.total()) {
    throw DimensionMismatch("apply_branch: operator rows do not match the "
                            "output dims");
  }
  Vec image = e * psi.amplitudes;
  BranchOutcome out;
  out.probability = image.squaredNorm();
  if (out.probability > cutoff) {
    image /= image.norm();
    out.post = make_pure(dims, std::move(image));
  }
  return out;
}

FactorResult factor_product(const Mat& e, BipartiteDims dims, double tol) {
  const int n = dims.total();
  if (e.rows() != e.cols() || e.rows() != n) {
    std::ostringstream os;
    os << "factor_product: operator is " << e.rows() << "x" << e.cols()
       << " but dims are " << dims.dim_a << "x" << dims.dim_b
       << " (square operators only)";
    throw DimensionMismatch(os.str());
  }

  FactorResult result;
  if (e.norm() <= tol) {
    // Zero operators count as products; they appear as completeness padding.
    ProductFactorization f;
    f.a_factor = Mat::Identity(dims.dim_a, dims.dim_a) /
                 std::sqrt(static_cast<double>(dims.dim_a));
    f.b_factor = Mat::Zero(dims.dim_b, dims.dim_b);
    f.residual = e.norm();
    result.factorization = std::move(f);
    result.second_singular_value = 0.0;
    return result;
  }

  const Mat r = realign(e, dims);
  const SvdResult s = svd(r);
  const double leading = s.singular_values[0];
  const double second =
      s.singular_values.size() > 1 ? s.singular_values[1] : 0.0;
  result.second_singular_value = second;
  if (second > tol * leading) {
    return result;  // not a product operator
  }

  // R = vec(A) vec(B)^T, so the leading right singular vector carries
  // conj(vec(B)).
  Vec vec_a = s.left_vectors.col(0);
  Vec vec_b = leading * s.right_vectors.col(0).conjugate();

  // Gauge: ||A||_F = 1 (vec_a already unit) with its largest-magnitude entry
  // real positive; scale and phase go to B.
  int argmax = 0;
  for (int i = 1; i < vec_a.size(); ++i) {
    if (std::abs(vec_a[i]) > std::abs(vec_a[argmax])) argmax = i;
  }
  const Complex pivot = vec_a[argmax];
  const Complex phase = pivot / std::abs(pivot);
  vec_a /= phase;
  vec_b *= phase;

  ProductFactorization f;
  f.a_factor = Mat(dims.dim_a, dims.dim_a);
  f.b_factor = Mat(dims.dim_b, dims.dim_b);
  for (int i = 0; i < dims.dim_a; ++i) {
    for (int j = 0; j < dims.dim_a; ++j) {
      f.a_factor(i, j) = vec_a[i * dims.dim_a + j];
    }
  }
  for (int k = 0; k < dims.dim_b; ++k) {
    for (int l = 0; l < dims.dim_b; ++l) {
      f.b_factor(k, l) = vec_b[k * dims.dim_b + l];
    }
  }
  f.residual = (e - tensor_product(f.a_factor, f.b_factor)).norm();
  result.factorization = std::move(f);
  return result;
}

SeparabilityReport is_separable(const KrausChannel& ch, double tol) {
  if (!(ch.dims_in == ch.dims_out)) {
    throw Unsupported("is_separable: requires equal input/output dims");
  }
  SeparabilityReport report;
  report.separable = true;
  report.per_operator.reserve(ch.operators.size());
  for (const Mat& e : ch.operators) {
    FactorResult r = factor_product(e, ch.dims_in, tol);
    if (!r.factorization.has_value()) report.separable = false;
    report.per_operator.push_back(std::move(r));
  }
  return report;
}

}  // namespace sepchan
