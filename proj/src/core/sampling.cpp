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

#include "core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace sepchan {

Complex randn_complex(Rng& rng) {
  const double invsqrt2 = 1.0 / std::sqrt(2.0);
  return Complex(rng.normal() * invsqrt2, rng.normal() * invsqrt2);
}

Mat random_matrix(Rng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = randn_complex(rng);
  }
  return m;
}

Mat random_unitary(Rng& rng, int n) {
  const Mat g = random_matrix(rng, n, n);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

PureState random_pure_state(Rng& rng, BipartiteDims dims) {
  Vec v(dims.total());
  for (int i = 0; i < v.size(); ++i) v[i] = randn_complex(rng);
  return make_pure(dims, std::move(v), /*normalize=*/true);
}

std::vector<double> random_weights(Rng& rng, int len) {
  std::vector<double> w(static_cast<size_t>(len));
  double sum = 0.0;
  for (double& x : w) {
    x = rng.uniform(0.0, 1.0);
    sum += x;
  }
  for (double& x : w) x /= sum;
  std::sort(w.begin(), w.end(), std::greater<double>());
  return w;
}

namespace {

// Positive-semidefinite square root, negative rounding noise clamped.
Mat psd_sqrt(const Mat& m) {
  Mat sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  RealVec values = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * values.asDiagonal() *
         solver.eigenvectors().adjoint();
}

double largest_eigenvalue(const Mat& m) {
  Mat sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace

KrausChannel random_channel(Rng& rng, BipartiteDims dims, int n_operators) {
  if (n_operators < 1) {
    throw InvalidArgument("random_channel: needs at least one operator");
  }
  const int n = dims.total();
  std::vector<Mat> raw;
  raw.reserve(static_cast<size_t>(n_operators));
  for (int k = 0; k < n_operators; ++k) raw.push_back(random_matrix(rng, n, n));

  Mat sum = Mat::Zero(n, n);
  for (const Mat& g : raw) sum += g.adjoint() * g;
  Eigen::SelfAdjointEigenSolver<Mat> solver((sum + sum.adjoint()) / 2.0);
  RealVec inv_sqrt = solver.eigenvalues().cwiseMax(1e-300).cwiseInverse()
                         .cwiseSqrt();
  const Mat whitener = solver.eigenvectors() * inv_sqrt.asDiagonal() *
                       solver.eigenvectors().adjoint();
  std::vector<Mat> ops;
  ops.reserve(raw.size());
  for (const Mat& g : raw) ops.push_back(g * whitener);
  return make_channel(dims, dims, std::move(ops));
}

SeparableChannelSample random_separable_channel(Rng& rng, BipartiteDims dims,
                                                int n_operators) {
  if (n_operators < 1) {
    throw InvalidArgument("random_separable_channel: needs operators");
  }
  const int da = dims.dim_a;
  const int db = dims.dim_b;
  const int strategy = rng.uniform_int(0, 2);

  std::vector<Mat> ops;
  ops.reserve(static_cast<size_t>(n_operators) + 1);

  SeparableChannelSample sample;

  if (strategy == 0 || strategy == 1) {
    // One side unitary: the completeness deficit stays a product operator,
    // so an exact product completion always exists.
    std::vector<Mat> locals;
    Mat t = Mat::Zero(strategy == 0 ? db : da, strategy == 0 ? db : da);
    for (int k = 0; k < n_operators; ++k) {
      Mat free_side = random_matrix(rng, strategy == 0 ? db : da,
                                    strategy == 0 ? db : da);
      t += free_side.adjoint() * free_side;
      locals.push_back(std::move(free_side));
    }
    const double scale = 1.0 / std::sqrt(largest_eigenvalue(t));
    t *= scale * scale;
    for (int k = 0; k < n_operators; ++k) {
      locals[static_cast<size_t>(k)] *= scale;
      const Mat uni = random_unitary(rng, strategy == 0 ? da : db);
      ops.push_back(strategy == 0
                        ? tensor_product(uni, locals[static_cast<size_t>(k)])
                        : tensor_product(locals[static_cast<size_t>(k)], uni));
    }
    const int free_dim = strategy == 0 ? db : da;
    const Mat deficit_local = Mat::Identity(free_dim, free_dim) - t;
    if (deficit_local.norm() > 1e-13) {
      const Mat root = psd_sqrt(deficit_local);
      const Mat eye_a = Mat::Identity(da, da);
      const Mat eye_b = Mat::Identity(db, db);
      ops.push_back(strategy == 0 ? tensor_product(eye_a, root)
                                  : tensor_product(root, eye_b));
      sample.completion_appended = true;
      sample.completion_product = true;
    }
  } else {
    // Fully generic product operators; here the deficit square root is
    // usually not product. The channel still gets completed, but the sample
    // is flagged so separable-channel statistics can discard it.
    Mat sum = Mat::Zero(da * db, da * db);
    for (int k = 0; k < n_operators; ++k) {
      Mat e = tensor_product(random_matrix(rng, da, da),
                             random_matrix(rng, db, db));
      sum += e.adjoint() * e;
      ops.push_back(std::move(e));
    }
    const double scale = 1.0 / std::sqrt(largest_eigenvalue(sum));
    for (Mat& e : ops) e *= scale;
    sum *= scale * scale;
    const Mat deficit = Mat::Identity(da * db, da * db) - sum;
    if (deficit.norm() > 1e-13) {
      Mat root = psd_sqrt(deficit);
      sample.completion_appended = true;
      sample.completion_product =
          factor_product(root, dims, 1e-8).factorization.has_value();
      ops.push_back(std::move(root));
    }
  }

  sample.separable = !sample.completion_appended || sample.completion_product;
  sample.channel = make_channel(dims, dims, std::move(ops));
  return sample;
}

std::pair<PureState, PureState> random_entangled_span_pair(Rng& rng,
                                                           BipartiteDims dims,
                                                           double tol,
                                                           int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const PureState psi1 = random_pure_state(rng, dims);
    Vec raw = random_pure_state(rng, dims).amplitudes;
    raw -= psi1.amplitudes.dot(raw) * psi1.amplitudes;
    const double norm = raw.norm();
    if (norm < 1e-6) continue;
    raw /= norm;
    const PureState psi2 = make_pure(dims, std::move(raw));
    if (schmidt_rank(psi1, tol) < 2 || schmidt_rank(psi2, tol) < 2) continue;
    if (product_vectors_in_span(psi1, psi2, tol).verdict ==
        SpanVerdict::NoProduct) {
      return {psi1, psi2};
    }
  }
  throw NumericalError(
      "random_entangled_span_pair: no entangled span found; the dims may not "
      "admit one generically");
}

PureState random_rank2_state(Rng& rng, BipartiteDims dims) {
  if (dims.dim_a < 2 || dims.dim_b < 2) {
    throw InvalidArgument("random_rank2_state: local dims must be >= 2");
  }
  const double w1 = rng.uniform(0.55, 0.9);
  return state_from_schmidt(dims, {w1, 1.0 - w1}, random_unitary(rng, dims.dim_a),
                            random_unitary(rng, dims.dim_b));
}

}  // namespace sepchan
