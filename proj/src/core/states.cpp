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

#include "core/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace sepchan {

namespace {

void check_same_dims(const BipartiteDims& a, const BipartiteDims& b,
                     const char* what) {
  if (!(a == b)) {
    std::ostringstream os;
    os << what << ": bipartite dimensions differ (" << a.dim_a << "x" << a.dim_b
       << " vs " << b.dim_a << "x" << b.dim_b << ")";
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

PureState make_pure(BipartiteDims dims, Vec amplitudes, bool normalize,
                    double tol) {
  if (amplitudes.size() != dims.total()) {
    std::ostringstream os;
    os << "pure state: amplitude length " << amplitudes.size()
       << " does not match dims " << dims.dim_a << "x" << dims.dim_b;
    throw DimensionMismatch(os.str());
  }
  if (!amplitudes.allFinite()) {
    throw InvalidArgument("pure state: non-finite amplitude");
  }
  const double norm = amplitudes.norm();
  if (normalize) {
    if (norm <= 1e-12) {
      throw InvalidArgument("pure state: cannot normalize a zero vector");
    }
    amplitudes /= norm;
  } else if (std::abs(norm - 1.0) > tol) {
    std::ostringstream os;
    os << "pure state: norm " << norm << " deviates from 1 beyond " << tol;
    throw ValidationError(os.str());
  }
  return PureState{dims, std::move(amplitudes)};
}

DensityOperator make_density(BipartiteDims dims, Mat matrix, double tol) {
  const int n = dims.total();
  if (matrix.rows() != n || matrix.cols() != n) {
    std::ostringstream os;
    os << "density operator: matrix is " << matrix.rows() << "x"
       << matrix.cols() << " but dims are " << dims.dim_a << "x" << dims.dim_b;
    throw DimensionMismatch(os.str());
  }
  ensure_finite(matrix, "density operator");
  const double herm = (matrix - matrix.adjoint()).norm();
  if (herm > tol) {
    std::ostringstream os;
    os << "density operator: not Hermitian, ||rho - rho^dagger||_F = " << herm;
    throw ValidationError(os.str());
  }
  const double trace_err = std::abs(matrix.trace() - Complex(1.0, 0.0));
  if (trace_err > tol) {
    std::ostringstream os;
    os << "density operator: trace deviates from 1 by " << trace_err;
    throw ValidationError(os.str());
  }
  Mat sym = (matrix + matrix.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    std::ostringstream os;
    os << "density operator: negative eigenvalue "
       << solver.eigenvalues().minCoeff();
    throw ValidationError(os.str());
  }
  return DensityOperator{dims, std::move(matrix)};
}

DensityOperator density_from_pure(const PureState& psi) {
  Mat m = psi.amplitudes * psi.amplitudes.adjoint();
  return DensityOperator{psi.dims, std::move(m)};
}

Mat coefficient_matrix(const PureState& psi) {
  Mat c(psi.dims.dim_a, psi.dims.dim_b);
  for (int i = 0; i < psi.dims.dim_a; ++i) {
    for (int j = 0; j < psi.dims.dim_b; ++j) {
      c(i, j) = psi.amplitudes[i * psi.dims.dim_b + j];
    }
  }
  return c;
}

PureState state_from_schmidt(BipartiteDims dims,
                             const std::vector<double>& weights,
                             const Mat& left_basis, const Mat& right_basis) {
  const int k = static_cast<int>(weights.size());
  if (k > std::min(dims.dim_a, dims.dim_b)) {
    throw InvalidArgument("state_from_schmidt: more weights than local rank");
  }
  if (left_basis.rows() != dims.dim_a || right_basis.rows() != dims.dim_b ||
      left_basis.cols() < k || right_basis.cols() < k) {
    throw DimensionMismatch("state_from_schmidt: basis shape mismatch");
  }
  Vec amp = Vec::Zero(dims.total());
  for (int m = 0; m < k; ++m) {
    const double coeff = std::sqrt(weights[static_cast<size_t>(m)]);
    for (int i = 0; i < dims.dim_a; ++i) {
      for (int j = 0; j < dims.dim_b; ++j) {
        amp[i * dims.dim_b + j] += coeff * left_basis(i, m) * right_basis(j, m);
      }
    }
  }
  return make_pure(dims, std::move(amp));
}

Complex inner_product(const PureState& a, const PureState& b) {
  check_same_dims(a.dims, b.dims, "inner_product");
  return a.amplitudes.dot(b.amplitudes);  // conjugates a
}

bool proportional_up_to_phase(const PureState& a, const PureState& b,
                              double tol) {
  return 1.0 - std::abs(inner_product(a, b)) <= tol;
}

SchmidtDecomposition schmidt_decompose(const PureState& psi, double tol) {
  const SvdResult s = svd(coefficient_matrix(psi));
  SchmidtDecomposition out;
  out.weights = s.singular_values.array().square();
  out.left_vectors = s.left_vectors;
  out.right_vectors = s.right_vectors.conjugate();
  out.tol = tol;
  out.rank = 0;
  for (int i = 0; i < out.weights.size(); ++i) {
    if (out.weights[i] > tol) ++out.rank;
  }
  return out;
}

int schmidt_rank(const PureState& psi, double tol) {
  return schmidt_decompose(psi, tol).rank;
}

std::vector<std::pair<double, PureState>> eigendecompose(
    const DensityOperator& rho, double tol) {
  Mat sym = (rho.matrix + rho.matrix.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecompose: solver did not converge");
  }
  std::vector<std::pair<double, PureState>> out;
  const int n = static_cast<int>(sym.rows());
  for (int i = n - 1; i >= 0; --i) {  // ascending -> descending
    const double w = solver.eigenvalues()[i];
    if (w > tol) {
      Vec v = solver.eigenvectors().col(i);
      out.emplace_back(w, make_pure(rho.dims, std::move(v)));
    }
  }
  return out;
}

double fidelity_with_pure(const DensityOperator& rho, const PureState& phi) {
  check_same_dims(rho.dims, phi.dims, "fidelity_with_pure");
  const Complex val = (phi.amplitudes.adjoint() * rho.matrix * phi.amplitudes)(0);
  return val.real();
}

namespace {

// One 2x2 minor of the pencil M1 + t*M2, as a quadratic in t.
struct MinorPoly {
  Complex c0, c1, c2;

  Complex eval(Complex t) const { return c0 + t * (c1 + t * c2); }
  double max_coeff() const {
    return std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  }
};

std::vector<MinorPoly> pencil_minors(const Mat& m1, const Mat& m2) {
  std::vector<MinorPoly> minors;
  const int rows = static_cast<int>(m1.rows());
  const int cols = static_cast<int>(m1.cols());
  for (int r1 = 0; r1 < rows; ++r1) {
    for (int r2 = r1 + 1; r2 < rows; ++r2) {
      for (int c1 = 0; c1 < cols; ++c1) {
        for (int c2 = c1 + 1; c2 < cols; ++c2) {
          const Complex a11 = m1(r1, c1), a12 = m1(r1, c2);
          const Complex a21 = m1(r2, c1), a22 = m1(r2, c2);
          const Complex b11 = m2(r1, c1), b12 = m2(r1, c2);
          const Complex b21 = m2(r2, c1), b22 = m2(r2, c2);
          MinorPoly p;
          p.c0 = a11 * a22 - a12 * a21;
          p.c1 = a11 * b22 + b11 * a22 - a12 * b21 - b12 * a21;
          p.c2 = b11 * b22 - b12 * b21;
          minors.push_back(p);
        }
      }
    }
  }
  return minors;
}

// Roots of the quadratic c0 + c1 t + c2 t^2 with degree decided at tol.
std::vector<Complex> quadratic_roots(const MinorPoly& p, double tol) {
  std::vector<Complex> roots;
  if (std::abs(p.c2) > tol) {
    const Complex disc = p.c1 * p.c1 - 4.0 * p.c2 * p.c0;
    Complex s = std::sqrt(disc);
    if (std::abs(p.c1 + s) < std::abs(p.c1 - s)) s = -s;
    const Complex q = -(p.c1 + s) / 2.0;
    if (std::abs(q) > 0.0) {
      roots.push_back(q / p.c2);
      roots.push_back(p.c0 / q);
    } else {
      roots.push_back(Complex(0.0, 0.0));  // double root at 0 (c0 = c1 = 0)
    }
  } else if (std::abs(p.c1) > tol) {
    roots.push_back(-p.c0 / p.c1);
  }
  // Constant nonzero polynomial: no finite roots.
  return roots;
}

SpanWitness normalized_witness(Complex c, Complex d) {
  const double scale = std::max(std::abs(c), std::abs(d));
  return SpanWitness{c / scale, d / scale};
}

bool same_projective_point(const SpanWitness& a, const SpanWitness& b) {
  return std::abs(a.c * b.d - a.d * b.c) <= 1e-8;
}

}  // namespace

SpanProductReport product_vectors_in_span(const PureState& psi1,
                                          const PureState& psi2, double tol) {
  check_same_dims(psi1.dims, psi2.dims, "product_vectors_in_span");
  if (psi1.dims.dim_a < 2 || psi1.dims.dim_b < 2) {
    throw Unsupported(
        "product_vectors_in_span: local dimensions must both be >= 2");
  }
  const double overlap = std::abs(inner_product(psi1, psi2));
  if (1.0 - overlap * overlap <= tol) {
    throw InvalidArgument(
        "product_vectors_in_span: input states are linearly dependent");
  }

  const Mat m1 = coefficient_matrix(psi1);
  const Mat m2 = coefficient_matrix(psi2);
  const std::vector<MinorPoly> minors = pencil_minors(m1, m2);

  SpanProductReport report;

  bool all_identically_zero = true;
  for (const MinorPoly& p : minors) {
    if (p.max_coeff() > tol) {
      all_identically_zero = false;
      break;
    }
  }
  if (all_identically_zero) {
    report.verdict = SpanVerdict::AllOfSpan;
    report.witnesses.push_back(SpanWitness{Complex(1, 0), Complex(0, 0)});
    report.witnesses.push_back(SpanWitness{Complex(0, 0), Complex(1, 0)});
    return report;
  }

  // The first minor with a nontrivial coefficient supplies all finite
  // candidates; every other minor then only filters them.
  const MinorPoly* pivot = nullptr;
  for (const MinorPoly& p : minors) {
    if (p.max_coeff() > tol) {
      pivot = &p;
      break;
    }
  }

  std::vector<SpanWitness> found;
  for (const Complex t : quadratic_roots(*pivot, tol)) {
    bool common = true;
    const double scaled_tol = tol * (1.0 + std::norm(t));
    for (const MinorPoly& p : minors) {
      if (std::abs(p.eval(t)) > scaled_tol) {
        common = false;
        break;
      }
    }
    if (common) found.push_back(normalized_witness(Complex(1, 0), t));
  }

  // t = infinity: psi2 alone is a product vector iff every leading
  // coefficient (the corresponding minor of M2) vanishes.
  bool infinity_product = true;
  for (const MinorPoly& p : minors) {
    if (std::abs(p.c2) > tol) {
      infinity_product = false;
      break;
    }
  }
  if (infinity_product) {
    found.push_back(SpanWitness{Complex(0, 0), Complex(1, 0)});
  }

  for (const SpanWitness& w : found) {
    bool duplicate = false;
    for (const SpanWitness& kept : report.witnesses) {
      if (same_projective_point(w, kept)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) report.witnesses.push_back(w);
  }

  report.verdict = report.witnesses.empty() ? SpanVerdict::NoProduct
                                            : SpanVerdict::FiniteSet;
  return report;
}

}  // namespace sepchan
