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

#include "core/distill.hpp"

#include <cmath>
#include <sstream>

namespace sepchan {

namespace {

constexpr int kLocal = 3;

Mat ketbra(int ket, int bra) {
  Mat m = Mat::Zero(kLocal, kLocal);
  m(ket, bra) = Complex(1.0, 0.0);
  return m;
}

}  // namespace

PaperConstants paper_constants() {
  const double root3 = std::sqrt(3.0);
  return PaperConstants{(2.0 - root3) / 4.0, 2.0 + root3};
}

KrausChannel paper_channel() {
  const PaperConstants k = paper_constants();
  const double sa = std::sqrt(k.alpha);
  const double sb = std::sqrt(k.beta);
  const double s2ab = std::sqrt(2.0 * k.alpha * k.beta);
  const BipartiteDims dims{kLocal, kLocal};

  std::vector<Mat> ops;
  ops.reserve(6);
  ops.push_back(sa * tensor_product(sb * ketbra(0, 0) + ketbra(1, 1),
                                    sb * ketbra(0, 1) + ketbra(1, 0)));
  ops.push_back(sa * tensor_product(ketbra(1, 0) + sb * ketbra(0, 1),
                                    ketbra(1, 1) + sb * ketbra(0, 0)));
  ops.push_back(sa * tensor_product(sb * ketbra(0, 0) + ketbra(1, 2),
                                    sb * ketbra(0, 2) + ketbra(1, 0)));
  ops.push_back(sa * tensor_product(ketbra(1, 0) + sb * ketbra(0, 2),
                                    ketbra(1, 2) + sb * ketbra(0, 0)));
  ops.push_back(tensor_product(ketbra(1, 1),
                               s2ab * ketbra(1, 1) + ketbra(2, 2)));
  ops.push_back(tensor_product(ketbra(2, 2),
                               ketbra(1, 1) + s2ab * ketbra(2, 2)));
  return make_channel(dims, dims, std::move(ops));
}

PureState paper_psi1() {
  Vec amp = Vec::Zero(9);
  amp[0 * 3 + 1] = Complex(1.0 / std::sqrt(2.0), 0.0);
  amp[1 * 3 + 0] = Complex(1.0 / std::sqrt(2.0), 0.0);
  return make_pure(BipartiteDims{3, 3}, std::move(amp));
}

PureState paper_psi2() {
  Vec amp = Vec::Zero(9);
  amp[0 * 3 + 2] = Complex(1.0 / std::sqrt(2.0), 0.0);
  amp[2 * 3 + 0] = Complex(1.0 / std::sqrt(2.0), 0.0);
  return make_pure(BipartiteDims{3, 3}, std::move(amp));
}

DensityOperator paper_source(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "paper_source: mixing weight " << p << " outside [0, 1]";
    throw InvalidArgument(os.str());
  }
  const PureState psi1 = paper_psi1();
  const PureState psi2 = paper_psi2();
  Mat m = p * (psi1.amplitudes * psi1.amplitudes.adjoint()) +
          (1.0 - p) * (psi2.amplitudes * psi2.amplitudes.adjoint());
  return make_density(BipartiteDims{3, 3}, std::move(m));
}

PureState paper_target() {
  const PaperConstants k = paper_constants();
  const double sa = std::sqrt(k.alpha);
  Vec amp = Vec::Zero(9);
  amp[0 * 3 + 0] = Complex(sa * k.beta, 0.0);
  amp[1 * 3 + 1] = Complex(sa, 0.0);
  return make_pure(BipartiteDims{3, 3}, std::move(amp));
}

DistillationReport verify_deterministic_distillation(const KrausChannel& ch,
                                                     const DensityOperator& rho,
                                                     const PureState& phi,
                                                     double tol) {
  if (!(ch.dims_in == rho.dims) || !(ch.dims_out == phi.dims)) {
    throw DimensionMismatch(
        "verify_deterministic_distillation: dims mismatch");
  }
  const CompletenessReport completeness = validate_channel(ch, tol);
  if (!completeness.pass) {
    std::ostringstream os;
    os << "verify_deterministic_distillation: channel is not complete "
          "(deviation "
       << completeness.deviation << ")";
    throw ValidationError(os.str());
  }

  DistillationReport report;
  report.success = true;

  const auto eigensystem = eigendecompose(rho, tol);
  const size_t n_eigen = eigensystem.size();
  for (const auto& [w, state] : eigensystem) {
    report.eigen_weights.push_back(w);
  }
  report.total_probability.assign(n_eigen, 0.0);

  for (size_t k = 0; k < ch.operators.size(); ++k) {
    DistillOperatorRecord rec;
    rec.op_index = static_cast<int>(k);
    for (size_t i = 0; i < n_eigen; ++i) {
      const BranchOutcome branch = apply_branch(
          ch.operators[k], eigensystem[i].second, kBranchCutoff, ch.dims_out);
      rec.probability.push_back(branch.probability);
      report.total_probability[i] += branch.probability;
      if (!branch.post.has_value()) {
        rec.coefficient_magnitude.push_back(0.0);
        rec.status.push_back(BranchStatus::Zero);
        continue;
      }
      const double overlap = std::abs(inner_product(phi, *branch.post));
      rec.coefficient_magnitude.push_back(std::sqrt(branch.probability) *
                                          overlap);
      if (1.0 - overlap <= tol) {
        rec.status.push_back(BranchStatus::Proportional);
      } else {
        rec.status.push_back(BranchStatus::NotProportional);
        rec.pass = false;
        std::ostringstream os;
        os << "operator " << k << " maps eigenstate " << i
           << " to a state not proportional to the target (1 - |overlap| = "
           << 1.0 - overlap << ")";
        rec.reason = os.str();
        if (report.success) report.failure_reason = rec.reason;
        report.success = false;
      }
    }
    report.per_operator.push_back(std::move(rec));
  }

  for (size_t i = 0; i < n_eigen; ++i) {
    if (std::abs(report.total_probability[i] - 1.0) > tol) {
      report.success = false;
      if (report.failure_reason.empty()) {
        std::ostringstream os;
        os << "branch probabilities for eigenstate " << i << " total "
           << report.total_probability[i] << " instead of 1";
        report.failure_reason = os.str();
      }
    }
  }

  // Basis-independent checks: fidelity of the mapped input, plus a sweep
  // over mixtures of the two leading eigenstates when the rank allows it.
  report.input_fidelity = fidelity_with_pure(apply_to_density(ch, rho, tol),
                                             phi);
  if (report.input_fidelity < 1.0 - tol) {
    report.success = false;
    if (report.failure_reason.empty()) {
      std::ostringstream os;
      os << "fidelity of the mapped input with the target is "
         << report.input_fidelity;
      report.failure_reason = os.str();
    }
  }
  if (n_eigen >= 2) {
    const PureState& e1 = eigensystem[0].second;
    const PureState& e2 = eigensystem[1].second;
    const Mat p1 = e1.amplitudes * e1.amplitudes.adjoint();
    const Mat p2 = e2.amplitudes * e2.amplitudes.adjoint();
    for (int g = 0; g <= 20; ++g) {
      const double p = static_cast<double>(g) / 20.0;
      Mat mix = p * p1 + (1.0 - p) * p2;
      const DensityOperator grid_rho =
          make_density(rho.dims, std::move(mix), std::max(tol, 1e-9));
      const double f = fidelity_with_pure(apply_to_density(ch, grid_rho, tol),
                                          phi);
      report.fidelity_grid.emplace_back(p, f);
      if (f < 1.0 - tol) {
        report.success = false;
        if (report.failure_reason.empty()) {
          std::ostringstream os;
          os << "fidelity at grid point p=" << p << " is " << f;
          report.failure_reason = os.str();
        }
      }
    }
  }
  return report;
}

CaseAnalysisReport thm1_case_analysis(const KrausChannel& ch,
                                      const PureState& psi1,
                                      const PureState& psi2,
                                      const PureState& phi, double tol) {
  if (!(psi1.dims == psi2.dims) || !(ch.dims_in == psi1.dims) ||
      !(ch.dims_out == phi.dims)) {
    throw DimensionMismatch("thm1_case_analysis: dims mismatch");
  }
  const double overlap = std::abs(inner_product(psi1, psi2));
  if (1.0 - overlap * overlap <= tol) {
    throw InvalidArgument("thm1_case_analysis: psi1, psi2 must be independent");
  }
  const SeparabilityReport sep = is_separable(ch, tol);
  if (!sep.separable) {
    throw ValidationError(
        "thm1_case_analysis: channel is not separable at the given tolerance");
  }

  CaseAnalysisReport report;
  for (size_t k = 0; k < ch.operators.size(); ++k) {
    const Mat& e = ch.operators[k];
    CaseRecord rec;
    rec.op_index = static_cast<int>(k);

    const ProductFactorization& f = *sep.per_operator[k].factorization;
    rec.rank_a = numerical_rank(svd(f.a_factor).singular_values, tol);
    rec.rank_b = numerical_rank(svd(f.b_factor).singular_values, tol);

    const BranchOutcome b1 = apply_branch(e, psi1);
    const BranchOutcome b2 = apply_branch(e, psi2);
    bool proportional = true;
    for (const BranchOutcome* b : {&b1, &b2}) {
      if (b->post.has_value() &&
          1.0 - std::abs(inner_product(phi, *b->post)) > tol) {
        proportional = false;
      }
    }
    // c = <phi| E psi> is exact once E psi is proportional to phi.
    rec.c = phi.amplitudes.dot(Vec(e * psi1.amplitudes));
    rec.d = phi.amplitudes.dot(Vec(e * psi2.amplitudes));

    if (!proportional) {
      rec.kind = OverlapCase::NotProportional;
    } else {
      const bool c_nonzero = std::abs(rec.c) > tol;
      const bool d_nonzero = std::abs(rec.d) > tol;
      if (c_nonzero && d_nonzero) {
        rec.kind = OverlapCase::BothNonzero;
        Vec w = rec.d * psi1.amplitudes - rec.c * psi2.amplitudes;
        const double norm = w.norm();
        if (norm > 1e-12) {
          w /= norm;
          PureState witness = make_pure(psi1.dims, std::move(w));
          const SchmidtDecomposition sd = schmidt_decompose(witness, tol);
          rec.witness_is_product = sd.rank == 1;
          const Mat lifted_b = tensor_product(
              Mat(Mat::Identity(psi1.dims.dim_a, psi1.dims.dim_a)), f.b_factor);
          rec.witness_bob_annihilation =
              (lifted_b * witness.amplitudes).norm();
          rec.witness = std::move(witness);
        }
      } else if (c_nonzero || d_nonzero) {
        rec.kind = OverlapCase::OneNonzero;
      } else {
        rec.kind = OverlapCase::BothZero;
      }
    }
    report.per_operator.push_back(std::move(rec));
  }
  return report;
}

}  // namespace sepchan
