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

#include "sepchan/sepchan.h"

#include <atomic>
#include <string>
#include <vector>

#include "core/channels.hpp"
#include "core/distill.hpp"
#include "core/locc.hpp"
#include "core/monotones.hpp"
#include "core/states.hpp"
#include "core/tensor.hpp"

using sepchan::BipartiteDims;
using sepchan::Complex;
using sepchan::Mat;
using sepchan::Vec;

/* Opaque handle definitions. */
struct sepchan_matrix {
  Mat m;
};
struct sepchan_pure {
  sepchan::PureState s;
};
struct sepchan_density {
  sepchan::DensityOperator d;
};
struct sepchan_schmidt {
  sepchan::SchmidtDecomposition s;
};
struct sepchan_span_report {
  sepchan::SpanProductReport r;
};
struct sepchan_eigensystem {
  std::vector<std::pair<double, sepchan::PureState>> pairs;
};
struct sepchan_channel {
  sepchan::KrausChannel ch;
};
struct sepchan_sep_report {
  sepchan::SeparabilityReport r;
};
struct sepchan_distill_report {
  sepchan::DistillationReport r;
};
struct sepchan_case_report {
  sepchan::CaseAnalysisReport r;
};
struct sepchan_ensemble {
  std::vector<std::pair<double, sepchan::DensityOperator>> members;
};
struct sepchan_protocol {
  sepchan::ProtocolNode node;
};
struct sepchan_protocol_report {
  sepchan::ProtocolValidationReport r;
};
struct sepchan_simulation {
  std::vector<sepchan::BranchRecord> records;
  std::vector<std::string> ids;
};
struct sepchan_violations {
  std::vector<sepchan::NonvanishingViolation> v;
  std::vector<std::string> ids;
};

namespace {

thread_local std::string g_last_error;
std::atomic<int> g_max_dim{sepchan::kDefaultMaxDim};

sepchan_status set_error(sepchan_status code, const char* msg) {
  g_last_error = msg;
  return code;
}

template <typename F>
sepchan_status guarded(F&& f) {
  try {
    return f();
  } catch (const sepchan::InvalidArgument& e) {
    return set_error(SEPCHAN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const sepchan::DimensionMismatch& e) {
    return set_error(SEPCHAN_ERR_DIMENSION_MISMATCH, e.what());
  } catch (const sepchan::ValidationError& e) {
    return set_error(SEPCHAN_ERR_VALIDATION, e.what());
  } catch (const sepchan::NumericalError& e) {
    return set_error(SEPCHAN_ERR_NUMERICAL, e.what());
  } catch (const sepchan::Unsupported& e) {
    return set_error(SEPCHAN_ERR_UNSUPPORTED, e.what());
  } catch (const std::exception& e) {
    return set_error(SEPCHAN_ERR_NUMERICAL, e.what());
  }
}

void require(bool cond, const char* msg) {
  if (!cond) throw sepchan::InvalidArgument(msg);
}

Vec vec_from_interleaved(const double* data, size_t len) {
  require(data != nullptr, "null data pointer");
  require(len % 2 == 0, "interleaved data length must be even");
  Vec v(static_cast<long>(len / 2));
  for (size_t i = 0; i < len / 2; ++i) {
    v[static_cast<long>(i)] = Complex(data[2 * i], data[2 * i + 1]);
  }
  return v;
}

Mat mat_from_interleaved(int rows, int cols, const double* data, size_t len) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
  require(len == 2 * static_cast<size_t>(rows) * static_cast<size_t>(cols),
          "interleaved data length does not match the matrix shape");
  Vec v = vec_from_interleaved(data, len);
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  }
  return m;
}

sepchan_party to_c_party(sepchan::Party p) {
  return p == sepchan::Party::Alice ? SEPCHAN_PARTY_ALICE : SEPCHAN_PARTY_BOB;
}

sepchan::Party from_c_party(sepchan_party p) {
  require(p == SEPCHAN_PARTY_ALICE || p == SEPCHAN_PARTY_BOB,
          "unknown party value");
  return p == SEPCHAN_PARTY_ALICE ? sepchan::Party::Alice
                                  : sepchan::Party::Bob;
}

std::string join_path(const std::vector<int>& id) {
  std::string s;
  for (size_t i = 0; i < id.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(id[i]);
  }
  return s;
}

}  // namespace

extern "C" {

const char* sepchan_version(void) { return "0.1.0"; }

const char* sepchan_last_error(void) { return g_last_error.c_str(); }

void sepchan_set_max_dim(int max_dim) {
  if (max_dim >= 1) g_max_dim.store(max_dim);
}

int sepchan_max_dim(void) { return g_max_dim.load(); }

/* ---- matrices ---- */

sepchan_status sepchan_matrix_create(int rows, int cols, sepchan_matrix** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    *out = new sepchan_matrix{Mat::Zero(rows, cols)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_matrix_identity(int n, sepchan_matrix** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    require(n > 0, "matrix dimension must be positive");
    *out = new sepchan_matrix{Mat::Identity(n, n)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_matrix_clone(const sepchan_matrix* m,
                                    sepchan_matrix** out) {
  return guarded([&]() {
    require(m != nullptr && out != nullptr, "null argument");
    *out = new sepchan_matrix{m->m};
    return SEPCHAN_OK;
  });
}

void sepchan_matrix_destroy(sepchan_matrix* m) { delete m; }

int sepchan_matrix_rows(const sepchan_matrix* m) {
  return m ? static_cast<int>(m->m.rows()) : 0;
}

int sepchan_matrix_cols(const sepchan_matrix* m) {
  return m ? static_cast<int>(m->m.cols()) : 0;
}

sepchan_status sepchan_matrix_set_element(sepchan_matrix* m, int row, int col,
                                          double re, double im) {
  return guarded([&]() {
    require(m != nullptr, "null matrix");
    require(row >= 0 && row < m->m.rows() && col >= 0 && col < m->m.cols(),
            "element index out of range");
    m->m(row, col) = Complex(re, im);
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_matrix_get_element(const sepchan_matrix* m, int row,
                                          int col, double* re, double* im) {
  return guarded([&]() {
    require(m != nullptr && re != nullptr && im != nullptr, "null argument");
    require(row >= 0 && row < m->m.rows() && col >= 0 && col < m->m.cols(),
            "element index out of range");
    *re = m->m(row, col).real();
    *im = m->m(row, col).imag();
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_matrix_set_data(sepchan_matrix* m, const double* data,
                                       size_t len) {
  return guarded([&]() {
    require(m != nullptr, "null matrix");
    m->m = mat_from_interleaved(static_cast<int>(m->m.rows()),
                                static_cast<int>(m->m.cols()), data, len);
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_matrix_get_data(const sepchan_matrix* m, double* data,
                                       size_t len) {
  return guarded([&]() {
    require(m != nullptr && data != nullptr, "null argument");
    const size_t need = 2 * static_cast<size_t>(m->m.rows()) *
                        static_cast<size_t>(m->m.cols());
    require(len == need, "output buffer length does not match the matrix");
    size_t idx = 0;
    for (int r = 0; r < m->m.rows(); ++r) {
      for (int c = 0; c < m->m.cols(); ++c) {
        data[idx++] = m->m(r, c).real();
        data[idx++] = m->m(r, c).imag();
      }
    }
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_tensor_product(const sepchan_matrix* a,
                                      const sepchan_matrix* b,
                                      sepchan_matrix** out) {
  return guarded([&]() {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = new sepchan_matrix{
        sepchan::tensor_product(a->m, b->m, g_max_dim.load())};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_realign(const sepchan_matrix* e, int dim_a, int dim_b,
                               sepchan_matrix** out) {
  return guarded([&]() {
    require(e != nullptr && out != nullptr, "null argument");
    const BipartiteDims dims = sepchan::make_dims(dim_a, dim_b,
                                                  g_max_dim.load());
    *out = new sepchan_matrix{sepchan::realign(e->m, dims)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_frobenius_distance(const sepchan_matrix* a,
                                          const sepchan_matrix* b,
                                          double* out) {
  return guarded([&]() {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = sepchan::frobenius_distance(a->m, b->m);
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_svd(const sepchan_matrix* m, double* singular_values,
                           size_t len, sepchan_matrix** u,
                           sepchan_matrix** v) {
  return guarded([&]() {
    require(m != nullptr && singular_values != nullptr, "null argument");
    const sepchan::SvdResult s = sepchan::svd(m->m);
    require(len == static_cast<size_t>(s.singular_values.size()),
            "singular value buffer must hold min(rows, cols) entries");
    for (size_t i = 0; i < len; ++i) {
      singular_values[i] = s.singular_values[static_cast<long>(i)];
    }
    if (u) *u = new sepchan_matrix{s.left_vectors};
    if (v) *v = new sepchan_matrix{s.right_vectors};
    return SEPCHAN_OK;
  });
}

/* ---- pure states ---- */

sepchan_status sepchan_pure_create(int dim_a, int dim_b,
                                   const double* amplitudes, size_t len,
                                   int normalize, double tol,
                                   sepchan_pure** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    const BipartiteDims dims = sepchan::make_dims(dim_a, dim_b,
                                                  g_max_dim.load());
    Vec amp = vec_from_interleaved(amplitudes, len);
    *out = new sepchan_pure{
        sepchan::make_pure(dims, std::move(amp), normalize != 0, tol)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_pure_clone(const sepchan_pure* p, sepchan_pure** out) {
  return guarded([&]() {
    require(p != nullptr && out != nullptr, "null argument");
    *out = new sepchan_pure{p->s};
    return SEPCHAN_OK;
  });
}

void sepchan_pure_destroy(sepchan_pure* p) { delete p; }

sepchan_status sepchan_pure_dims(const sepchan_pure* p, int* dim_a,
                                 int* dim_b) {
  return guarded([&]() {
    require(p != nullptr && dim_a != nullptr && dim_b != nullptr,
            "null argument");
    *dim_a = p->s.dims.dim_a;
    *dim_b = p->s.dims.dim_b;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_pure_get_amplitudes(const sepchan_pure* p, double* data,
                                           size_t len) {
  return guarded([&]() {
    require(p != nullptr && data != nullptr, "null argument");
    const size_t need = 2 * static_cast<size_t>(p->s.amplitudes.size());
    require(len == need, "output buffer length does not match the state");
    for (long i = 0; i < p->s.amplitudes.size(); ++i) {
      data[2 * i] = p->s.amplitudes[i].real();
      data[2 * i + 1] = p->s.amplitudes[i].imag();
    }
    return SEPCHAN_OK;
  });
}

/* ---- Schmidt ---- */

sepchan_status sepchan_schmidt_decompose(const sepchan_pure* p, double tol,
                                         sepchan_schmidt** out) {
  return guarded([&]() {
    require(p != nullptr && out != nullptr, "null argument");
    *out = new sepchan_schmidt{sepchan::schmidt_decompose(p->s, tol)};
    return SEPCHAN_OK;
  });
}

void sepchan_schmidt_destroy(sepchan_schmidt* s) { delete s; }

int sepchan_schmidt_count(const sepchan_schmidt* s) {
  return s ? static_cast<int>(s->s.weights.size()) : 0;
}

int sepchan_schmidt_get_rank(const sepchan_schmidt* s) {
  return s ? s->s.rank : 0;
}

sepchan_status sepchan_schmidt_weights(const sepchan_schmidt* s, double* out,
                                       size_t len) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "null argument");
    require(len == static_cast<size_t>(s->s.weights.size()),
            "weight buffer length mismatch");
    for (size_t i = 0; i < len; ++i) out[i] = s->s.weights[static_cast<long>(i)];
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_schmidt_left_vectors(const sepchan_schmidt* s,
                                            sepchan_matrix** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "null argument");
    *out = new sepchan_matrix{s->s.left_vectors};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_schmidt_right_vectors(const sepchan_schmidt* s,
                                             sepchan_matrix** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "null argument");
    *out = new sepchan_matrix{s->s.right_vectors};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_schmidt_rank(const sepchan_pure* p, double tol,
                                    int* out) {
  return guarded([&]() {
    require(p != nullptr && out != nullptr, "null argument");
    *out = sepchan::schmidt_rank(p->s, tol);
    return SEPCHAN_OK;
  });
}

/* ---- span analysis ---- */

sepchan_status sepchan_span_scan(const sepchan_pure* psi1,
                                 const sepchan_pure* psi2, double tol,
                                 sepchan_span_report** out) {
  return guarded([&]() {
    require(psi1 != nullptr && psi2 != nullptr && out != nullptr,
            "null argument");
    *out = new sepchan_span_report{
        sepchan::product_vectors_in_span(psi1->s, psi2->s, tol)};
    return SEPCHAN_OK;
  });
}

void sepchan_span_report_destroy(sepchan_span_report* r) { delete r; }

sepchan_span_verdict sepchan_span_report_verdict(
    const sepchan_span_report* r) {
  if (!r) return SEPCHAN_SPAN_NO_PRODUCT;
  switch (r->r.verdict) {
    case sepchan::SpanVerdict::NoProduct:
      return SEPCHAN_SPAN_NO_PRODUCT;
    case sepchan::SpanVerdict::FiniteSet:
      return SEPCHAN_SPAN_FINITE_SET;
    default:
      return SEPCHAN_SPAN_ALL_OF_SPAN;
  }
}

int sepchan_span_report_witness_count(const sepchan_span_report* r) {
  return r ? static_cast<int>(r->r.witnesses.size()) : 0;
}

sepchan_status sepchan_span_report_witness(const sepchan_span_report* r,
                                           int index, double* c_re,
                                           double* c_im, double* d_re,
                                           double* d_im) {
  return guarded([&]() {
    require(r != nullptr && c_re && c_im && d_re && d_im, "null argument");
    require(index >= 0 && index < static_cast<int>(r->r.witnesses.size()),
            "witness index out of range");
    const sepchan::SpanWitness& w = r->r.witnesses[static_cast<size_t>(index)];
    *c_re = w.c.real();
    *c_im = w.c.imag();
    *d_re = w.d.real();
    *d_im = w.d.imag();
    return SEPCHAN_OK;
  });
}

/* ---- density operators ---- */

sepchan_status sepchan_density_create(int dim_a, int dim_b, const double* data,
                                      size_t len, double tol,
                                      sepchan_density** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    const BipartiteDims dims = sepchan::make_dims(dim_a, dim_b,
                                                  g_max_dim.load());
    Mat m = mat_from_interleaved(dims.total(), dims.total(), data, len);
    *out = new sepchan_density{sepchan::make_density(dims, std::move(m), tol)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_density_from_pure(const sepchan_pure* p,
                                         sepchan_density** out) {
  return guarded([&]() {
    require(p != nullptr && out != nullptr, "null argument");
    *out = new sepchan_density{sepchan::density_from_pure(p->s)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_density_clone(const sepchan_density* d,
                                     sepchan_density** out) {
  return guarded([&]() {
    require(d != nullptr && out != nullptr, "null argument");
    *out = new sepchan_density{d->d};
    return SEPCHAN_OK;
  });
}

void sepchan_density_destroy(sepchan_density* d) { delete d; }

sepchan_status sepchan_density_dims(const sepchan_density* d, int* dim_a,
                                    int* dim_b) {
  return guarded([&]() {
    require(d != nullptr && dim_a != nullptr && dim_b != nullptr,
            "null argument");
    *dim_a = d->d.dims.dim_a;
    *dim_b = d->d.dims.dim_b;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_density_get_matrix(const sepchan_density* d,
                                          sepchan_matrix** out) {
  return guarded([&]() {
    require(d != nullptr && out != nullptr, "null argument");
    *out = new sepchan_matrix{d->d.matrix};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_density_eigendecompose(const sepchan_density* d,
                                              double tol,
                                              sepchan_eigensystem** out) {
  return guarded([&]() {
    require(d != nullptr && out != nullptr, "null argument");
    *out = new sepchan_eigensystem{sepchan::eigendecompose(d->d, tol)};
    return SEPCHAN_OK;
  });
}

void sepchan_eigensystem_destroy(sepchan_eigensystem* e) { delete e; }

int sepchan_eigensystem_count(const sepchan_eigensystem* e) {
  return e ? static_cast<int>(e->pairs.size()) : 0;
}

sepchan_status sepchan_eigensystem_weight(const sepchan_eigensystem* e,
                                          int index, double* out) {
  return guarded([&]() {
    require(e != nullptr && out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(e->pairs.size()),
            "eigensystem index out of range");
    *out = e->pairs[static_cast<size_t>(index)].first;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_eigensystem_state(const sepchan_eigensystem* e,
                                         int index, sepchan_pure** out) {
  return guarded([&]() {
    require(e != nullptr && out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(e->pairs.size()),
            "eigensystem index out of range");
    *out = new sepchan_pure{e->pairs[static_cast<size_t>(index)].second};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_fidelity_with_pure(const sepchan_density* rho,
                                          const sepchan_pure* phi,
                                          double* out) {
  return guarded([&]() {
    require(rho != nullptr && phi != nullptr && out != nullptr,
            "null argument");
    *out = sepchan::fidelity_with_pure(rho->d, phi->s);
    return SEPCHAN_OK;
  });
}

/* ---- channels ---- */

sepchan_status sepchan_channel_create(int dim_a_in, int dim_b_in,
                                      int dim_a_out, int dim_b_out,
                                      sepchan_channel** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    sepchan::KrausChannel ch;
    ch.dims_in = sepchan::make_dims(dim_a_in, dim_b_in, g_max_dim.load());
    ch.dims_out = sepchan::make_dims(dim_a_out, dim_b_out, g_max_dim.load());
    *out = new sepchan_channel{std::move(ch)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_channel_add_operator(sepchan_channel* ch,
                                            const sepchan_matrix* e) {
  return guarded([&]() {
    require(ch != nullptr && e != nullptr, "null argument");
    if (e->m.rows() != ch->ch.dims_out.total() ||
        e->m.cols() != ch->ch.dims_in.total()) {
      throw sepchan::DimensionMismatch(
          "channel operator shape does not match the channel dims");
    }
    sepchan::ensure_finite(e->m, "channel operator");
    ch->ch.operators.push_back(e->m);
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_channel_clone(const sepchan_channel* ch,
                                     sepchan_channel** out) {
  return guarded([&]() {
    require(ch != nullptr && out != nullptr, "null argument");
    *out = new sepchan_channel{ch->ch};
    return SEPCHAN_OK;
  });
}

void sepchan_channel_destroy(sepchan_channel* ch) { delete ch; }

int sepchan_channel_operator_count(const sepchan_channel* ch) {
  return ch ? static_cast<int>(ch->ch.operators.size()) : 0;
}

sepchan_status sepchan_channel_dims(const sepchan_channel* ch, int* dim_a_in,
                                    int* dim_b_in, int* dim_a_out,
                                    int* dim_b_out) {
  return guarded([&]() {
    require(ch != nullptr && dim_a_in && dim_b_in && dim_a_out && dim_b_out,
            "null argument");
    *dim_a_in = ch->ch.dims_in.dim_a;
    *dim_b_in = ch->ch.dims_in.dim_b;
    *dim_a_out = ch->ch.dims_out.dim_a;
    *dim_b_out = ch->ch.dims_out.dim_b;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_channel_get_operator(const sepchan_channel* ch,
                                            int index, sepchan_matrix** out) {
  return guarded([&]() {
    require(ch != nullptr && out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(ch->ch.operators.size()),
            "operator index out of range");
    *out = new sepchan_matrix{ch->ch.operators[static_cast<size_t>(index)]};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_channel_validate(const sepchan_channel* ch, double tol,
                                        double* deviation, int* pass) {
  return guarded([&]() {
    require(ch != nullptr && deviation != nullptr && pass != nullptr,
            "null argument");
    require(!ch->ch.operators.empty(), "channel has no operators");
    const sepchan::CompletenessReport r = sepchan::validate_channel(ch->ch,
                                                                    tol);
    *deviation = r.deviation;
    *pass = r.pass ? 1 : 0;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_channel_apply(const sepchan_channel* ch,
                                     const sepchan_density* rho, double tol,
                                     sepchan_density** out) {
  return guarded([&]() {
    require(ch != nullptr && rho != nullptr && out != nullptr,
            "null argument");
    require(!ch->ch.operators.empty(), "channel has no operators");
    *out = new sepchan_density{sepchan::apply_to_density(ch->ch, rho->d, tol)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_apply_branch(const sepchan_matrix* e,
                                    const sepchan_pure* psi, double cutoff,
                                    double* probability, sepchan_pure** post) {
  return guarded([&]() {
    require(e != nullptr && psi != nullptr && probability != nullptr &&
                post != nullptr,
            "null argument");
    sepchan::BranchOutcome b = sepchan::apply_branch(e->m, psi->s, cutoff);
    *probability = b.probability;
    *post = b.post.has_value() ? new sepchan_pure{std::move(*b.post)}
                               : nullptr;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_factor_product(const sepchan_matrix* e, int dim_a,
                                      int dim_b, double tol, int* is_product,
                                      double* second_singular_value,
                                      double* residual,
                                      sepchan_matrix** a_factor,
                                      sepchan_matrix** b_factor) {
  return guarded([&]() {
    require(e != nullptr && is_product != nullptr &&
                second_singular_value != nullptr,
            "null argument");
    const BipartiteDims dims = sepchan::make_dims(dim_a, dim_b,
                                                  g_max_dim.load());
    sepchan::FactorResult r = sepchan::factor_product(e->m, dims, tol);
    *is_product = r.factorization.has_value() ? 1 : 0;
    *second_singular_value = r.second_singular_value;
    if (r.factorization.has_value()) {
      if (residual) *residual = r.factorization->residual;
      if (a_factor) *a_factor = new sepchan_matrix{r.factorization->a_factor};
      if (b_factor) *b_factor = new sepchan_matrix{r.factorization->b_factor};
    }
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_channel_is_separable(const sepchan_channel* ch,
                                            double tol,
                                            sepchan_sep_report** out) {
  return guarded([&]() {
    require(ch != nullptr && out != nullptr, "null argument");
    require(!ch->ch.operators.empty(), "channel has no operators");
    *out = new sepchan_sep_report{sepchan::is_separable(ch->ch, tol)};
    return SEPCHAN_OK;
  });
}

void sepchan_sep_report_destroy(sepchan_sep_report* r) { delete r; }

int sepchan_sep_report_separable(const sepchan_sep_report* r) {
  return r && r->r.separable ? 1 : 0;
}

int sepchan_sep_report_count(const sepchan_sep_report* r) {
  return r ? static_cast<int>(r->r.per_operator.size()) : 0;
}

sepchan_status sepchan_sep_report_operator(const sepchan_sep_report* r,
                                           int index, int* is_product,
                                           double* second_singular_value,
                                           double* residual) {
  return guarded([&]() {
    require(r != nullptr && is_product != nullptr &&
                second_singular_value != nullptr,
            "null argument");
    require(index >= 0 && index < static_cast<int>(r->r.per_operator.size()),
            "operator index out of range");
    const sepchan::FactorResult& f =
        r->r.per_operator[static_cast<size_t>(index)];
    *is_product = f.factorization.has_value() ? 1 : 0;
    *second_singular_value = f.second_singular_value;
    if (residual) {
      *residual = f.factorization.has_value() ? f.factorization->residual
                                              : 0.0;
    }
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_sep_report_factors(const sepchan_sep_report* r,
                                          int index, sepchan_matrix** a_factor,
                                          sepchan_matrix** b_factor) {
  return guarded([&]() {
    require(r != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(r->r.per_operator.size()),
            "operator index out of range");
    const sepchan::FactorResult& f =
        r->r.per_operator[static_cast<size_t>(index)];
    require(f.factorization.has_value(),
            "operator did not factor as a product");
    if (a_factor) *a_factor = new sepchan_matrix{f.factorization->a_factor};
    if (b_factor) *b_factor = new sepchan_matrix{f.factorization->b_factor};
    return SEPCHAN_OK;
  });
}

/* ---- built-in instance ---- */

sepchan_status sepchan_paper_constants(double* alpha, double* beta) {
  return guarded([&]() {
    require(alpha != nullptr && beta != nullptr, "null argument");
    const sepchan::PaperConstants k = sepchan::paper_constants();
    *alpha = k.alpha;
    *beta = k.beta;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_paper_channel(sepchan_channel** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = new sepchan_channel{sepchan::paper_channel()};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_paper_psi1(sepchan_pure** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = new sepchan_pure{sepchan::paper_psi1()};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_paper_psi2(sepchan_pure** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = new sepchan_pure{sepchan::paper_psi2()};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_paper_source(double p, sepchan_density** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = new sepchan_density{sepchan::paper_source(p)};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_paper_target(sepchan_pure** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = new sepchan_pure{sepchan::paper_target()};
    return SEPCHAN_OK;
  });
}

/* ---- distillation verification ---- */

sepchan_status sepchan_distill_verify(const sepchan_channel* ch,
                                      const sepchan_density* rho,
                                      const sepchan_pure* phi, double tol,
                                      sepchan_distill_report** out) {
  return guarded([&]() {
    require(ch != nullptr && rho != nullptr && phi != nullptr &&
                out != nullptr,
            "null argument");
    require(!ch->ch.operators.empty(), "channel has no operators");
    *out = new sepchan_distill_report{
        sepchan::verify_deterministic_distillation(ch->ch, rho->d, phi->s,
                                                   tol)};
    return SEPCHAN_OK;
  });
}

void sepchan_distill_report_destroy(sepchan_distill_report* r) { delete r; }

int sepchan_distill_report_success(const sepchan_distill_report* r) {
  return r && r->r.success ? 1 : 0;
}

int sepchan_distill_report_operator_count(const sepchan_distill_report* r) {
  return r ? static_cast<int>(r->r.per_operator.size()) : 0;
}

int sepchan_distill_report_eigenstate_count(const sepchan_distill_report* r) {
  return r ? static_cast<int>(r->r.eigen_weights.size()) : 0;
}

sepchan_status sepchan_distill_report_eigen_weight(
    const sepchan_distill_report* r, int eigenstate, double* out) {
  return guarded([&]() {
    require(r != nullptr && out != nullptr, "null argument");
    require(eigenstate >= 0 &&
                eigenstate < static_cast<int>(r->r.eigen_weights.size()),
            "eigenstate index out of range");
    *out = r->r.eigen_weights[static_cast<size_t>(eigenstate)];
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_distill_report_branch(
    const sepchan_distill_report* r, int op, int eigenstate,
    double* probability, double* coefficient_magnitude,
    sepchan_branch_status* status) {
  return guarded([&]() {
    require(r != nullptr, "null argument");
    require(op >= 0 && op < static_cast<int>(r->r.per_operator.size()),
            "operator index out of range");
    const sepchan::DistillOperatorRecord& rec =
        r->r.per_operator[static_cast<size_t>(op)];
    require(eigenstate >= 0 &&
                eigenstate < static_cast<int>(rec.probability.size()),
            "eigenstate index out of range");
    if (probability)
      *probability = rec.probability[static_cast<size_t>(eigenstate)];
    if (coefficient_magnitude) {
      *coefficient_magnitude =
          rec.coefficient_magnitude[static_cast<size_t>(eigenstate)];
    }
    if (status) {
      switch (rec.status[static_cast<size_t>(eigenstate)]) {
        case sepchan::BranchStatus::Zero:
          *status = SEPCHAN_BRANCH_ZERO;
          break;
        case sepchan::BranchStatus::Proportional:
          *status = SEPCHAN_BRANCH_PROPORTIONAL;
          break;
        default:
          *status = SEPCHAN_BRANCH_NOT_PROPORTIONAL;
          break;
      }
    }
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_distill_report_total_probability(
    const sepchan_distill_report* r, int eigenstate, double* out) {
  return guarded([&]() {
    require(r != nullptr && out != nullptr, "null argument");
    require(eigenstate >= 0 &&
                eigenstate < static_cast<int>(r->r.total_probability.size()),
            "eigenstate index out of range");
    *out = r->r.total_probability[static_cast<size_t>(eigenstate)];
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_distill_report_input_fidelity(
    const sepchan_distill_report* r, double* out) {
  return guarded([&]() {
    require(r != nullptr && out != nullptr, "null argument");
    *out = r->r.input_fidelity;
    return SEPCHAN_OK;
  });
}

int sepchan_distill_report_grid_count(const sepchan_distill_report* r) {
  return r ? static_cast<int>(r->r.fidelity_grid.size()) : 0;
}

sepchan_status sepchan_distill_report_grid_entry(
    const sepchan_distill_report* r, int index, double* p, double* fidelity) {
  return guarded([&]() {
    require(r != nullptr && p != nullptr && fidelity != nullptr,
            "null argument");
    require(index >= 0 && index < static_cast<int>(r->r.fidelity_grid.size()),
            "grid index out of range");
    *p = r->r.fidelity_grid[static_cast<size_t>(index)].first;
    *fidelity = r->r.fidelity_grid[static_cast<size_t>(index)].second;
    return SEPCHAN_OK;
  });
}

const char* sepchan_distill_report_message(const sepchan_distill_report* r) {
  return r ? r->r.failure_reason.c_str() : "";
}

/* ---- case analysis ---- */

sepchan_status sepchan_case_analysis(const sepchan_channel* ch,
                                     const sepchan_pure* psi1,
                                     const sepchan_pure* psi2,
                                     const sepchan_pure* phi, double tol,
                                     sepchan_case_report** out) {
  return guarded([&]() {
    require(ch != nullptr && psi1 != nullptr && psi2 != nullptr &&
                phi != nullptr && out != nullptr,
            "null argument");
    require(!ch->ch.operators.empty(), "channel has no operators");
    *out = new sepchan_case_report{
        sepchan::thm1_case_analysis(ch->ch, psi1->s, psi2->s, phi->s, tol)};
    return SEPCHAN_OK;
  });
}

void sepchan_case_report_destroy(sepchan_case_report* r) { delete r; }

int sepchan_case_report_count(const sepchan_case_report* r) {
  return r ? static_cast<int>(r->r.per_operator.size()) : 0;
}

sepchan_status sepchan_case_report_record(const sepchan_case_report* r,
                                          int index, double* c_re,
                                          double* c_im, double* d_re,
                                          double* d_im,
                                          sepchan_overlap_case* kind,
                                          int* rank_a, int* rank_b) {
  return guarded([&]() {
    require(r != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(r->r.per_operator.size()),
            "operator index out of range");
    const sepchan::CaseRecord& rec =
        r->r.per_operator[static_cast<size_t>(index)];
    if (c_re) *c_re = rec.c.real();
    if (c_im) *c_im = rec.c.imag();
    if (d_re) *d_re = rec.d.real();
    if (d_im) *d_im = rec.d.imag();
    if (kind) {
      switch (rec.kind) {
        case sepchan::OverlapCase::BothNonzero:
          *kind = SEPCHAN_CASE_BOTH_NONZERO;
          break;
        case sepchan::OverlapCase::OneNonzero:
          *kind = SEPCHAN_CASE_ONE_NONZERO;
          break;
        case sepchan::OverlapCase::BothZero:
          *kind = SEPCHAN_CASE_BOTH_ZERO;
          break;
        default:
          *kind = SEPCHAN_CASE_NOT_PROPORTIONAL;
          break;
      }
    }
    if (rank_a) *rank_a = rec.rank_a;
    if (rank_b) *rank_b = rec.rank_b;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_case_report_witness(const sepchan_case_report* r,
                                           int index, int* has_witness,
                                           int* is_product,
                                           double* bob_annihilation,
                                           sepchan_pure** witness) {
  return guarded([&]() {
    require(r != nullptr && has_witness != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(r->r.per_operator.size()),
            "operator index out of range");
    const sepchan::CaseRecord& rec =
        r->r.per_operator[static_cast<size_t>(index)];
    *has_witness = rec.witness.has_value() ? 1 : 0;
    if (rec.witness.has_value()) {
      if (is_product) *is_product = rec.witness_is_product ? 1 : 0;
      if (bob_annihilation) *bob_annihilation = rec.witness_bob_annihilation;
      if (witness) *witness = new sepchan_pure{*rec.witness};
    }
    return SEPCHAN_OK;
  });
}

/* ---- monotones ---- */

namespace {

std::vector<double> weights_from(const double* w, size_t len) {
  require(w != nullptr && len > 0, "null or empty weight vector");
  return std::vector<double>(w, w + len);
}

}  // namespace

sepchan_status sepchan_majorization_check(const double* src, size_t src_len,
                                          const double* tgt, size_t tgt_len,
                                          int* out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    const sepchan::SchmidtWeights s =
        sepchan::make_weights(weights_from(src, src_len));
    const sepchan::SchmidtWeights t =
        sepchan::make_weights(weights_from(tgt, tgt_len));
    *out = sepchan::majorization_check(s, t) ? 1 : 0;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_tail_sum(const double* weights, size_t len, int l,
                                double* out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = sepchan::tail_sum(sepchan::make_weights(weights_from(weights, len)),
                             l);
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_vidal_pmax(const double* src, size_t src_len,
                                  const double* tgt, size_t tgt_len,
                                  double* out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    const sepchan::SchmidtWeights s =
        sepchan::make_weights(weights_from(src, src_len));
    const sepchan::SchmidtWeights t =
        sepchan::make_weights(weights_from(tgt, tgt_len));
    *out = sepchan::vidal_pmax(s, t);
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_pure_schmidt_weights(const sepchan_pure* p, double tol,
                                            double* out, size_t len) {
  return guarded([&]() {
    require(p != nullptr && out != nullptr, "null argument");
    const sepchan::SchmidtWeights w = sepchan::weights_of(p->s, tol);
    require(len == w.weights.size(), "weight buffer length mismatch");
    for (size_t i = 0; i < len; ++i) out[i] = w.weights[i];
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_ensemble_create(sepchan_ensemble** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = new sepchan_ensemble{};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_ensemble_add(sepchan_ensemble* e, double probability,
                                    const sepchan_density* member) {
  return guarded([&]() {
    require(e != nullptr && member != nullptr, "null argument");
    require(probability > 0.0, "ensemble probabilities must be positive");
    e->members.emplace_back(probability, member->d);
    return SEPCHAN_OK;
  });
}

void sepchan_ensemble_destroy(sepchan_ensemble* e) { delete e; }

sepchan_status sepchan_ensemble_average_pmax(const sepchan_ensemble* e,
                                             const sepchan_pure* phi,
                                             double tol, double* out) {
  return guarded([&]() {
    require(e != nullptr && phi != nullptr && out != nullptr,
            "null argument");
    const sepchan::Ensemble ens = sepchan::make_ensemble(e->members);
    *out = sepchan::ensemble_average_pmax(ens, phi->s, tol);
    return SEPCHAN_OK;
  });
}

/* ---- LOCC protocols ---- */

sepchan_status sepchan_protocol_create(sepchan_party party,
                                       sepchan_protocol** out) {
  return guarded([&]() {
    require(out != nullptr, "null output pointer");
    *out = new sepchan_protocol{sepchan::ProtocolNode(from_c_party(party))};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_protocol_add_branch(
    sepchan_protocol* node, const sepchan_matrix* local_operator,
    const sepchan_protocol* child) {
  return guarded([&]() {
    require(node != nullptr && local_operator != nullptr, "null argument");
    require(local_operator->m.rows() == local_operator->m.cols(),
            "local operators must be square");
    sepchan::ensure_finite(local_operator->m, "protocol operator");
    node->node.local_operators.push_back(local_operator->m);
    node->node.children.push_back(
        child ? std::make_unique<sepchan::ProtocolNode>(child->node.clone())
              : nullptr);
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_protocol_clone(const sepchan_protocol* node,
                                      sepchan_protocol** out) {
  return guarded([&]() {
    require(node != nullptr && out != nullptr, "null argument");
    *out = new sepchan_protocol{node->node.clone()};
    return SEPCHAN_OK;
  });
}

void sepchan_protocol_destroy(sepchan_protocol* node) { delete node; }

sepchan_party sepchan_protocol_party(const sepchan_protocol* node) {
  return node ? to_c_party(node->node.party) : SEPCHAN_PARTY_ALICE;
}

int sepchan_protocol_branch_count(const sepchan_protocol* node) {
  return node ? static_cast<int>(node->node.local_operators.size()) : 0;
}

sepchan_status sepchan_protocol_branch_operator(const sepchan_protocol* node,
                                                int index,
                                                sepchan_matrix** out) {
  return guarded([&]() {
    require(node != nullptr && out != nullptr, "null argument");
    require(index >= 0 &&
                index < static_cast<int>(node->node.local_operators.size()),
            "branch index out of range");
    *out = new sepchan_matrix{
        node->node.local_operators[static_cast<size_t>(index)]};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_protocol_branch_child(const sepchan_protocol* node,
                                             int index,
                                             sepchan_protocol** out) {
  return guarded([&]() {
    require(node != nullptr && out != nullptr, "null argument");
    require(index >= 0 &&
                index < static_cast<int>(node->node.children.size()),
            "branch index out of range");
    const auto& child = node->node.children[static_cast<size_t>(index)];
    *out = child ? new sepchan_protocol{child->clone()} : nullptr;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_protocol_validate(const sepchan_protocol* root,
                                         double tol,
                                         sepchan_protocol_report** out) {
  return guarded([&]() {
    require(root != nullptr && out != nullptr, "null argument");
    *out = new sepchan_protocol_report{
        sepchan::validate_protocol(root->node, tol)};
    return SEPCHAN_OK;
  });
}

void sepchan_protocol_report_destroy(sepchan_protocol_report* r) { delete r; }

int sepchan_protocol_report_node_count(const sepchan_protocol_report* r) {
  return r ? static_cast<int>(r->r.nodes.size()) : 0;
}

const char* sepchan_protocol_report_node_path(const sepchan_protocol_report* r,
                                              int index) {
  if (!r || index < 0 || index >= static_cast<int>(r->r.nodes.size())) {
    return "";
  }
  return r->r.nodes[static_cast<size_t>(index)].path.c_str();
}

sepchan_status sepchan_protocol_report_node(const sepchan_protocol_report* r,
                                            int index, sepchan_party* party,
                                            double* completeness_deviation) {
  return guarded([&]() {
    require(r != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(r->r.nodes.size()),
            "node index out of range");
    const sepchan::NodeCheck& n = r->r.nodes[static_cast<size_t>(index)];
    if (party) *party = to_c_party(n.party);
    if (completeness_deviation)
      *completeness_deviation = n.completeness_deviation;
    return SEPCHAN_OK;
  });
}

int sepchan_protocol_report_complete(const sepchan_protocol_report* r) {
  return r && r->r.complete ? 1 : 0;
}

int sepchan_protocol_report_alternating(const sepchan_protocol_report* r) {
  return r && r->r.alternating ? 1 : 0;
}

int sepchan_protocol_report_depth(const sepchan_protocol_report* r) {
  return r ? r->r.depth : 0;
}

sepchan_status sepchan_protocol_report_max_deviation(
    const sepchan_protocol_report* r, double* out) {
  return guarded([&]() {
    require(r != nullptr && out != nullptr, "null argument");
    *out = r->r.max_deviation;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_simulate(const sepchan_protocol* root,
                                const sepchan_pure* const* inputs,
                                size_t n_inputs, double cutoff,
                                sepchan_simulation** out) {
  return guarded([&]() {
    require(root != nullptr && inputs != nullptr && out != nullptr,
            "null argument");
    require(n_inputs > 0, "needs at least one input state");
    std::vector<sepchan::PureState> states;
    states.reserve(n_inputs);
    for (size_t i = 0; i < n_inputs; ++i) {
      require(inputs[i] != nullptr, "null input state");
      states.push_back(inputs[i]->s);
    }
    auto sim = new sepchan_simulation{};
    sim->records = sepchan::simulate(root->node, states, cutoff);
    sim->ids.reserve(sim->records.size());
    for (const auto& rec : sim->records) {
      sim->ids.push_back(join_path(rec.branch_id));
    }
    *out = sim;
    return SEPCHAN_OK;
  });
}

void sepchan_simulation_destroy(sepchan_simulation* s) { delete s; }

int sepchan_simulation_branch_count(const sepchan_simulation* s) {
  return s ? static_cast<int>(s->records.size()) : 0;
}

int sepchan_simulation_input_count(const sepchan_simulation* s) {
  if (!s || s->records.empty()) return 0;
  return static_cast<int>(s->records[0].per_input.size());
}

const char* sepchan_simulation_branch_id(const sepchan_simulation* s,
                                         int branch) {
  if (!s || branch < 0 || branch >= static_cast<int>(s->ids.size())) {
    return "";
  }
  return s->ids[static_cast<size_t>(branch)].c_str();
}

sepchan_status sepchan_simulation_net_operator(const sepchan_simulation* s,
                                               int branch,
                                               sepchan_matrix** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "null argument");
    require(branch >= 0 && branch < static_cast<int>(s->records.size()),
            "branch index out of range");
    *out = new sepchan_matrix{
        s->records[static_cast<size_t>(branch)].net_operator};
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_simulation_outcome(const sepchan_simulation* s,
                                          int branch, int input,
                                          double* probability,
                                          sepchan_pure** post) {
  return guarded([&]() {
    require(s != nullptr && probability != nullptr && post != nullptr,
            "null argument");
    require(branch >= 0 && branch < static_cast<int>(s->records.size()),
            "branch index out of range");
    const auto& rec = s->records[static_cast<size_t>(branch)];
    require(input >= 0 && input < static_cast<int>(rec.per_input.size()),
            "input index out of range");
    const sepchan::BranchOutcome& o = rec.per_input[static_cast<size_t>(input)];
    *probability = o.probability;
    *post = o.post.has_value() ? new sepchan_pure{*o.post} : nullptr;
    return SEPCHAN_OK;
  });
}

sepchan_status sepchan_branch_nonvanishing_check(const sepchan_simulation* s,
                                                 int input_i, int input_j,
                                                 double cutoff,
                                                 sepchan_violations** out) {
  return guarded([&]() {
    require(s != nullptr && out != nullptr, "null argument");
    auto v = new sepchan_violations{};
    v->v = sepchan::branch_nonvanishing_check(s->records, input_i, input_j,
                                              cutoff);
    v->ids.reserve(v->v.size());
    for (const auto& violation : v->v) {
      v->ids.push_back(join_path(violation.branch_id));
    }
    *out = v;
    return SEPCHAN_OK;
  });
}

void sepchan_violations_destroy(sepchan_violations* v) { delete v; }

int sepchan_violations_count(const sepchan_violations* v) {
  return v ? static_cast<int>(v->v.size()) : 0;
}

sepchan_status sepchan_violations_get(const sepchan_violations* v, int index,
                                      int* branch, int* vanishing_input,
                                      int* surviving_input) {
  return guarded([&]() {
    require(v != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(v->v.size()),
            "violation index out of range");
    const sepchan::NonvanishingViolation& viol =
        v->v[static_cast<size_t>(index)];
    if (branch) *branch = viol.branch_index;
    if (vanishing_input) *vanishing_input = viol.vanishing_input;
    if (surviving_input) *surviving_input = viol.surviving_input;
    return SEPCHAN_OK;
  });
}

const char* sepchan_violations_branch_id(const sepchan_violations* v,
                                         int index) {
  if (!v || index < 0 || index >= static_cast<int>(v->ids.size())) return "";
  return v->ids[static_cast<size_t>(index)].c_str();
}

sepchan_status sepchan_nielsen_rank2(const sepchan_pure* src,
                                     const sepchan_pure* tgt, double tol,
                                     sepchan_protocol** out) {
  return guarded([&]() {
    require(src != nullptr && tgt != nullptr && out != nullptr,
            "null argument");
    *out = new sepchan_protocol{
        sepchan::nielsen_rank2_protocol(src->s, tgt->s, tol)};
    return SEPCHAN_OK;
  });
}

}  // extern "C"
