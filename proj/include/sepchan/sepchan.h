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

/*
  sepchan — separable-operation and LOCC analysis toolkit, C interface.

  Conventions:
    - Every function returns a sepchan_status unless documented otherwise;
      on failure, sepchan_last_error() describes the problem (thread-local).
    - Objects are opaque handles. Functions with a `HANDLE** out` parameter
      hand ownership to the caller; release with the matching *_destroy.
      Strings returned as `const char*` are owned by the handle they came
      from and stay valid until it is destroyed.
    - Complex data crosses the boundary as interleaved doubles
      [re0, im0, re1, im1, ...], row-major for matrices.
    - Bipartite amplitudes are ordered so that index i*dim_b + j holds the
      coefficient of |i>_A |j>_B.
*/

#ifndef SEPCHAN_H
#define SEPCHAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sepchan_status {
  SEPCHAN_OK = 0,
  SEPCHAN_ERR_INVALID_ARGUMENT = 1,
  SEPCHAN_ERR_DIMENSION_MISMATCH = 2,
  SEPCHAN_ERR_VALIDATION = 3,
  SEPCHAN_ERR_NUMERICAL = 4,
  SEPCHAN_ERR_UNSUPPORTED = 5
} sepchan_status;

/* Version string of the library, e.g. "0.1.0". */
const char* sepchan_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
const char* sepchan_last_error(void);

/* Cap on the total bipartite dimension dim_a*dim_b (default 16). Affects
   subsequently created objects; set it once at startup. */
void sepchan_set_max_dim(int max_dim);
int sepchan_max_dim(void);

/* ------------------------------------------------------------------ */
/* Matrices                                                            */
/* ------------------------------------------------------------------ */

typedef struct sepchan_matrix sepchan_matrix;

sepchan_status sepchan_matrix_create(int rows, int cols, sepchan_matrix** out);
sepchan_status sepchan_matrix_identity(int n, sepchan_matrix** out);
sepchan_status sepchan_matrix_clone(const sepchan_matrix* m,
                                    sepchan_matrix** out);
void sepchan_matrix_destroy(sepchan_matrix* m);

int sepchan_matrix_rows(const sepchan_matrix* m);
int sepchan_matrix_cols(const sepchan_matrix* m);
sepchan_status sepchan_matrix_set_element(sepchan_matrix* m, int row, int col,
                                          double re, double im);
sepchan_status sepchan_matrix_get_element(const sepchan_matrix* m, int row,
                                          int col, double* re, double* im);
/* len must equal 2*rows*cols. */
sepchan_status sepchan_matrix_set_data(sepchan_matrix* m, const double* data,
                                       size_t len);
sepchan_status sepchan_matrix_get_data(const sepchan_matrix* m, double* data,
                                       size_t len);

sepchan_status sepchan_tensor_product(const sepchan_matrix* a,
                                      const sepchan_matrix* b,
                                      sepchan_matrix** out);
sepchan_status sepchan_realign(const sepchan_matrix* e, int dim_a, int dim_b,
                               sepchan_matrix** out);
sepchan_status sepchan_frobenius_distance(const sepchan_matrix* a,
                                          const sepchan_matrix* b,
                                          double* out);
/* singular_values needs min(rows, cols) slots; u/v may be NULL when not
   wanted. */
sepchan_status sepchan_svd(const sepchan_matrix* m, double* singular_values,
                           size_t len, sepchan_matrix** u, sepchan_matrix** v);

/* ------------------------------------------------------------------ */
/* Pure states                                                         */
/* ------------------------------------------------------------------ */

typedef struct sepchan_pure sepchan_pure;

/* amplitudes: 2*dim_a*dim_b interleaved doubles. normalize != 0 rescales to
   unit norm; otherwise norms off 1 beyond tol are rejected. */
sepchan_status sepchan_pure_create(int dim_a, int dim_b,
                                   const double* amplitudes, size_t len,
                                   int normalize, double tol,
                                   sepchan_pure** out);
sepchan_status sepchan_pure_clone(const sepchan_pure* p, sepchan_pure** out);
void sepchan_pure_destroy(sepchan_pure* p);
sepchan_status sepchan_pure_dims(const sepchan_pure* p, int* dim_a,
                                 int* dim_b);
sepchan_status sepchan_pure_get_amplitudes(const sepchan_pure* p, double* data,
                                           size_t len);

/* ------------------------------------------------------------------ */
/* Schmidt decomposition                                               */
/* ------------------------------------------------------------------ */

typedef struct sepchan_schmidt sepchan_schmidt;

sepchan_status sepchan_schmidt_decompose(const sepchan_pure* p, double tol,
                                         sepchan_schmidt** out);
void sepchan_schmidt_destroy(sepchan_schmidt* s);
int sepchan_schmidt_count(const sepchan_schmidt* s); /* stored weights */
int sepchan_schmidt_get_rank(const sepchan_schmidt* s);
sepchan_status sepchan_schmidt_weights(const sepchan_schmidt* s, double* out,
                                       size_t len);
sepchan_status sepchan_schmidt_left_vectors(const sepchan_schmidt* s,
                                            sepchan_matrix** out);
sepchan_status sepchan_schmidt_right_vectors(const sepchan_schmidt* s,
                                             sepchan_matrix** out);

sepchan_status sepchan_schmidt_rank(const sepchan_pure* p, double tol,
                                    int* out);

/* ------------------------------------------------------------------ */
/* Span analysis                                                       */
/* ------------------------------------------------------------------ */

typedef enum sepchan_span_verdict {
  SEPCHAN_SPAN_NO_PRODUCT = 0,
  SEPCHAN_SPAN_FINITE_SET = 1,
  SEPCHAN_SPAN_ALL_OF_SPAN = 2
} sepchan_span_verdict;

typedef struct sepchan_span_report sepchan_span_report;

sepchan_status sepchan_span_scan(const sepchan_pure* psi1,
                                 const sepchan_pure* psi2, double tol,
                                 sepchan_span_report** out);
void sepchan_span_report_destroy(sepchan_span_report* r);
sepchan_span_verdict sepchan_span_report_verdict(const sepchan_span_report* r);
int sepchan_span_report_witness_count(const sepchan_span_report* r);
sepchan_status sepchan_span_report_witness(const sepchan_span_report* r,
                                           int index, double* c_re,
                                           double* c_im, double* d_re,
                                           double* d_im);

/* ------------------------------------------------------------------ */
/* Density operators                                                   */
/* ------------------------------------------------------------------ */

typedef struct sepchan_density sepchan_density;

/* data: 2*n*n interleaved doubles, n = dim_a*dim_b, row-major. Validates
   Hermiticity, positivity and unit trace at tol. */
sepchan_status sepchan_density_create(int dim_a, int dim_b, const double* data,
                                      size_t len, double tol,
                                      sepchan_density** out);
sepchan_status sepchan_density_from_pure(const sepchan_pure* p,
                                         sepchan_density** out);
sepchan_status sepchan_density_clone(const sepchan_density* d,
                                     sepchan_density** out);
void sepchan_density_destroy(sepchan_density* d);
sepchan_status sepchan_density_dims(const sepchan_density* d, int* dim_a,
                                    int* dim_b);
sepchan_status sepchan_density_get_matrix(const sepchan_density* d,
                                          sepchan_matrix** out);

typedef struct sepchan_eigensystem sepchan_eigensystem;

sepchan_status sepchan_density_eigendecompose(const sepchan_density* d,
                                              double tol,
                                              sepchan_eigensystem** out);
void sepchan_eigensystem_destroy(sepchan_eigensystem* e);
int sepchan_eigensystem_count(const sepchan_eigensystem* e);
sepchan_status sepchan_eigensystem_weight(const sepchan_eigensystem* e,
                                          int index, double* out);
sepchan_status sepchan_eigensystem_state(const sepchan_eigensystem* e,
                                         int index, sepchan_pure** out);

sepchan_status sepchan_fidelity_with_pure(const sepchan_density* rho,
                                          const sepchan_pure* phi,
                                          double* out);

/* ------------------------------------------------------------------ */
/* Kraus channels                                                      */
/* ------------------------------------------------------------------ */

typedef struct sepchan_channel sepchan_channel;

sepchan_status sepchan_channel_create(int dim_a_in, int dim_b_in,
                                      int dim_a_out, int dim_b_out,
                                      sepchan_channel** out);
/* Copies the operator; it must be (out total) x (in total). */
sepchan_status sepchan_channel_add_operator(sepchan_channel* ch,
                                            const sepchan_matrix* e);
sepchan_status sepchan_channel_clone(const sepchan_channel* ch,
                                     sepchan_channel** out);
void sepchan_channel_destroy(sepchan_channel* ch);
int sepchan_channel_operator_count(const sepchan_channel* ch);
sepchan_status sepchan_channel_dims(const sepchan_channel* ch, int* dim_a_in,
                                    int* dim_b_in, int* dim_a_out,
                                    int* dim_b_out);
sepchan_status sepchan_channel_get_operator(const sepchan_channel* ch,
                                            int index, sepchan_matrix** out);

sepchan_status sepchan_channel_validate(const sepchan_channel* ch, double tol,
                                        double* deviation, int* pass);
sepchan_status sepchan_channel_apply(const sepchan_channel* ch,
                                     const sepchan_density* rho, double tol,
                                     sepchan_density** out);
/* probability always written; *post is NULL when the branch vanishes. */
sepchan_status sepchan_apply_branch(const sepchan_matrix* e,
                                    const sepchan_pure* psi, double cutoff,
                                    double* probability, sepchan_pure** post);
/* is_product and second_singular_value always written; a_factor/b_factor/
   residual only meaningful when *is_product != 0 (pass NULL to skip). */
sepchan_status sepchan_factor_product(const sepchan_matrix* e, int dim_a,
                                      int dim_b, double tol, int* is_product,
                                      double* second_singular_value,
                                      double* residual,
                                      sepchan_matrix** a_factor,
                                      sepchan_matrix** b_factor);

typedef struct sepchan_sep_report sepchan_sep_report;

sepchan_status sepchan_channel_is_separable(const sepchan_channel* ch,
                                            double tol,
                                            sepchan_sep_report** out);
void sepchan_sep_report_destroy(sepchan_sep_report* r);
int sepchan_sep_report_separable(const sepchan_sep_report* r);
int sepchan_sep_report_count(const sepchan_sep_report* r);
sepchan_status sepchan_sep_report_operator(const sepchan_sep_report* r,
                                           int index, int* is_product,
                                           double* second_singular_value,
                                           double* residual);
sepchan_status sepchan_sep_report_factors(const sepchan_sep_report* r,
                                          int index, sepchan_matrix** a_factor,
                                          sepchan_matrix** b_factor);

/* ------------------------------------------------------------------ */
/* Built-in distillation instance and its verifiers                    */
/* ------------------------------------------------------------------ */

sepchan_status sepchan_paper_constants(double* alpha, double* beta);
sepchan_status sepchan_paper_channel(sepchan_channel** out);
sepchan_status sepchan_paper_psi1(sepchan_pure** out);
sepchan_status sepchan_paper_psi2(sepchan_pure** out);
sepchan_status sepchan_paper_source(double p, sepchan_density** out);
sepchan_status sepchan_paper_target(sepchan_pure** out);

typedef enum sepchan_branch_status {
  SEPCHAN_BRANCH_ZERO = 0,
  SEPCHAN_BRANCH_PROPORTIONAL = 1,
  SEPCHAN_BRANCH_NOT_PROPORTIONAL = 2
} sepchan_branch_status;

typedef struct sepchan_distill_report sepchan_distill_report;

sepchan_status sepchan_distill_verify(const sepchan_channel* ch,
                                      const sepchan_density* rho,
                                      const sepchan_pure* phi, double tol,
                                      sepchan_distill_report** out);
void sepchan_distill_report_destroy(sepchan_distill_report* r);
int sepchan_distill_report_success(const sepchan_distill_report* r);
int sepchan_distill_report_operator_count(const sepchan_distill_report* r);
int sepchan_distill_report_eigenstate_count(const sepchan_distill_report* r);
sepchan_status sepchan_distill_report_eigen_weight(
    const sepchan_distill_report* r, int eigenstate, double* out);
sepchan_status sepchan_distill_report_branch(
    const sepchan_distill_report* r, int op, int eigenstate,
    double* probability, double* coefficient_magnitude,
    sepchan_branch_status* status);
sepchan_status sepchan_distill_report_total_probability(
    const sepchan_distill_report* r, int eigenstate, double* out);
sepchan_status sepchan_distill_report_input_fidelity(
    const sepchan_distill_report* r, double* out);
int sepchan_distill_report_grid_count(const sepchan_distill_report* r);
sepchan_status sepchan_distill_report_grid_entry(
    const sepchan_distill_report* r, int index, double* p, double* fidelity);
const char* sepchan_distill_report_message(const sepchan_distill_report* r);

typedef enum sepchan_overlap_case {
  SEPCHAN_CASE_BOTH_NONZERO = 0,
  SEPCHAN_CASE_ONE_NONZERO = 1,
  SEPCHAN_CASE_BOTH_ZERO = 2,
  SEPCHAN_CASE_NOT_PROPORTIONAL = 3
} sepchan_overlap_case;

typedef struct sepchan_case_report sepchan_case_report;

sepchan_status sepchan_case_analysis(const sepchan_channel* ch,
                                     const sepchan_pure* psi1,
                                     const sepchan_pure* psi2,
                                     const sepchan_pure* phi, double tol,
                                     sepchan_case_report** out);
void sepchan_case_report_destroy(sepchan_case_report* r);
int sepchan_case_report_count(const sepchan_case_report* r);
sepchan_status sepchan_case_report_record(const sepchan_case_report* r,
                                          int index, double* c_re,
                                          double* c_im, double* d_re,
                                          double* d_im,
                                          sepchan_overlap_case* kind,
                                          int* rank_a, int* rank_b);
/* has_witness always written; the remaining outputs only when a witness is
   attached (pass NULL to skip any of them). */
sepchan_status sepchan_case_report_witness(const sepchan_case_report* r,
                                           int index, int* has_witness,
                                           int* is_product,
                                           double* bob_annihilation,
                                           sepchan_pure** witness);

/* ------------------------------------------------------------------ */
/* Pure-state monotones                                                */
/* ------------------------------------------------------------------ */

/* Weight vectors are descending probabilities summing to 1. */
sepchan_status sepchan_majorization_check(const double* src, size_t src_len,
                                          const double* tgt, size_t tgt_len,
                                          int* out);
sepchan_status sepchan_tail_sum(const double* weights, size_t len, int l,
                                double* out);
sepchan_status sepchan_vidal_pmax(const double* src, size_t src_len,
                                  const double* tgt, size_t tgt_len,
                                  double* out);
/* Schmidt weights of a pure state; out needs min(dim_a, dim_b) slots. */
sepchan_status sepchan_pure_schmidt_weights(const sepchan_pure* p, double tol,
                                            double* out, size_t len);

typedef struct sepchan_ensemble sepchan_ensemble;

sepchan_status sepchan_ensemble_create(sepchan_ensemble** out);
sepchan_status sepchan_ensemble_add(sepchan_ensemble* e, double probability,
                                    const sepchan_density* member);
void sepchan_ensemble_destroy(sepchan_ensemble* e);
sepchan_status sepchan_ensemble_average_pmax(const sepchan_ensemble* e,
                                             const sepchan_pure* phi,
                                             double tol, double* out);

/* ------------------------------------------------------------------ */
/* LOCC protocol trees                                                 */
/* ------------------------------------------------------------------ */

typedef enum sepchan_party {
  SEPCHAN_PARTY_ALICE = 0,
  SEPCHAN_PARTY_BOB = 1
} sepchan_party;

typedef struct sepchan_protocol sepchan_protocol;

sepchan_status sepchan_protocol_create(sepchan_party party,
                                       sepchan_protocol** out);
/* Appends one outcome: a local operator plus its subtree (NULL = leaf).
   Both are deep-copied. */
sepchan_status sepchan_protocol_add_branch(sepchan_protocol* node,
                                           const sepchan_matrix* local_operator,
                                           const sepchan_protocol* child);
sepchan_status sepchan_protocol_clone(const sepchan_protocol* node,
                                      sepchan_protocol** out);
void sepchan_protocol_destroy(sepchan_protocol* node);
sepchan_party sepchan_protocol_party(const sepchan_protocol* node);
int sepchan_protocol_branch_count(const sepchan_protocol* node);
sepchan_status sepchan_protocol_branch_operator(const sepchan_protocol* node,
                                                int index,
                                                sepchan_matrix** out);
/* *out is NULL when the branch is a leaf. */
sepchan_status sepchan_protocol_branch_child(const sepchan_protocol* node,
                                             int index,
                                             sepchan_protocol** out);

typedef struct sepchan_protocol_report sepchan_protocol_report;

sepchan_status sepchan_protocol_validate(const sepchan_protocol* root,
                                         double tol,
                                         sepchan_protocol_report** out);
void sepchan_protocol_report_destroy(sepchan_protocol_report* r);
int sepchan_protocol_report_node_count(const sepchan_protocol_report* r);
/* Path "" denotes the root; otherwise dot-joined outcome indices. */
const char* sepchan_protocol_report_node_path(const sepchan_protocol_report* r,
                                              int index);
sepchan_status sepchan_protocol_report_node(const sepchan_protocol_report* r,
                                            int index, sepchan_party* party,
                                            double* completeness_deviation);
int sepchan_protocol_report_complete(const sepchan_protocol_report* r);
int sepchan_protocol_report_alternating(const sepchan_protocol_report* r);
int sepchan_protocol_report_depth(const sepchan_protocol_report* r);
sepchan_status sepchan_protocol_report_max_deviation(
    const sepchan_protocol_report* r, double* out);

typedef struct sepchan_simulation sepchan_simulation;

sepchan_status sepchan_simulate(const sepchan_protocol* root,
                                const sepchan_pure* const* inputs,
                                size_t n_inputs, double cutoff,
                                sepchan_simulation** out);
void sepchan_simulation_destroy(sepchan_simulation* s);
int sepchan_simulation_branch_count(const sepchan_simulation* s);
int sepchan_simulation_input_count(const sepchan_simulation* s);
const char* sepchan_simulation_branch_id(const sepchan_simulation* s,
                                         int branch);
sepchan_status sepchan_simulation_net_operator(const sepchan_simulation* s,
                                               int branch,
                                               sepchan_matrix** out);
/* *post is NULL when the branch vanishes for this input. */
sepchan_status sepchan_simulation_outcome(const sepchan_simulation* s,
                                          int branch, int input,
                                          double* probability,
                                          sepchan_pure** post);

typedef struct sepchan_violations sepchan_violations;

sepchan_status sepchan_branch_nonvanishing_check(const sepchan_simulation* s,
                                                 int input_i, int input_j,
                                                 double cutoff,
                                                 sepchan_violations** out);
void sepchan_violations_destroy(sepchan_violations* v);
int sepchan_violations_count(const sepchan_violations* v);
sepchan_status sepchan_violations_get(const sepchan_violations* v, int index,
                                      int* branch, int* vanishing_input,
                                      int* surviving_input);
const char* sepchan_violations_branch_id(const sepchan_violations* v,
                                         int index);

sepchan_status sepchan_nielsen_rank2(const sepchan_pure* src,
                                     const sepchan_pure* tgt, double tol,
                                     sepchan_protocol** out);

#ifdef __cplusplus
}
#endif

#endif /* SEPCHAN_H */
