// Exercises the public C interface end to end, exactly as an external
// consumer of the shared library would use it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "sepchan/sepchan.h"

namespace {

std::vector<double> interleave(std::initializer_list<double> reals) {
  std::vector<double> out;
  for (double r : reals) {
    out.push_back(r);
    out.push_back(0.0);
  }
  return out;
}

struct Cleanup {
  std::vector<sepchan_matrix*> matrices;
  std::vector<sepchan_pure*> pures;
  std::vector<sepchan_density*> densities;
  std::vector<sepchan_channel*> channels;
  std::vector<sepchan_protocol*> protocols;
  ~Cleanup() {
    for (auto* m : matrices) sepchan_matrix_destroy(m);
    for (auto* p : pures) sepchan_pure_destroy(p);
    for (auto* d : densities) sepchan_density_destroy(d);
    for (auto* c : channels) sepchan_channel_destroy(c);
    for (auto* p : protocols) sepchan_protocol_destroy(p);
  }
};

}  // namespace

TEST_CASE("version and dimension cap") {
  CHECK(std::string(sepchan_version()) == "0.1.0");
  CHECK(sepchan_max_dim() == 16);
  sepchan_set_max_dim(20);
  CHECK(sepchan_max_dim() == 20);
  sepchan_set_max_dim(16);
}

TEST_CASE("matrix handles and operations") {
  Cleanup gc;
  sepchan_matrix* a = nullptr;
  REQUIRE(sepchan_matrix_create(2, 2, &a) == SEPCHAN_OK);
  gc.matrices.push_back(a);
  CHECK(sepchan_matrix_rows(a) == 2);
  CHECK(sepchan_matrix_cols(a) == 2);
  CHECK(sepchan_matrix_set_element(a, 0, 0, 1.0, 0.0) == SEPCHAN_OK);
  CHECK(sepchan_matrix_set_element(a, 1, 1, 0.0, 2.0) == SEPCHAN_OK);
  CHECK(sepchan_matrix_set_element(a, 5, 0, 0.0, 0.0) ==
        SEPCHAN_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(sepchan_last_error()) > 0);

  double re = 0.0, im = 0.0;
  CHECK(sepchan_matrix_get_element(a, 1, 1, &re, &im) == SEPCHAN_OK);
  CHECK(im == 2.0);

  sepchan_matrix* id3 = nullptr;
  REQUIRE(sepchan_matrix_identity(3, &id3) == SEPCHAN_OK);
  gc.matrices.push_back(id3);

  sepchan_matrix* prod = nullptr;
  REQUIRE(sepchan_tensor_product(a, id3, &prod) == SEPCHAN_OK);
  gc.matrices.push_back(prod);
  CHECK(sepchan_matrix_rows(prod) == 6);

  sepchan_matrix* realigned = nullptr;
  REQUIRE(sepchan_realign(prod, 2, 3, &realigned) == SEPCHAN_OK);
  gc.matrices.push_back(realigned);
  CHECK(sepchan_matrix_rows(realigned) == 4);
  CHECK(sepchan_matrix_cols(realigned) == 9);

  std::vector<double> singular(4);
  REQUIRE(sepchan_svd(realigned, singular.data(), singular.size(), nullptr,
                      nullptr) == SEPCHAN_OK);
  CHECK(singular[1] <= 1e-10 * singular[0]);  // product operator: rank one

  double dist = -1.0;
  REQUIRE(sepchan_frobenius_distance(id3, id3, &dist) == SEPCHAN_OK);
  CHECK(dist == 0.0);
  CHECK(sepchan_frobenius_distance(a, id3, &dist) ==
        SEPCHAN_ERR_DIMENSION_MISMATCH);
}

TEST_CASE("pure states, schmidt data and span scans") {
  Cleanup gc;
  const std::vector<double> bell = interleave(
      {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});
  sepchan_pure* psi = nullptr;
  REQUIRE(sepchan_pure_create(2, 2, bell.data(), bell.size(), 0, 1e-10,
                              &psi) == SEPCHAN_OK);
  gc.pures.push_back(psi);

  int rank = 0;
  REQUIRE(sepchan_schmidt_rank(psi, 1e-10, &rank) == SEPCHAN_OK);
  CHECK(rank == 2);

  sepchan_schmidt* sd = nullptr;
  REQUIRE(sepchan_schmidt_decompose(psi, 1e-10, &sd) == SEPCHAN_OK);
  CHECK(sepchan_schmidt_count(sd) == 2);
  std::vector<double> weights(2);
  CHECK(sepchan_schmidt_weights(sd, weights.data(), weights.size()) ==
        SEPCHAN_OK);
  CHECK(std::abs(weights[0] - 0.5) < 1e-12);
  sepchan_matrix* left = nullptr;
  CHECK(sepchan_schmidt_left_vectors(sd, &left) == SEPCHAN_OK);
  gc.matrices.push_back(left);
  CHECK(sepchan_matrix_rows(left) == 2);
  sepchan_schmidt_destroy(sd);

  // Norm violation without the normalize flag.
  const std::vector<double> unnormalized = interleave({1.0, 1.0, 0.0, 0.0});
  sepchan_pure* bad = nullptr;
  CHECK(sepchan_pure_create(2, 2, unnormalized.data(), unnormalized.size(), 0,
                            1e-10, &bad) == SEPCHAN_ERR_VALIDATION);
  REQUIRE(sepchan_pure_create(2, 2, unnormalized.data(), unnormalized.size(),
                              1, 1e-10, &bad) == SEPCHAN_OK);
  gc.pures.push_back(bad);

  const std::vector<double> e00 = interleave({1.0, 0.0, 0.0, 0.0});
  const std::vector<double> e11 = interleave({0.0, 0.0, 0.0, 1.0});
  sepchan_pure* s00 = nullptr;
  sepchan_pure* s11 = nullptr;
  REQUIRE(sepchan_pure_create(2, 2, e00.data(), e00.size(), 0, 1e-10, &s00) ==
          SEPCHAN_OK);
  REQUIRE(sepchan_pure_create(2, 2, e11.data(), e11.size(), 0, 1e-10, &s11) ==
          SEPCHAN_OK);
  gc.pures.push_back(s00);
  gc.pures.push_back(s11);

  sepchan_span_report* span = nullptr;
  REQUIRE(sepchan_span_scan(s00, s11, 1e-10, &span) == SEPCHAN_OK);
  CHECK(sepchan_span_report_verdict(span) == SEPCHAN_SPAN_FINITE_SET);
  CHECK(sepchan_span_report_witness_count(span) == 2);
  double cr = 0, ci = 0, dr = 0, di = 0;
  CHECK(sepchan_span_report_witness(span, 0, &cr, &ci, &dr, &di) == SEPCHAN_OK);
  sepchan_span_report_destroy(span);
}

TEST_CASE("densities: construction, eigendecomposition, fidelity") {
  Cleanup gc;
  // Maximally mixed on 2x2.
  std::vector<double> data(32, 0.0);
  for (int i = 0; i < 4; ++i) data[static_cast<size_t>(2 * (4 * i + i))] = 0.25;
  sepchan_density* rho = nullptr;
  REQUIRE(sepchan_density_create(2, 2, data.data(), data.size(), 1e-10,
                                 &rho) == SEPCHAN_OK);
  gc.densities.push_back(rho);

  sepchan_eigensystem* eig = nullptr;
  REQUIRE(sepchan_density_eigendecompose(rho, 1e-10, &eig) == SEPCHAN_OK);
  CHECK(sepchan_eigensystem_count(eig) == 4);
  double w = 0.0;
  CHECK(sepchan_eigensystem_weight(eig, 0, &w) == SEPCHAN_OK);
  CHECK(std::abs(w - 0.25) < 1e-12);
  sepchan_pure* state = nullptr;
  CHECK(sepchan_eigensystem_state(eig, 0, &state) == SEPCHAN_OK);
  gc.pures.push_back(state);
  sepchan_eigensystem_destroy(eig);

  double fidelity = -1.0;
  REQUIRE(sepchan_fidelity_with_pure(rho, state, &fidelity) == SEPCHAN_OK);
  CHECK(std::abs(fidelity - 0.25) < 1e-12);

  // Trace violation is reported as a validation error.
  data[0] = 0.5;
  sepchan_density* bad = nullptr;
  CHECK(sepchan_density_create(2, 2, data.data(), data.size(), 1e-10, &bad) ==
        SEPCHAN_ERR_VALIDATION);
  CHECK(std::string(sepchan_last_error()).find("trace") != std::string::npos);
}

TEST_CASE("built-in instance workflow through the C interface") {
  Cleanup gc;
  double alpha = 0.0, beta = 0.0;
  REQUIRE(sepchan_paper_constants(&alpha, &beta) == SEPCHAN_OK);
  CHECK(std::abs(4.0 * alpha * beta - 1.0) <= 1e-14);

  sepchan_channel* ch = nullptr;
  REQUIRE(sepchan_paper_channel(&ch) == SEPCHAN_OK);
  gc.channels.push_back(ch);
  CHECK(sepchan_channel_operator_count(ch) == 6);

  double deviation = 1.0;
  int pass = 0;
  REQUIRE(sepchan_channel_validate(ch, 1e-12, &deviation, &pass) == SEPCHAN_OK);
  CHECK(pass == 1);
  CHECK(deviation <= 1e-12);

  sepchan_sep_report* sep = nullptr;
  REQUIRE(sepchan_channel_is_separable(ch, 1e-10, &sep) == SEPCHAN_OK);
  CHECK(sepchan_sep_report_separable(sep) == 1);
  int is_product = 0;
  double second = 1.0, residual = 1.0;
  CHECK(sepchan_sep_report_operator(sep, 0, &is_product, &second, &residual) ==
        SEPCHAN_OK);
  CHECK(is_product == 1);
  CHECK(second <= 1e-12);
  sepchan_matrix* af = nullptr;
  sepchan_matrix* bf = nullptr;
  CHECK(sepchan_sep_report_factors(sep, 4, &af, &bf) == SEPCHAN_OK);
  gc.matrices.push_back(af);
  gc.matrices.push_back(bf);
  sepchan_sep_report_destroy(sep);

  sepchan_density* rho = nullptr;
  REQUIRE(sepchan_paper_source(0.5, &rho) == SEPCHAN_OK);
  gc.densities.push_back(rho);
  sepchan_pure* phi = nullptr;
  REQUIRE(sepchan_paper_target(&phi) == SEPCHAN_OK);
  gc.pures.push_back(phi);

  sepchan_density* out = nullptr;
  REQUIRE(sepchan_channel_apply(ch, rho, 1e-10, &out) == SEPCHAN_OK);
  gc.densities.push_back(out);
  double fidelity = 0.0;
  REQUIRE(sepchan_fidelity_with_pure(out, phi, &fidelity) == SEPCHAN_OK);
  CHECK(fidelity >= 1.0 - 1e-10);

  sepchan_distill_report* rep = nullptr;
  REQUIRE(sepchan_distill_verify(ch, rho, phi, 1e-10, &rep) == SEPCHAN_OK);
  CHECK(sepchan_distill_report_success(rep) == 1);
  CHECK(sepchan_distill_report_operator_count(rep) == 6);
  CHECK(sepchan_distill_report_eigenstate_count(rep) == 2);
  double prob = 0.0, coeff = 0.0;
  sepchan_branch_status status = SEPCHAN_BRANCH_ZERO;
  CHECK(sepchan_distill_report_branch(rep, 0, 0, &prob, &coeff, &status) ==
        SEPCHAN_OK);
  double total = 0.0;
  CHECK(sepchan_distill_report_total_probability(rep, 0, &total) == SEPCHAN_OK);
  CHECK(std::abs(total - 1.0) < 1e-10);
  CHECK(sepchan_distill_report_grid_count(rep) == 21);
  CHECK(std::string(sepchan_distill_report_message(rep)).empty());
  sepchan_distill_report_destroy(rep);

  sepchan_pure* psi1 = nullptr;
  sepchan_pure* psi2 = nullptr;
  REQUIRE(sepchan_paper_psi1(&psi1) == SEPCHAN_OK);
  REQUIRE(sepchan_paper_psi2(&psi2) == SEPCHAN_OK);
  gc.pures.push_back(psi1);
  gc.pures.push_back(psi2);

  sepchan_span_report* span = nullptr;
  REQUIRE(sepchan_span_scan(psi1, psi2, 1e-10, &span) == SEPCHAN_OK);
  CHECK(sepchan_span_report_verdict(span) == SEPCHAN_SPAN_NO_PRODUCT);
  sepchan_span_report_destroy(span);

  sepchan_case_report* cases = nullptr;
  REQUIRE(sepchan_case_analysis(ch, psi1, psi2, phi, 1e-10, &cases) ==
          SEPCHAN_OK);
  CHECK(sepchan_case_report_count(cases) == 6);
  double cre = 0, cim = 0, dre = 0, dim = 0;
  sepchan_overlap_case kind = SEPCHAN_CASE_BOTH_ZERO;
  int rank_a = 0, rank_b = 0;
  CHECK(sepchan_case_report_record(cases, 0, &cre, &cim, &dre, &dim, &kind,
                                   &rank_a, &rank_b) == SEPCHAN_OK);
  CHECK(kind == SEPCHAN_CASE_ONE_NONZERO);
  CHECK(std::abs(std::hypot(cre, cim) - 1.0 / std::sqrt(2.0)) < 1e-12);
  int has_witness = 1;
  CHECK(sepchan_case_report_witness(cases, 0, &has_witness, nullptr, nullptr,
                                    nullptr) == SEPCHAN_OK);
  CHECK(has_witness == 0);
  sepchan_case_report_destroy(cases);

  // apply_branch on the first operator.
  sepchan_matrix* e0 = nullptr;
  REQUIRE(sepchan_channel_get_operator(ch, 0, &e0) == SEPCHAN_OK);
  gc.matrices.push_back(e0);
  sepchan_pure* post = nullptr;
  REQUIRE(sepchan_apply_branch(e0, psi1, 1e-12, &prob, &post) == SEPCHAN_OK);
  CHECK(std::abs(prob - 0.5) < 1e-12);
  REQUIRE(post != nullptr);
  gc.pures.push_back(post);

  sepchan_pure* nothing = nullptr;
  REQUIRE(sepchan_apply_branch(e0, psi2, 1e-12, &prob, &nothing) == SEPCHAN_OK);
  CHECK(prob <= 1e-12);
  CHECK(nothing == nullptr);
}

TEST_CASE("monotones and ensembles through the C interface") {
  Cleanup gc;
  const double uniform[2] = {0.5, 0.5};
  const double skew[2] = {0.9330127, 0.0669873};

  int majorized = 0;
  REQUIRE(sepchan_majorization_check(uniform, 2, skew, 2, &majorized) ==
          SEPCHAN_OK);
  CHECK(majorized == 1);
  REQUIRE(sepchan_majorization_check(skew, 2, uniform, 2, &majorized) ==
          SEPCHAN_OK);
  CHECK(majorized == 0);

  double value = 0.0;
  REQUIRE(sepchan_tail_sum(skew, 2, 2, &value) == SEPCHAN_OK);
  CHECK(std::abs(value - 0.0669873) < 1e-15);
  CHECK(sepchan_tail_sum(skew, 2, 3, &value) == SEPCHAN_ERR_INVALID_ARGUMENT);

  REQUIRE(sepchan_vidal_pmax(skew, 2, uniform, 2, &value) == SEPCHAN_OK);
  CHECK(std::abs(value - 0.1339746) < 1e-7);

  const double unsorted[2] = {0.3, 0.7};
  CHECK(sepchan_vidal_pmax(unsorted, 2, uniform, 2, &value) ==
        SEPCHAN_ERR_VALIDATION);

  sepchan_pure* phi = nullptr;
  REQUIRE(sepchan_paper_target(&phi) == SEPCHAN_OK);
  gc.pures.push_back(phi);
  sepchan_density* member = nullptr;
  REQUIRE(sepchan_density_from_pure(phi, &member) == SEPCHAN_OK);
  gc.densities.push_back(member);

  sepchan_ensemble* ens = nullptr;
  REQUIRE(sepchan_ensemble_create(&ens) == SEPCHAN_OK);
  CHECK(sepchan_ensemble_add(ens, 1.0, member) == SEPCHAN_OK);
  REQUIRE(sepchan_ensemble_average_pmax(ens, phi, 1e-10, &value) == SEPCHAN_OK);
  CHECK(std::abs(value - 1.0) < 1e-10);
  sepchan_ensemble_destroy(ens);
}

TEST_CASE("protocol trees through the C interface") {
  Cleanup gc;
  // Alice: {|2><2|, |0><0|+|1><1|}; violates nonvanishing on (psi1, psi2).
  sepchan_matrix* p2 = nullptr;
  sepchan_matrix* p01 = nullptr;
  REQUIRE(sepchan_matrix_create(3, 3, &p2) == SEPCHAN_OK);
  REQUIRE(sepchan_matrix_create(3, 3, &p01) == SEPCHAN_OK);
  gc.matrices.push_back(p2);
  gc.matrices.push_back(p01);
  CHECK(sepchan_matrix_set_element(p2, 2, 2, 1.0, 0.0) == SEPCHAN_OK);
  CHECK(sepchan_matrix_set_element(p01, 0, 0, 1.0, 0.0) == SEPCHAN_OK);
  CHECK(sepchan_matrix_set_element(p01, 1, 1, 1.0, 0.0) == SEPCHAN_OK);

  sepchan_protocol* root = nullptr;
  REQUIRE(sepchan_protocol_create(SEPCHAN_PARTY_ALICE, &root) == SEPCHAN_OK);
  gc.protocols.push_back(root);
  CHECK(sepchan_protocol_add_branch(root, p2, nullptr) == SEPCHAN_OK);
  CHECK(sepchan_protocol_add_branch(root, p01, nullptr) == SEPCHAN_OK);
  CHECK(sepchan_protocol_branch_count(root) == 2);
  CHECK(sepchan_protocol_party(root) == SEPCHAN_PARTY_ALICE);

  sepchan_protocol_report* vrep = nullptr;
  REQUIRE(sepchan_protocol_validate(root, 1e-10, &vrep) == SEPCHAN_OK);
  CHECK(sepchan_protocol_report_complete(vrep) == 1);
  CHECK(sepchan_protocol_report_node_count(vrep) == 1);
  CHECK(std::string(sepchan_protocol_report_node_path(vrep, 0)).empty());
  sepchan_protocol_report_destroy(vrep);

  sepchan_pure* psi1 = nullptr;
  sepchan_pure* psi2 = nullptr;
  REQUIRE(sepchan_paper_psi1(&psi1) == SEPCHAN_OK);
  REQUIRE(sepchan_paper_psi2(&psi2) == SEPCHAN_OK);
  gc.pures.push_back(psi1);
  gc.pures.push_back(psi2);

  const sepchan_pure* inputs[2] = {psi1, psi2};
  sepchan_simulation* sim = nullptr;
  REQUIRE(sepchan_simulate(root, inputs, 2, 1e-12, &sim) == SEPCHAN_OK);
  CHECK(sepchan_simulation_branch_count(sim) == 2);
  CHECK(sepchan_simulation_input_count(sim) == 2);
  CHECK(std::string(sepchan_simulation_branch_id(sim, 0)) == "0");

  double prob = 0.0;
  sepchan_pure* post = nullptr;
  REQUIRE(sepchan_simulation_outcome(sim, 0, 0, &prob, &post) == SEPCHAN_OK);
  CHECK(prob <= 1e-12);
  CHECK(post == nullptr);

  sepchan_violations* v = nullptr;
  REQUIRE(sepchan_branch_nonvanishing_check(sim, 0, 1, 1e-12, &v) ==
          SEPCHAN_OK);
  CHECK(sepchan_violations_count(v) == 1);
  int branch = -1, vanishing = -1, surviving = -1;
  CHECK(sepchan_violations_get(v, 0, &branch, &vanishing, &surviving) ==
        SEPCHAN_OK);
  CHECK(branch == 0);
  CHECK(vanishing == 0);
  CHECK(surviving == 1);
  CHECK(std::string(sepchan_violations_branch_id(v, 0)) == "0");
  sepchan_violations_destroy(v);
  sepchan_simulation_destroy(sim);

  // Nielsen construction plus read-back of the generated tree.
  sepchan_pure* phi = nullptr;
  REQUIRE(sepchan_paper_target(&phi) == SEPCHAN_OK);
  gc.pures.push_back(phi);
  sepchan_protocol* nielsen = nullptr;
  REQUIRE(sepchan_nielsen_rank2(psi1, phi, 1e-10, &nielsen) == SEPCHAN_OK);
  gc.protocols.push_back(nielsen);
  CHECK(sepchan_protocol_branch_count(nielsen) == 2);
  sepchan_protocol* bob = nullptr;
  REQUIRE(sepchan_protocol_branch_child(nielsen, 0, &bob) == SEPCHAN_OK);
  REQUIRE(bob != nullptr);
  gc.protocols.push_back(bob);
  CHECK(sepchan_protocol_party(bob) == SEPCHAN_PARTY_BOB);
  CHECK(sepchan_protocol_branch_count(bob) == 1);

  // Impossible direction is a validation error.
  sepchan_protocol* backwards = nullptr;
  CHECK(sepchan_nielsen_rank2(phi, psi1, 1e-10, &backwards) ==
        SEPCHAN_ERR_VALIDATION);
}

TEST_CASE("null arguments are rejected with a message") {
  CHECK(sepchan_matrix_create(2, 2, nullptr) == SEPCHAN_ERR_INVALID_ARGUMENT);
  CHECK(sepchan_paper_channel(nullptr) == SEPCHAN_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(sepchan_last_error()) > 0);
  double out = 0.0;
  CHECK(sepchan_vidal_pmax(nullptr, 0, nullptr, 0, &out) ==
        SEPCHAN_ERR_INVALID_ARGUMENT);
}
