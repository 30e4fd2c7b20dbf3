#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/distill.hpp"
#include "core/locc.hpp"
#include "core/monotones.hpp"
#include "core/sampling.hpp"

using namespace sepchan;

namespace {

ProtocolNode leaf_node(Party party, std::vector<Mat> ops) {
  ProtocolNode node(party);
  for (Mat& m : ops) {
    node.local_operators.push_back(std::move(m));
    node.children.push_back(nullptr);
  }
  return node;
}

Mat diag3(double a, double b, double c) {
  Mat m = Mat::Zero(3, 3);
  m(0, 0) = Complex(a, 0);
  m(1, 1) = Complex(b, 0);
  m(2, 2) = Complex(c, 0);
  return m;
}

Mat projector3(std::initializer_list<int> slots) {
  Mat m = Mat::Zero(3, 3);
  for (int s : slots) m(s, s) = Complex(1, 0);
  return m;
}

// Complete local Kraus set on C^n (whitened Ginibre operators).
std::vector<Mat> random_local_povm(Rng& rng, int n, int k) {
  return random_channel(rng, BipartiteDims{n, 1}, k).operators;
}

}  // namespace

TEST_CASE("validate_protocol closed forms") {
  ProtocolNode trivial = leaf_node(Party::Alice, {Mat(Mat::Identity(3, 3))});
  ProtocolValidationReport r = validate_protocol(trivial, 1e-10);
  CHECK(r.complete);
  CHECK(r.depth == 1);
  CHECK(r.nodes.size() == 1);
  CHECK(r.nodes[0].path.empty());

  const double q = 0.9330127;
  ProtocolNode weighted = leaf_node(
      Party::Alice,
      {diag3(std::sqrt(q), std::sqrt(1 - q), 0),
       diag3(std::sqrt(1 - q), std::sqrt(q), 0), diag3(0, 0, 1)});
  r = validate_protocol(weighted, 1e-10);
  CHECK(r.max_deviation <= 1e-12);
  CHECK(r.complete);

  ProtocolNode overcomplete = leaf_node(
      Party::Alice, {Mat(Mat::Identity(3, 3)), Mat(Mat::Identity(3, 3))});
  r = validate_protocol(overcomplete, 1e-10);
  CHECK_FALSE(r.complete);
  CHECK(std::abs(r.max_deviation - std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("validate_protocol flags structural defects") {
  ProtocolNode empty(Party::Alice);
  CHECK_THROWS_AS(validate_protocol(empty, 1e-10), InvalidArgument);

  ProtocolNode mismatch(Party::Alice);
  mismatch.local_operators.push_back(Mat::Identity(3, 3));
  CHECK_THROWS_AS(validate_protocol(mismatch, 1e-10), InvalidArgument);
}

TEST_CASE("validate_protocol reports non-alternating trees without rejecting") {
  ProtocolNode root(Party::Alice);
  root.local_operators.push_back(Mat::Identity(2, 2));
  root.children.push_back(std::make_unique<ProtocolNode>(
      leaf_node(Party::Alice, {Mat(Mat::Identity(2, 2))})));
  const ProtocolValidationReport r = validate_protocol(root, 1e-10);
  CHECK(r.complete);
  CHECK_FALSE(r.alternating);
  CHECK(r.depth == 2);
}

TEST_CASE("simulate closed forms") {
  const PureState psi1 = paper_psi1();

  ProtocolNode trivial = leaf_node(Party::Alice, {Mat(Mat::Identity(3, 3))});
  auto records = simulate(trivial, {psi1});
  REQUIRE(records.size() == 1);
  CHECK(std::abs(records[0].per_input[0].probability - 1.0) < 1e-14);
  REQUIRE(records[0].per_input[0].post.has_value());
  CHECK(1.0 - std::abs(inner_product(*records[0].per_input[0].post, psi1)) <
        1e-14);

  // Alice projective measurement {|0><0|, |1><1|+|2><2|} on psi1.
  ProtocolNode measure =
      leaf_node(Party::Alice, {projector3({0}), projector3({1, 2})});
  records = simulate(measure, {psi1});
  REQUIRE(records.size() == 2);
  CHECK(std::abs(records[0].per_input[0].probability - 0.5) < 1e-12);
  CHECK(std::abs(records[1].per_input[0].probability - 0.5) < 1e-12);
  // Posts are |01> and |10>.
  CHECK(std::abs(std::abs((*records[0].per_input[0].post).amplitudes[1]) - 1.0) <
        1e-12);
  CHECK(std::abs(std::abs((*records[1].per_input[0].post).amplitudes[3]) - 1.0) <
        1e-12);
}

TEST_CASE("simulate rejects mismatched dims") {
  ProtocolNode measure = leaf_node(Party::Alice, {Mat(Mat::Identity(3, 3))});
  Vec v = Vec::Zero(4);
  v[0] = Complex(1, 0);
  const PureState wrong = make_pure(BipartiteDims{2, 2}, std::move(v));
  CHECK_THROWS_AS(simulate(measure, {wrong}), DimensionMismatch);
}

TEST_CASE("branch nonvanishing check on the projective examples") {
  const PureState psi1 = paper_psi1();
  const PureState psi2 = paper_psi2();

  ProtocolNode keep_both =
      leaf_node(Party::Alice, {projector3({0}), projector3({1, 2})});
  auto records = simulate(keep_both, {psi1, psi2});
  CHECK(branch_nonvanishing_check(records, 0, 1).empty());

  ProtocolNode kill_psi1 =
      leaf_node(Party::Alice, {projector3({2}), projector3({0, 1})});
  records = simulate(kill_psi1, {psi1, psi2});
  const auto violations = branch_nonvanishing_check(records, 0, 1);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].branch_id == std::vector<int>{0});
  CHECK(violations[0].vanishing_input == 0);
  CHECK(violations[0].surviving_input == 1);

  // Identical inputs never disagree.
  records = simulate(kill_psi1, {psi1, psi1});
  CHECK(branch_nonvanishing_check(records, 0, 1).empty());

  CHECK_THROWS_AS(branch_nonvanishing_check(records, 0, 5), InvalidArgument);
}

TEST_CASE("nielsen protocol for the built-in conversion") {
  const PureState psi1 = paper_psi1();
  const PureState phi = paper_target();
  const ProtocolNode proto = nielsen_rank2_protocol(psi1, phi, 1e-10);

  const ProtocolValidationReport v = validate_protocol(proto, 1e-10);
  CHECK(v.complete);
  CHECK(v.alternating);
  CHECK(v.depth == 2);

  auto records = simulate(proto, {psi1});
  REQUIRE(records.size() == 2);
  double total = 0.0;
  for (const BranchRecord& rec : records) {
    CHECK(std::abs(rec.per_input[0].probability - 0.5) < 1e-10);
    total += rec.per_input[0].probability;
    REQUIRE(rec.per_input[0].post.has_value());
    CHECK(1.0 - std::abs(inner_product(phi, *rec.per_input[0].post)) < 1e-10);
  }
  CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("nielsen protocol degenerate and closed-form cases") {
  const PureState psi1 = paper_psi1();

  // src = tgt realizes as one unitary branch.
  const ProtocolNode identity_proto = nielsen_rank2_protocol(psi1, psi1, 1e-10);
  CHECK(identity_proto.local_operators.size() == 1);
  auto records = simulate(identity_proto, {psi1});
  REQUIRE(records.size() == 1);
  CHECK(std::abs(records[0].per_input[0].probability - 1.0) < 1e-12);
  CHECK(1.0 - std::abs(inner_product(psi1, *records[0].per_input[0].post)) <
        1e-10);

  // Weights (0.6, 0.4) -> (0.9, 0.1): branch weights solve to 0.625/0.375.
  Rng rng(101);
  const BipartiteDims dims{2, 2};
  const PureState src = state_from_schmidt(dims, {0.6, 0.4},
                                           random_unitary(rng, 2),
                                           random_unitary(rng, 2));
  const PureState tgt = state_from_schmidt(dims, {0.9, 0.1},
                                           random_unitary(rng, 2),
                                           random_unitary(rng, 2));
  const ProtocolNode proto = nielsen_rank2_protocol(src, tgt, 1e-10);
  REQUIRE(proto.local_operators.size() == 2);
  records = simulate(proto, {src});
  REQUIRE(records.size() == 2);
  CHECK(std::abs(records[0].per_input[0].probability - 0.625) < 1e-10);
  CHECK(std::abs(records[1].per_input[0].probability - 0.375) < 1e-10);
  for (const BranchRecord& rec : records) {
    CHECK(1.0 - std::abs(inner_product(tgt, *rec.per_input[0].post)) < 1e-10);
  }
  // The closed-form leading Alice coefficient: x1^2 = q*N1/p = 0.9375.
  const SchmidtDecomposition sd = schmidt_decompose(src, 1e-10);
  const Vec image = proto.local_operators[0] * sd.left_vectors.col(0);
  CHECK(std::abs(image.squaredNorm() - 0.9375) < 1e-10);
}

TEST_CASE("nielsen protocol rejects inadmissible pairs") {
  const PureState psi1 = paper_psi1();
  const PureState phi = paper_target();
  CHECK_THROWS_AS(nielsen_rank2_protocol(phi, psi1, 1e-10), ValidationError);

  Vec ghz = Vec::Zero(9);
  ghz[0] = ghz[4] = ghz[8] = Complex(1.0 / std::sqrt(3.0), 0);
  const PureState rank3 = make_pure(BipartiteDims{3, 3}, std::move(ghz));
  CHECK_THROWS_AS(nielsen_rank2_protocol(rank3, phi, 1e-10), Unsupported);
}

TEST_CASE("leaf probabilities, net operators and completeness on random trees") {
  Rng rng(103);
  const BipartiteDims dims{2, 3};
  for (int trial = 0; trial < 10; ++trial) {
    // Two rounds: Alice then an outcome-dependent Bob measurement.
    ProtocolNode root(Party::Alice);
    auto alice_ops = random_local_povm(rng, 2, rng.uniform_int(2, 3));
    for (Mat& m : alice_ops) {
      root.local_operators.push_back(std::move(m));
      auto bob = std::make_unique<ProtocolNode>(
          leaf_node(Party::Bob, random_local_povm(rng, 3,
                                                  rng.uniform_int(1, 3))));
      root.children.push_back(std::move(bob));
    }
    REQUIRE(validate_protocol(root, 1e-10).complete);

    const PureState input = random_pure_state(rng, dims);
    const auto records = simulate(root, {input});

    double total = 0.0;
    Mat completeness = Mat::Zero(6, 6);
    for (const BranchRecord& rec : records) {
      total += rec.per_input[0].probability;
      completeness += rec.net_operator.adjoint() * rec.net_operator;

      // Recompute the net operator independently from the path.
      Mat net = Mat::Identity(6, 6);
      const ProtocolNode* node = &root;
      for (int outcome : rec.branch_id) {
        const Mat& local = node->local_operators[static_cast<size_t>(outcome)];
        const Mat lifted = node->party == Party::Alice
                               ? tensor_product(local, Mat(Mat::Identity(3, 3)))
                               : tensor_product(Mat(Mat::Identity(2, 2)), local);
        net = lifted * net;
        node = node->children[static_cast<size_t>(outcome)].get();
      }
      CHECK(frobenius_distance(net, rec.net_operator) < 1e-12);
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
    CHECK(frobenius_distance(completeness, Mat(Mat::Identity(6, 6))) < 1e-8);
  }
}

TEST_CASE("random admissible conversions succeed and stay separable") {
  Rng rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const int da = rng.uniform_int(2, 3);
    const int db = rng.uniform_int(2, 3);
    const BipartiteDims dims{da, db};
    const double p = rng.uniform(0.5, 0.99);
    const double q = rng.uniform(p, 1.0);
    const PureState src = state_from_schmidt(dims, {p, 1.0 - p},
                                             random_unitary(rng, da),
                                             random_unitary(rng, db));
    const PureState tgt = state_from_schmidt(dims, {q, 1.0 - q},
                                             random_unitary(rng, da),
                                             random_unitary(rng, db));
    REQUIRE(majorization_check(SchmidtWeights{{p, 1.0 - p}},
                               SchmidtWeights{{q, 1.0 - q}}));
    const ProtocolNode proto = nielsen_rank2_protocol(src, tgt, 1e-10);
    CHECK(validate_protocol(proto, 1e-10).complete);

    const auto records = simulate(proto, {src});
    double total = 0.0;
    for (const BranchRecord& rec : records) {
      total += rec.per_input[0].probability;
      if (rec.per_input[0].post.has_value()) {
        CHECK(1.0 - std::abs(inner_product(tgt, *rec.per_input[0].post)) <
              1e-10);
      }
      // LOCC branches are product operators.
      const FactorResult f = factor_product(rec.net_operator, dims, 1e-8);
      REQUIRE(f.factorization.has_value());
      CHECK(f.factorization->residual <= 1e-8);
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
  }
}
