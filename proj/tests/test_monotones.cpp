#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/distill.hpp"
#include "core/monotones.hpp"
#include "core/sampling.hpp"

using namespace sepchan;

TEST_CASE("make_weights validation") {
  CHECK_NOTHROW(make_weights({0.5, 0.5}));
  CHECK_NOTHROW(make_weights({1.0}));
  CHECK_THROWS_AS(make_weights({0.3, 0.5, 0.2}), ValidationError);  // order
  CHECK_THROWS_AS(make_weights({0.6, 0.6}), ValidationError);       // sum
  CHECK_THROWS_AS(make_weights({1.4, -0.4}), ValidationError);      // range
  CHECK_THROWS_AS(make_weights({}), InvalidArgument);
}

TEST_CASE("majorization closed forms") {
  const SchmidtWeights uniform = make_weights({0.5, 0.5});
  const SchmidtWeights target = make_weights({0.9330127, 0.0669873});
  CHECK(majorization_check(uniform, target));
  CHECK_FALSE(majorization_check(target, uniform));
  CHECK(majorization_check(target, target));
  CHECK(majorization_check(uniform, uniform));
}

TEST_CASE("tail sums") {
  const SchmidtWeights w = make_weights({0.5, 0.5});
  CHECK(tail_sum(w, 1) == 1.0);
  CHECK(tail_sum(w, 2) == 0.5);
  CHECK_THROWS_AS(tail_sum(w, 0), InvalidArgument);
  CHECK_THROWS_AS(tail_sum(w, 3), InvalidArgument);

  const SchmidtWeights phi = make_weights({0.9330127, 0.0669873});
  CHECK(std::abs(tail_sum(phi, 2) - 0.0669873) < 1e-15);
}

TEST_CASE("conversion probability closed forms") {
  const SchmidtWeights uniform = make_weights({0.5, 0.5});
  const SchmidtWeights target = make_weights({0.9330127, 0.0669873});
  CHECK(vidal_pmax(uniform, target) == 1.0);
  CHECK(std::abs(vidal_pmax(target, uniform) - 0.1339746) < 1e-7);
  CHECK(vidal_pmax(target, target) == 1.0);
}

TEST_CASE("conversion probability rank screening") {
  const SchmidtWeights rank1 = make_weights({1.0});
  const SchmidtWeights rank2 = make_weights({0.7, 0.3});
  const SchmidtWeights rank3 = make_weights({0.5, 0.3, 0.2});
  CHECK(vidal_pmax(rank1, rank2) == 0.0);
  CHECK(vidal_pmax(rank2, rank3) == 0.0);
  CHECK(vidal_pmax(rank3, rank2) > 0.0);
  CHECK(vidal_pmax(rank2, rank1) == 1.0);
}

TEST_CASE("majorization agrees with conversion probability one") {
  Rng rng(83);
  for (int trial = 0; trial < 1000; ++trial) {
    const SchmidtWeights src{random_weights(rng, rng.uniform_int(1, 4))};
    const SchmidtWeights tgt{random_weights(rng, rng.uniform_int(1, 4))};
    const bool nielsen = majorization_check(src, tgt);
    const double pmax = vidal_pmax(src, tgt);
    CHECK(nielsen == (pmax >= 1.0 - 1e-10));
    CHECK(pmax >= 0.0);
    CHECK(pmax <= 1.0);
  }
}

TEST_CASE("conversion probability is monotone in the target") {
  Rng rng(89);
  int checked = 0;
  while (checked < 300) {
    const SchmidtWeights src{random_weights(rng, 3)};
    const SchmidtWeights tgt1{random_weights(rng, 3)};
    const SchmidtWeights tgt2{random_weights(rng, 3)};
    if (!majorization_check(tgt2, tgt1)) continue;  // tgt1 majorizes tgt2
    CHECK(vidal_pmax(src, tgt1) <= vidal_pmax(src, tgt2) + 1e-10);
    ++checked;
  }
}

TEST_CASE("tail_sum at position one is always the full mass") {
  Rng rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const SchmidtWeights w{random_weights(rng, rng.uniform_int(1, 5))};
    CHECK(std::abs(tail_sum(w, 1) - 1.0) < 1e-12);
  }
}

TEST_CASE("ensemble averages of the conversion probability") {
  const PureState phi = paper_target();

  Ensemble trivial = make_ensemble({{1.0, density_from_pure(phi)}});
  CHECK(std::abs(ensemble_average_pmax(trivial, phi) - 1.0) < 1e-10);

  Ensemble mixture = make_ensemble({{0.5, density_from_pure(paper_psi1())},
                                    {0.5, density_from_pure(paper_psi2())}});
  CHECK(std::abs(ensemble_average_pmax(mixture, phi) - 1.0) < 1e-10);

  Vec product = Vec::Zero(9);
  product[0] = Complex(1, 0);
  Ensemble product_source = make_ensemble(
      {{1.0, density_from_pure(make_pure(BipartiteDims{3, 3}, product))}});
  CHECK(ensemble_average_pmax(product_source, phi) == 0.0);
}

TEST_CASE("ensemble rejects mixed members and bad probabilities") {
  const PureState phi = paper_target();
  Ensemble mixed = make_ensemble({{1.0, paper_source(0.5)}});
  CHECK_THROWS_AS(ensemble_average_pmax(mixed, phi), ValidationError);

  CHECK_THROWS_AS(
      make_ensemble({{0.5, density_from_pure(phi)}}),  // mass 0.5 != 1
      ValidationError);
  CHECK_THROWS_AS(make_ensemble({}), InvalidArgument);
}
