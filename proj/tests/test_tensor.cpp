#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/sampling.hpp"
#include "core/tensor.hpp"
#include "oracle.hpp"

using namespace sepchan;

namespace {

Mat ketbra3(int k, int b) {
  Mat m = Mat::Zero(3, 3);
  m(k, b) = Complex(1, 0);
  return m;
}

}  // namespace

TEST_CASE("oracle self-check: Jacobi eigenvalues on closed-form matrices") {
  oracle::CMatrix real_sym{{Complex(2, 0), Complex(1, 0)},
                           {Complex(1, 0), Complex(2, 0)}};
  auto ev = oracle::hermitian_eigenvalues(real_sym);
  CHECK(std::abs(ev[0] - 3.0) < 1e-12);
  CHECK(std::abs(ev[1] - 1.0) < 1e-12);

  oracle::CMatrix hermitian{{Complex(1, 0), Complex(0, 1)},
                            {Complex(0, -1), Complex(1, 0)}};
  ev = oracle::hermitian_eigenvalues(hermitian);
  CHECK(std::abs(ev[0] - 2.0) < 1e-12);
  CHECK(std::abs(ev[1] - 0.0) < 1e-12);

  // Trace is preserved on a random Hermitian matrix.
  Rng rng(7);
  Mat g = random_matrix(rng, 5, 5);
  Mat h = (g + g.adjoint()) / 2.0;
  auto values = oracle::hermitian_eigenvalues(oracle::from_mat(h));
  double sum = 0.0;
  for (double v : values) sum += v;
  CHECK(std::abs(sum - h.trace().real()) < 1e-10);
}

TEST_CASE("make_dims validates the configured cap") {
  CHECK_THROWS_AS(make_dims(0, 2), InvalidArgument);
  CHECK_THROWS_AS(make_dims(5, 4), InvalidArgument);  // 20 > 16
  CHECK(make_dims(4, 4).total() == 16);
  CHECK(make_dims(5, 4, 20).total() == 20);
}

TEST_CASE("tensor product block layout") {
  Mat i2 = Mat::Identity(2, 2);
  Mat i3 = Mat::Identity(3, 3);
  CHECK(frobenius_distance(tensor_product(i2, i3), Mat(Mat::Identity(6, 6))) ==
        0.0);

  Mat a = Mat::Zero(2, 2);
  a(0, 0) = Complex(1, 0);  // |0><0|
  Mat b = Mat::Zero(2, 2);
  b(1, 0) = Complex(1, 0);  // |1><0|
  Mat prod = tensor_product(a, b);
  CHECK(prod.rows() == 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const double expected = (r == 1 && c == 0) ? 1.0 : 0.0;
      CHECK(std::abs(prod(r, c) - Complex(expected, 0)) == 0.0);
    }
  }

  CHECK_THROWS_AS(
      tensor_product(Mat(Mat::Identity(17, 17)), Mat(Mat::Identity(17, 17))),
      InvalidArgument);
}

TEST_CASE("first built-in Kraus operator against its hand-expanded entries") {
  // sqrt(alpha) * (sqrt(beta)|0><0| + |1><1|) (x) (sqrt(beta)|0><1| + |1><0|)
  const double sb = std::sqrt(2.0 + std::sqrt(3.0));
  const double sa = std::sqrt((2.0 - std::sqrt(3.0)) / 4.0);
  Mat e1 = sa * tensor_product(sb * ketbra3(0, 0) + ketbra3(1, 1),
                               sb * ketbra3(0, 1) + ketbra3(1, 0));
  // Nonzero entries worked out by hand from the factor definitions.
  Mat expected = Mat::Zero(9, 9);
  expected(0, 1) = sa * sb * sb;  // ~0.9659258
  expected(1, 0) = sa * sb;
  expected(3, 4) = sa * sb;
  expected(4, 3) = sa;
  CHECK(frobenius_distance(e1, expected) < 1e-15);
  CHECK(std::abs(e1(0, 1).real() - 0.9659258262890683) < 1e-12);
}

TEST_CASE("svd on closed-form inputs") {
  SvdResult s = svd(Mat(Mat::Identity(3, 3)));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(s.singular_values[i] - 1.0) < 1e-14);

  Mat d = Mat::Zero(2, 2);
  d(0, 0) = Complex(3, 0);
  s = svd(d);
  CHECK(std::abs(s.singular_values[0] - 3.0) < 1e-14);
  CHECK(std::abs(s.singular_values[1]) < 1e-14);
}

TEST_CASE("svd of the coefficient matrix of (|01>+|10>)/sqrt(2) on 2x3") {
  const double r = 1.0 / std::sqrt(2.0);
  Mat c = Mat::Zero(2, 3);
  c(0, 1) = Complex(r, 0);
  c(1, 0) = Complex(r, 0);
  const SvdResult s = svd(c);

  // Oracle: eigenvalues of the reduced density matrix (coefficients times
  // their adjoint), computed by the independent Jacobi solver.
  oracle::CMatrix gram{{Complex(0.5, 0), Complex(0, 0)},
                       {Complex(0, 0), Complex(0.5, 0)}};
  const auto ev = oracle::hermitian_eigenvalues(gram);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(s.singular_values[i] - std::sqrt(ev[static_cast<size_t>(i)])) <
          1e-12);
  }
}

TEST_CASE("svd of the zero matrix keeps identity bases") {
  const SvdResult s = svd(Mat(Mat::Zero(3, 2)));
  CHECK(s.singular_values.norm() == 0.0);
  CHECK(frobenius_distance(s.left_vectors, Mat(Mat::Identity(3, 3))) == 0.0);
  CHECK(frobenius_distance(s.right_vectors, Mat(Mat::Identity(2, 2))) == 0.0);
}

TEST_CASE("realign of the identity on 2x2 is rank one") {
  Mat r = realign(Mat(Mat::Identity(4, 4)), BipartiteDims{2, 2});
  // vec(I_2) vec(I_2)^T: ones exactly at rows {0,3} x cols {0,3}.
  Mat expected = Mat::Zero(4, 4);
  for (int i : {0, 3}) {
    for (int j : {0, 3}) expected(i, j) = Complex(1, 0);
  }
  CHECK(frobenius_distance(r, expected) == 0.0);
  CHECK(numerical_rank(svd(r).singular_values, 1e-10) == 1);
}

TEST_CASE("realign of SWAP has four unit singular values") {
  Mat swap = Mat::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) swap(i * 2 + k, k * 2 + i) = Complex(1, 0);
  }
  Mat r = realign(swap, BipartiteDims{2, 2});
  const auto sv = oracle::singular_values(oracle::from_mat(r));
  REQUIRE(sv.size() == 4);
  for (double v : sv) CHECK(std::abs(v - 1.0) < 1e-12);
  CHECK(numerical_rank(svd(r).singular_values, 1e-10) == 4);
}

TEST_CASE("realign rejects mismatched dims") {
  CHECK_THROWS_AS(realign(Mat(Mat::Identity(4, 4)), BipartiteDims{2, 3}),
                  DimensionMismatch);
}

TEST_CASE("frobenius distance closed forms and errors") {
  Rng rng(3);
  Mat m = random_matrix(rng, 4, 4);
  CHECK(frobenius_distance(m, m) == 0.0);
  CHECK(std::abs(frobenius_distance(Mat(Mat::Identity(2, 2)),
                                    Mat(Mat::Zero(2, 2))) -
                 std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS_AS(frobenius_distance(Mat(Mat::Zero(2, 2)),
                                     Mat(Mat::Zero(3, 3))),
                  DimensionMismatch);
}

TEST_CASE("tensor product is bilinear on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Mat a = random_matrix(rng, 3, 3);
    Mat a2 = random_matrix(rng, 3, 3);
    Mat b = random_matrix(rng, 3, 3);
    const Complex scale = randn_complex(rng);
    Mat lhs = tensor_product(Mat(scale * a + a2), b);
    Mat rhs = scale * tensor_product(a, b) + tensor_product(a2, b);
    CHECK(frobenius_distance(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("tensor product matches the plain-loop oracle") {
  Rng rng(13);
  Mat a = random_matrix(rng, 2, 3);
  Mat b = random_matrix(rng, 3, 2);
  const auto expected = oracle::kron(oracle::from_mat(a), oracle::from_mat(b));
  CHECK(oracle::max_abs_diff(expected, tensor_product(a, b)) < 1e-15);
}

TEST_CASE("realigned product operators are numerically rank one") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Mat a = random_matrix(rng, 3, 3);
    Mat b = random_matrix(rng, 3, 3);
    Mat r = realign(tensor_product(a, b), BipartiteDims{3, 3});
    const SvdResult s = svd(r);
    CHECK(s.singular_values[1] <= 1e-10 * s.singular_values[0]);
  }
}

TEST_CASE("svd reconstruction over 1000 random matrices") {
  Rng rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rows = rng.uniform_int(1, 9);
    const int cols = rng.uniform_int(1, 9);
    Mat m = random_matrix(rng, rows, cols);
    const SvdResult s = svd(m);
    const double err = frobenius_distance(m, svd_reconstruct(s, rows, cols));
    CHECK(err <= 1e-10 * std::max(1.0, m.norm()));
    for (int i = 0; i + 1 < s.singular_values.size(); ++i) {
      CHECK(s.singular_values[i] >= s.singular_values[i + 1]);
    }
  }
}

TEST_CASE("singular values are invariant under unitary multiplication") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Mat m = random_matrix(rng, 4, 4);
    Mat u = random_unitary(rng, 4);
    const RealVec s1 = svd(m).singular_values;
    const RealVec s2 = svd(Mat(u * m)).singular_values;
    CHECK((s1 - s2).cwiseAbs().maxCoeff() < 1e-10);
  }
}
