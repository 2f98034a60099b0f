#include <random>

#include <doctest.h>

#include "hecke/linalg.hpp"
#include "hecke/multipoly.hpp"

using namespace hecke;

namespace {

MatrixF random_matrix(std::mt19937& rng, Eigen::Index r, Eigen::Index c, int density) {
  std::uniform_int_distribution<int> d(-3, 3), keep(0, 9);
  MatrixF m = zeros<Scalar>(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      if (keep(rng) < density) m(i, j) = Scalar(d(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("kernel, image and rank") {
  CHECK(kernel(identity<Scalar>(4)).dim() == 0);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const MatrixF A = random_matrix(rng, 5, 7, 4);
    const SubspaceF K = kernel(A);
    CHECK(rank(A) + K.dim() == A.cols());
    CHECK(image(A).dim() == rank(A));
    for (Eigen::Index i = 0; i < K.dim(); ++i) CHECK(all_zero(multiply(A, K.vector(i))));
  }
}

TEST_CASE("rref is idempotent and canonical") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixF A = random_matrix(rng, 4, 6, 6);
    const auto e1 = rref(A);
    const auto e2 = rref(e1.matrix);
    CHECK(equal(e1.matrix, e2.matrix));
    CHECK(e1.pivots == e2.pivots);
    MatrixF B = A;
    B.row(0) += B.row(1);
    CHECK(SubspaceF::from_rows(A) == SubspaceF::from_rows(B));
  }
}

TEST_CASE("sum and intersection dimensions") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dd(0, 12);
    const Eigen::Index n = 20;
    const SubspaceF U = SubspaceF::from_rows(random_matrix(rng, dd(rng), n, 5));
    const SubspaceF V = SubspaceF::from_rows(random_matrix(rng, dd(rng), n, 5));
    CHECK(sum(U, V).dim() + intersect(U, V).dim() == U.dim() + V.dim());
    CHECK(intersect(U, SubspaceF::full(n)) == U);
    CHECK(U.contains(intersect(U, V)));
    CHECK(sum(U, V).contains(V));
  }
}

TEST_CASE("solve and inverse") {
  MatrixF A(2, 2);
  A << Scalar(1), Scalar(2), Scalar(3), Scalar(4);
  VectorF b(2);
  b << Scalar(5), Scalar(6);
  const auto x = solve(A, b);
  REQUIRE(x.has_value());
  CHECK(equal(multiply(A, *x), b));
  CHECK(equal(multiply(A, inverse(A)), identity<Scalar>(2)));
  MatrixF S(2, 2);
  S << Scalar(1), Scalar(2), Scalar(2), Scalar(4);
  CHECK_THROWS_AS(inverse(S), DivisionByZero);
  VectorF c(2);
  c << Scalar(1), Scalar(0);
  CHECK_FALSE(solve(S, c).has_value());
}

TEST_CASE("kronecker product") {
  MatrixF A(2, 2), B(2, 2);
  A << Scalar(1), Scalar(2), Scalar(0), Scalar(1);
  B << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  const MatrixF K = kronecker(A, B);
  CHECK(K(0, 3) == Scalar(2));
  CHECK(K(1, 2) == Scalar(2));
  CHECK(K(2, 3) == Scalar(1));
  CHECK(equal(multiply(kronecker(A, B), kronecker(B, A)), kronecker(multiply(A, B), multiply(B, A))));
}

TEST_CASE("determinants") {
  const PolyRing<Scalar> R{"a", "b", "c"};
  Mat<MultiPoly<Scalar>> C(3, 3);
  const auto s = R.parse("a+b"), c = R("c"), z = R.constant(Scalar(0));
  C << s, c, z, z, s, c, c, z, s;
  CHECK(determinant(C) == R.parse("(a+b)^3+c^3"));
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixF A = random_matrix(rng, 5, 5, 7);
    const MatrixF B = random_matrix(rng, 5, 5, 7);
    CHECK(determinant(multiply(A, B)) == determinant(A) * determinant(B));
    CHECK((determinant(A).is_zero()) == (rank(A) < 5));
  }
}
