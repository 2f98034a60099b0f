#include <random>

#include <doctest.h>

#include "hecke/symmetry.hpp"

using namespace hecke;

namespace {

const FieldSpec F = FieldSpec::generic();
const Scalar q = Scalar::q();

VectorF basis_vector(Eigen::Index n, Eigen::Index i) {
  VectorF v = VectorF::Constant(n, Scalar(0));
  v(i) = Scalar(1);
  return v;
}

HeckeElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-2, 2);
  HeckeElement h(n, F);
  for (const auto& s : enumerate(n)) {
    if (const int c = d(rng); c != 0) h.add_term(s, Scalar(c));
  }
  return h;
}

}  // namespace

TEST_CASE("relation checks") {
  CHECK(check_hecke(flip(2).matrix(), Scalar(1)));
  CHECK(check_braid(flip(2).matrix(), 2));
  const auto dj2 = dj_standard(2, F);
  CHECK(check_hecke(dj2.matrix(), q));
  CHECK(check_braid(dj2.matrix(), 2));
  const auto sc = scalar_symmetry(2, F);
  CHECK(check_hecke(sc.matrix(), q));
  CHECK(check_braid(sc.matrix(), 2));
  MatrixF bad = dj2.matrix();
  bad(1, 1) += Scalar(1);
  const auto h = check_hecke(bad, q);
  CHECK_FALSE(h.ok);
  CHECK_FALSE(h.witness.empty());
  CHECK_THROWS_AS(HeckeSymmetry(2, F, bad), ValidationFailure);
}

TEST_CASE("dimension one and the middle block") {
  MatrixF R(1, 1);
  R(0, 0) = q;
  CHECK(check_hecke(R, q));
  CHECK(check_braid(R, 1));
  const MatrixF D = dj_standard(2, F).matrix();
  const Scalar tr = D(1, 1) + D(2, 2);
  const Scalar det = D(1, 1) * D(2, 2) - D(1, 2) * D(2, 1);
  CHECK(tr == q - Scalar(1));
  CHECK(det == -q);
}

TEST_CASE("representation of the Hecke algebra") {
  const auto S = dj_standard(2, F);
  CHECK(equal(rep_matrix(HeckeElement::one(2, F), 2, S), identity<Scalar>(4)));
  const auto T1 = HeckeElement::generator(1, 2, F);
  const MatrixF r1 = rep_matrix(T1, 2, S);
  MatrixF want = r1;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) want(i, j) = (q - Scalar(1)) * r1(i, j) + (i == j ? q : Scalar(0));
  }
  CHECK(equal(rep_matrix(T1 * T1, 2, S), want));
  MatrixF y2 = S.matrix();
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) y2(i, j) = (i == j ? q : Scalar(0)) - S.matrix()(i, j);
  }
  CHECK(equal(rep_matrix(antisymmetrizer(2, F), 2, S), y2));
  std::mt19937 rng(21);
  for (const auto& Sym : {dj_standard(2, F), dj_standard(3, F)}) {
    for (int trial = 0; trial < 2; ++trial) {
      const auto a = random_element(rng, 3), b = random_element(rng, 3);
      CHECK(equal(rep_matrix(a * b, 3, Sym), multiply(rep_matrix(a, 3, Sym), rep_matrix(b, 3, Sym))));
    }
  }
}

TEST_CASE("upsilon dimensions") {
  const auto S2 = dj_standard(2, F);
  const int want2[] = {1, 2, 1, 0};
  for (int k = 0; k <= 3; ++k) CHECK(upsilon(k, S2).dim() == want2[k]);
  const auto S3 = dj_standard(3, F);
  const int want3[] = {1, 3, 3, 1, 0};
  for (int k = 0; k <= 4; ++k) CHECK(upsilon(k, S3).dim() == want3[k]);
  for (int k = 2; k <= 3; ++k) CHECK(upsilon(k, S2) == upsilon_direct(k, S2));
  VectorF t = VectorF::Constant(4, Scalar(0));
  t(2) = q;
  t(1) = Scalar(-1);
  CHECK(upsilon(2, S2) == SubspaceF::from_columns(t));
}

TEST_CASE("ideal component") {
  const auto S2 = dj_standard(2, F);
  const SubspaceF I2 = ideal_component(2, S2);
  MatrixF span = zeros<Scalar>(3, 4);
  span(0, 0) = Scalar(1);
  span(1, 3) = Scalar(1);
  span(2, 1) = Scalar(1);
  span(2, 2) = Scalar(1);
  CHECK(I2 == SubspaceF::from_rows(span));
  CHECK(I2.dim() + upsilon(2, S2).dim() == 4);
  const auto fl = flip(2);
  CHECK(ideal_component(2, fl).dim() == 3);
  CHECK(ideal_component(2, fl).contains(SubspaceF::from_rows(span)));
}

TEST_CASE("star product") {
  const auto S = dj_standard(2, F);
  const VectorF one = VectorF::Constant(1, Scalar(1));
  const VectorF b = basis_vector(2, 1);
  CHECK(equal(star(one, 0, b, 1, S), b));
  CHECK(equal(star(b, 1, one, 0, S), b));
  const VectorF u = basis_vector(2, 0), v = basis_vector(2, 1);
  MatrixF y2 = S.matrix();
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) y2(i, j) = (i == j ? q : Scalar(0)) - S.matrix()(i, j);
  }
  CHECK(equal(star(u, 1, v, 1, S), multiply(y2, kronecker(u, v))));
  VectorF w(2);
  w << Scalar(2), Scalar(-3);
  CHECK(equal(star(star(u, 1, v, 1, S), 2, w, 1, S), star(u, 1, star(v, 1, w, 1, S), 2, S)));
}

TEST_CASE("derived symmetries") {
  const auto S = dj_standard(2, F);
  CHECK(equal(opposite(opposite(S)).matrix(), S.matrix()));
  CHECK(equal(conjugate(S, identity<Scalar>(2)).matrix(), S.matrix()));
  CHECK_NOTHROW(dual_symmetry(S));
  CHECK_NOTHROW(opposite(S));
  MatrixF tau(2, 2);
  tau << Scalar(1), Scalar(1), Scalar(0), Scalar(2);
  CHECK_NOTHROW(conjugate(S, tau));
}

TEST_CASE("subspace containments") {
  const auto S = dj_standard(2, F);
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; k + n <= 4; ++n) {
      CHECK(tensor_product(upsilon(k, S), upsilon(n, S)).contains(upsilon(k + n, S)));
    }
  }
}

TEST_CASE("size cap") {
  const auto cap = max_tensor_dim();
  set_max_tensor_dim(16);
  CHECK_THROWS_AS(tensor_dim(3, 3), SizeLimitExceeded);
  CHECK(tensor_dim(2, 4) == 16);
  set_max_tensor_dim(cap);
}
