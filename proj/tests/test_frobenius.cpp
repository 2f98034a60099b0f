#include <doctest.h>

#include "hecke/frobenius.hpp"

using namespace hecke;

namespace {

const FieldSpec F = FieldSpec::generic();
const Scalar q = Scalar::q();

MatrixF diag(std::initializer_list<Scalar> d) {
  MatrixF m = zeros<Scalar>(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (const auto& x : d) m(i, i) = x, ++i;
  return m;
}

MatrixF scaled_identity(Eigen::Index n, const Scalar& s) {
  MatrixF m = zeros<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

}  // namespace

TEST_CASE("top component") {
  const auto S2 = dj_standard(2, F);
  const TopComponent t2 = top_component(S2, 5);
  CHECK(t2.n == 2);
  VectorF want = VectorF::Constant(4, Scalar(0));
  want(1) = Scalar(1);
  want(2) = -q;
  CHECK(equal(t2.t, want));
  CHECK(top_component(dj_standard(3, F), 7).n == 3);
  MatrixF R(1, 1);
  R(0, 0) = q;
  const TopComponent t1 = top_component(HeckeSymmetry(1, F, R), 3);
  CHECK(t1.n == 1);
  CHECK(t1.t(0) == Scalar(1));
  CHECK_THROWS_AS(top_component(dj_standard(3, F), 2), NoTopComponent);
}

TEST_CASE("operators of the standard symmetry in dimension two") {
  const auto S = dj_standard(2, F);
  const FrobeniusProfile P = frobenius_profile(S);
  CHECK(equal(P.theta, diag({q * q, q})));
  CHECK(equal(multiply(P.theta_bar, P.theta), scaled_identity(2, q.pow(3))));
  CHECK(equal(multiply(tensor_power(P.theta, 2), P.t), VectorF(P.t * q.pow(3))));
  CHECK(equal(P.psi, diag({-q, -q.inverse()})));
  CHECK(equal(P.phi, scaled_identity(2, Scalar(-1))));
  const MatrixF pp = kronecker(P.psi, P.psi);
  CHECK(equal(multiply(pp, S.matrix()), multiply(S.matrix(), pp)));
  REQUIRE(P.beta.size() == 3);
  CHECK(P.beta[0].rows() == 1);
  CHECK(P.beta[0](0, 0) == Scalar(1));
  CHECK(P.beta[1].rows() == 2);
  CHECK_NOTHROW(inverse(P.beta[1]));
  for (int k = 0; k <= P.n; ++k) CHECK(P.upsilon[k].dim() == P.upsilon[P.n - k].dim());
}

TEST_CASE("classical flip") {
  const FrobeniusProfile P2 = frobenius_profile(flip(2));
  CHECK(equal(P2.psi, scaled_identity(2, Scalar(-1))));
  CHECK(equal(P2.phi, scaled_identity(2, Scalar(-1))));
  const FrobeniusProfile P3 = frobenius_profile(flip(3));
  CHECK(equal(P3.theta, identity<Scalar>(3)));
  CHECK(equal(P3.psi, P3.phi));
}

TEST_CASE("functional f") {
  for (int N = 2; N <= 3; ++N) {
    const auto S = dj_standard(N, F);
    const FrobeniusProfile P = frobenius_profile(S);
    REQUIRE(P.f.has_value());
    Scalar ft;
    for (Eigen::Index i = 0; i < P.t.size(); ++i) ft += (*P.f)(i) * P.t(i);
    CHECK(ft == qint(P.n, F));
    const MatrixF yn = rep_matrix(antisymmetrizer(P.n, F), P.n, S);
    MatrixF frow(1, P.f->size());
    frow.row(0) = P.f->transpose();
    CHECK(kernel(frow) == kernel(yn));
  }
}

TEST_CASE("trace table") {
  const auto S = dj_standard(2, F);
  const FrobeniusProfile P = frobenius_profile(S);
  const auto rows = trace_table(P, S);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].xi == -q * (Scalar(1) + q));
  for (const auto& r : rows) {
    CHECK(r.xi == r.expected);
    CHECK(r.eta == r.expected);
  }
  CHECK(rows[1].xi == q.pow(3));
}

TEST_CASE("full identity reports") {
  for (int N = 2; N <= 3; ++N) {
    const auto S = dj_standard(N, F);
    const FrobeniusProfile P = frobenius_profile(S);
    CHECK(verify_frobenius(P, S).ok());
    CHECK(trace_report(P, S).ok());
    CHECK(verify_opposite(P, S).ok());
    CHECK(verify_upsilon(P, S).ok());
  }
}

TEST_CASE("root of unity") {
  const Scalar e = Scalar::zeta(3);
  const auto S = dj_standard(2, FieldSpec::cyclotomic(3, e));
  const FrobeniusProfile P = frobenius_profile(S);
  CHECK(P.n == 2);
  CHECK(P.f.has_value());
  CHECK(verify_frobenius(P, S).ok());
  CHECK(trace_report(P, S).ok());
  const auto probe = dimension_probe(S, 3);
  CHECK(probe.size() >= 3);
}

TEST_CASE("reconstruction from f") {
  const auto S = dj_standard(3, F);
  const FrobeniusProfile P = frobenius_profile(S);
  const Reconstruction rec = reconstruct_from_f(*P.f, P.upsilon[2], q, 3);
  CHECK(equal(rec.R, S.matrix()));
  CHECK(equal(multiply(rec.P, rec.P), rec.P));
  CHECK(image(rec.P) == upsilon(2, S));
  CHECK(kernel(rec.P) == ideal_component(2, S));
}
