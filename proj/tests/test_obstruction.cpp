#include <doctest.h>

#include "hecke/frobenius.hpp"
#include "hecke/obstruction.hpp"

using namespace hecke;

TEST_CASE("Sylvester determinants") {
  const PolyRing<Scalar> R{"a", "b", "c", "X", "Y", "Z"};
  const TernaryVars v = TernaryVars::from_ring(R);
  const SymPoly one = R.constant(Scalar(1)), zero = R.constant(Scalar(0));
  const std::array<TernaryQuadratic, 3> sq{TernaryQuadratic{{one, zero, zero, zero, zero, zero}},
                                           TernaryQuadratic{{zero, one, zero, zero, zero, zero}},
                                           TernaryQuadratic{{zero, zero, one, zero, zero, zero}}};
  CHECK(sylvester_dets(sq, v)[0] == R.parse("Y*Z"));
  const auto F = case1_system({R("a"), R("b"), R("c")});
  CHECK(sylvester_dets(F, v)[0] ==
        R.parse("2*a*b*c*(b^3-c^3)*X^2 + a^2*b*(c^3-a^3)*Z^2 + b^2*c*(a^3-b^3)*X*Y + b*c^2*(2*b^3+c^3-3*a^3)*X*Z"));
  const SymPoly F1 = as_polynomial(F[0], v);
  CHECK(F1.substitute(v.ix, one).substitute(v.iy, one).substitute(v.iz, one) == R.parse("a*b+b*c+c*a"));
  CHECK(from_polynomial(F1, v).c[0] == R.parse("b*c"));
  CHECK_THROWS_AS(from_polynomial(R.parse("X^3"), v), InvalidArgument);
  // Cyclic shift of (a,b,c) together with (X,Y,Z) permutes the system.
  const std::vector<int> shift{1, 2, 0, 4, 5, 3};
  for (int j = 0; j < 3; ++j) {
    const SymPoly Fj = as_polynomial(F[static_cast<std::size_t>(j)], v);
    CHECK(Fj.permute_variables(shift) == Fj);
  }
}

TEST_CASE("case-1 resultant") {
  const ResultantCheck r = case1_resultant();
  CHECK(r.checks.ok());
  CHECK(r.resultant == r.contracted);
  CHECK(r.resultant == r.expanded_display);
  for (const auto& s : type_a_samples()) {
    CHECK_FALSE(r.resultant.evaluate<Scalar>({s.a, s.b, s.c, Scalar(0), Scalar(0), Scalar(0)}).is_zero());
  }
}

TEST_CASE("case-1 functional") {
  const SklScalar p{1, 1, 2};
  const VectorF f = case1_f(p, Scalar(0), Scalar(0), Scalar(Rational(1, 2)));
  const MatrixF G = pairing_matrix(f, skl_relations(p));
  CHECK(equal(G, identity<Scalar>(3)));
  CHECK_THROWS_AS(case1_f(p, Scalar(1), Scalar(1), Scalar(1)), InvalidArgument);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) CHECK(f(word3(i, j, k)) == f(word3(k, i, j)));
    }
  }
}

TEST_CASE("braid residual oracle") {
  const auto S = dj_standard(3, FieldSpec::generic());
  const FrobeniusProfile P = frobenius_profile(S);
  const Reconstruction rec = reconstruct_from_f(*P.f, P.upsilon[2], Scalar::q(), 3);
  CHECK(all_zero(braid_residual_of_projection(rec.P, Scalar::q())));
  const SklScalar p{1, 1, 2};
  const VectorF f = case1_f(p, Scalar(0), Scalar(0), Scalar(Rational(1, 2)));
  const MatrixF r1 = braid_residual(f, p, Scalar(1));
  const MatrixF r2 = braid_residual(VectorF(f * Scalar(7)), p, Scalar(1));
  CHECK(equal(r1, r2));
  CHECK_FALSE(all_zero(r1));
  CHECK_THROWS_AS(braid_residual(VectorF(VectorF::Constant(27, Scalar(0))), p, Scalar(1)), DegeneratePairing);
}

TEST_CASE("restricted maps of a genuine projection") {
  const SklScalar p{1, 1, 2};
  const VectorF f = case1_f(p, Scalar(0), Scalar(0), Scalar(Rational(1, 2)));
  const auto rel = skl_relations(p);
  const MatrixF Pm = projection_from_f(f, rel, identity<Scalar>(3)).matrix();
  const auto [M, N] = restricted_maps(Pm, rel);
  CHECK(M.rows() == 9);
  CHECK(N.cols() == 9);
  const auto [Ms, Ns] = restricted_maps(projection_from_f(f, rel, identity<Scalar>(3)));
  CHECK(equal(M, Ms));
  CHECK(equal(N, Ns));
}

TEST_CASE("case checkers") {
  for (int id = 1; id <= 4; ++id) {
    CAPTURE(id);
    const CaseReport r = verify_case(id);
    CHECK(r.id == id);
    CHECK(r.checks.ok());
    CHECK(r.contradiction);
    CHECK_FALSE(r.equations.empty());
  }
  CHECK_THROWS_AS(verify_case(5), InvalidArgument);
}

TEST_CASE("type-A samples") {
  const auto s = type_a_samples();
  CHECK(s.size() >= 2);
  for (const auto& p : s) CHECK(is_type_A(p));
}
