#include <map>

#include <doctest.h>

#include "hecke/regular3.hpp"

using namespace hecke;

namespace {

const Scalar e = Scalar::zeta(3);

VectorF relation(int i, const SklScalar& p) { return skl_relations(p)[static_cast<std::size_t>(i)]; }

}  // namespace

TEST_CASE("relations and the tensor t") {
  const auto r0 = skl_relations(SklScalar{0, 0, 1});
  for (int i = 0; i < 3; ++i) {
    VectorF want = VectorF::Constant(9, Scalar(0));
    want(word2(i, i)) = Scalar(1);
    CHECK(equal(r0[static_cast<std::size_t>(i)], want));
  }
  for (int i = 0; i < 3; ++i) {
    VectorF want = VectorF::Constant(9, Scalar(0));
    want(word2(i + 1, i - 1)) = Scalar(1);
    want(word2(i - 1, i + 1)) = Scalar(1);
    CHECK(equal(relation(i, SklScalar{1, 1, 0}), want));
  }
  const SklScalar p{Scalar(2), Scalar(-3), Scalar(5)};
  const auto [left, right] = skl_tensor_from_relations(p);
  CHECK(equal(left, skl_tensor(p)));
  CHECK(equal(right, skl_tensor(p)));
  const VectorF t = skl_tensor(p);
  CHECK(t(word3(0, 1, 2)) == Scalar(2));
  CHECK(t(word3(2, 1, 0)) == Scalar(-3));
  CHECK(t(word3(1, 1, 1)) == Scalar(5));
}

TEST_CASE("symmetric image and split") {
  CHECK(skl_symmetric_image(SklScalar{1, 1, 1}).to_string() == symmetric_image(skl_tensor(SklScalar{1, 1, 1})).to_string());
  const auto img = skl_symmetric_image(SklScalar{1, 1, 1});
  CHECK(img.coefficient({1, 1, 1}) == Scalar(6));
  CHECK(img.coefficient({3, 0, 0}) == Scalar(1));
  const SklScalar p{Scalar(3), Scalar(1), Scalar(2)};
  const auto [plus, minus] = skl_split(p);
  CHECK(equal(VectorF(plus + minus), skl_tensor(p)));
  CHECK(equal(minus, VectorF(alternating_tensor() * Scalar(1))));
}

TEST_CASE("regularity predicates") {
  CHECK_FALSE(is_regular(SklScalar{1, 1, 1}));
  CHECK(is_regular(SklScalar{1, 1, 0}));
  CHECK_FALSE(is_type_A(SklScalar{1, 1, 0}));
  CHECK(is_type_A(SklScalar{1, 1, 2}));
}

TEST_CASE("discriminant factorization") {
  const auto [lhs, rhs] = pencil_discriminant_forms();
  CHECK(lhs == rhs);
}

TEST_CASE("Hessian group") {
  const HessianGroup H = hessian_group();
  CHECK(H.G.size() == 216);
  CHECK(H.T.size() == 9);
  CHECK(H.Z.size() == 18);
  const HessianReport r = conjugacy_report(H);
  CHECK(r.checks.ok());
  const std::map<int, int> census{{1, 1}, {2, 9}, {3, 80}, {4, 54}, {6, 72}};
  CHECK(r.census == census);
  CHECK(r.classes.size() == 10);
  std::size_t total = 0;
  for (const auto& c : r.classes) total += c.members.size();
  CHECK(total == 216);
  int order2 = 0, order4 = 0;
  for (const auto& c : r.classes) {
    order2 += c.order == 2;
    order4 += c.order == 4;
  }
  CHECK(order2 == 1);
  CHECK(order4 == 1);
  for (const auto& g : H.G) CHECK(permutes_inflection_points(g.matrix()));
}

TEST_CASE("action on parameters") {
  CHECK(equal(action_on_parameters(identity<Scalar>(3)), identity<Scalar>(3)));
  CHECK(equal(action_on_parameters(diagonal3(e, e * e, Scalar(1))), identity<Scalar>(3)));
  MatrixF swapped = zeros<Scalar>(3, 3);
  swapped(0, 1) = swapped(1, 0) = swapped(2, 2) = Scalar(1);
  CHECK(equal(action_on_parameters(swap12()), swapped));
}

TEST_CASE("preservation of relations") {
  for (const auto& s : {SklScalar{1, 2, 1}, SklScalar{1, 1, 2}, SklScalar{2, 3, 5}}) {
    CHECK(preserves_relations(cyclic_shift(), s).preserves);
    CHECK(preserves_relations(diagonal3(e, e * e, Scalar(1)), s).preserves);
  }
  // det = 1 and t^S is fixed by both maps.
  const SklScalar p{1, 2, 1};
  CHECK(preserves_relations(cyclic_shift(), p).det_twisted.value_or(false));
  CHECK(preserves_relations(diagonal3(e, e * e, Scalar(1)), p).det_twisted.value_or(false));
  // The swap exchanges a and b.
  CHECK_FALSE(preserves_relations(swap12(), p).preserves);
}

TEST_CASE("j-invariant") {
  CHECK(j_invariant(Scalar(0)).is_zero());
  CHECK(j_invariant(Scalar(1)).is_zero());
  CHECK(j_invariant(e).is_zero());
  CHECK_FALSE(j_invariant(Scalar(2)).is_zero());
  CHECK_THROWS_AS(j_invariant(Scalar(Rational(-1, 2))), PoleError);
}

TEST_CASE("inflection points") {
  const auto pts = inflection_points();
  CHECK(pts.size() == 9);
  VectorF target(3);
  target << Scalar(0), Scalar(1), Scalar(-1);
  bool found = false;
  for (const auto& v : pts) {
    found = found || equal(v, target);
    CHECK((v(0) * v(1) * v(2)).is_zero());
  }
  CHECK(found);
}
