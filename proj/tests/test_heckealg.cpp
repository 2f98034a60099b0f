#include <random>

#include <doctest.h>

#include "hecke/heckealg.hpp"

using namespace hecke;

namespace {

const FieldSpec F = FieldSpec::generic();
const Scalar q = Scalar::q();

HeckeElement T(const Permutation& s) { return HeckeElement::basis(s, F); }

HeckeElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  HeckeElement h(n, F);
  for (const auto& s : enumerate(n)) {
    const int c = d(rng);
    if (c != 0) h.add_term(s, Scalar(c) + Scalar(d(rng)) * q);
  }
  return h;
}

}  // namespace

TEST_CASE("quadratic relation and identity") {
  const auto T1 = HeckeElement::generator(1, 2, F);
  CHECK(T1 * T1 == (q - Scalar(1)) * T1 + q * HeckeElement::one(2, F));
  std::mt19937 rng(3);
  const auto h = random_element(rng, 3);
  CHECK(HeckeElement::one(3, F) * h == h);
  CHECK(h * HeckeElement::one(3, F) == h);
}

TEST_CASE("length-additive products") {
  for (const auto& p : enumerate(3)) {
    for (const auto& s : enumerate(3)) {
      if ((p * s).length() == p.length() + s.length()) CHECK(T(p) * T(s) == T(p * s));
    }
  }
}

TEST_CASE("antisymmetrizer") {
  CHECK(antisymmetrizer(2, F) == q * HeckeElement::one(2, F) - HeckeElement::generator(1, 2, F));
  CHECK(antisymmetrizer(1, F) == HeckeElement::one(1, F));
  const auto y3 = antisymmetrizer(3, F);
  CHECK(y3.size() == 6);
  CHECK(y3.coeff(Permutation::longest(3)) == Scalar(-1));
  const auto y2 = antisymmetrizer(2, F);
  CHECK(y2 * y2 == (Scalar(1) + q) * y2);
  for (int n = 1; n <= 5; ++n) {
    const auto yn = antisymmetrizer(n, F);
    CHECK(yn * yn == qfact(n, F) * yn);
    for (int i = 1; i < n; ++i) {
      CHECK(HeckeElement::generator(i, n, F) * yn == -yn);
      CHECK(yn * HeckeElement::generator(i, n, F) == -yn);
    }
  }
}

TEST_CASE("partial antisymmetrizers") {
  for (int n = 2; n <= 5; ++n) {
    const auto yn = antisymmetrizer(n, F);
    CHECK(partial_y(n, {n}, PartialKind::left, F) == HeckeElement::one(n, F));
    for (int k = 1; k < n; ++k) {
      const Composition lambda{k, n - k};
      const auto sub = partial_y(n, lambda, PartialKind::subgroup, F);
      CHECK(partial_y(n, lambda, PartialKind::left, F) * sub == yn);
      CHECK(sub * partial_y(n, lambda, PartialKind::right, F) == yn);
      const auto prod = embed_element(antisymmetrizer(k, F), n) * shift_element(antisymmetrizer(n - k, F), k);
      CHECK(sub == prod);
    }
  }
}

TEST_CASE("shift") {
  CHECK(shift_element(HeckeElement::one(2, F), 1) == HeckeElement::one(3, F));
  CHECK(shift_element(antisymmetrizer(2, F), 1) == q * HeckeElement::one(3, F) - HeckeElement::generator(2, 3, F));
  for (const auto& s : enumerate(3)) CHECK(shift_element(T(s), 2) == T(s.shift(2)));
}

TEST_CASE("inductive formula for y_n") {
  for (int n = 2; n <= 5; ++n) {
    HeckeElement rhs(n, F);
    const auto prev = embed_element(antisymmetrizer(n - 1, F), n);
    for (int i = 1; i <= n; ++i) {
      const Scalar sign = (n - i) % 2 == 0 ? Scalar(1) : Scalar(-1);
      rhs += (sign * q.pow(i - 1)) * (T(cycle(i, n, n)) * prev);
    }
    CHECK(rhs == antisymmetrizer(n, F));
  }
}

TEST_CASE("associativity on random triples in H_4") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    const auto a = random_element(rng, 4), b = random_element(rng, 4), c = random_element(rng, 4);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("identity suite") {
  const Report r = verify_identities(4, F);
  CHECK(r.ok());
  CHECK(r.checks.size() > 20);
  const Report rr = verify_identities(3, FieldSpec::cyclotomic(3, Scalar::zeta(3)));
  CHECK(rr.ok());
}
