#include <algorithm>
#include <set>

#include <doctest.h>

#include "hecke/permgroup.hpp"

using namespace hecke;

TEST_CASE("lengths") {
  CHECK(Permutation::identity(4).length() == 0);
  for (int n = 1; n <= 6; ++n) CHECK(Permutation::longest(n).length() == n * (n - 1) / 2);
  CHECK(cycle(3, 1, 3).length() == 2);
  CHECK(cycle(3, 1, 3) == Permutation({3, 1, 2}).inverse().inverse());
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) CHECK(cycle(i, j, n).length() == std::abs(j - i));
    }
  }
}

TEST_CASE("cycles") {
  CHECK(cycle(2, 2, 4).is_identity());
  CHECK(cycle(1, 3, 3) == Permutation::transposition(1, 3) * Permutation::transposition(2, 3));
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int k = i; k <= n; ++k) {
        for (int j = k; j <= n; ++j) CHECK(cycle(i, k, n) * cycle(k, j, n) == cycle(i, j, n));
      }
    }
  }
}

TEST_CASE("distinguished coset representatives") {
  for (int n = 2; n <= 5; ++n) {
    const auto reps = coset_reps(n, {n - 1, 1}, CosetSide::left);
    std::set<Permutation> want;
    for (int i = 1; i <= n; ++i) want.insert(cycle(i, n, n));
    CHECK(std::set<Permutation>(reps.begin(), reps.end()) == want);
    CHECK(coset_reps(n, {n}, CosetSide::left) == std::vector<Permutation>{Permutation::identity(n)});
  }
  const auto r22 = coset_reps(4, {2, 2}, CosetSide::left);
  CHECK(r22.size() == 6);
  int mx = 0;
  for (const auto& d : r22) mx = std::max(mx, d.length());
  CHECK(mx == 4);
}

TEST_CASE("longest rho") {
  for (int n = 1; n <= 4; ++n) CHECK(longest_rho(1, n) == cycle(n + 1, 1, n + 1));
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 4; ++n) CHECK(longest_rho(k, n).length() == k * n);
  }
  const Permutation r = longest_rho(2, 1);
  CHECK(r(1) == 2);
  CHECK(r(2) == 3);
  CHECK(r(3) == 1);
}

TEST_CASE("shift") {
  CHECK(Permutation::identity(3).shift(2).is_identity());
  CHECK(Permutation::identity(3).shift(2).degree() == 5);
  for (int k = 0; k <= 3; ++k) {
    for (int i = 1; i < 3; ++i) CHECK(Permutation::transposition(i, 3).shift(k) == Permutation::transposition(k + i, 3 + k));
    for (const auto& s : enumerate(3)) CHECK(s.shift(k).length() == s.length());
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(3).size() == 6);
  CHECK(enumerate(1) == std::vector<Permutation>{Permutation::identity(1)});
  CHECK(enumerate(5).size() == 120);
}

TEST_CASE("length subadditivity in S_4") {
  const auto all = enumerate(4);
  for (const auto& p : all) {
    for (const auto& s : all) CHECK((p * s).length() <= p.length() + s.length());
  }
}

TEST_CASE("coset factorization") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const Composition lambda{k, n - k};
      const auto reps = coset_reps(n, lambda, CosetSide::left);
      const auto sub = young_subgroup(lambda);
      std::set<Permutation> seen;
      for (const auto& d : reps) {
        for (const auto& s : sub) {
          CHECK((d * s).length() == d.length() + s.length());
          seen.insert(d * s);
        }
      }
      CHECK(seen.size() == reps.size() * sub.size());
      CHECK(seen.size() == enumerate(n).size());
    }
  }
}

TEST_CASE("reduced words") {
  for (const auto& s : enumerate(4)) {
    const auto w = s.reduced_word();
    CHECK(static_cast<int>(w.size()) == s.length());
    Permutation p = Permutation::identity(4);
    for (int i : w) p = p * Permutation::transposition(i, 4);
    CHECK(p == s);
  }
}
