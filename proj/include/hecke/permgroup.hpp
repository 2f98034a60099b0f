#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

/// Permutation of {1..n} in one-line notation: p[i] = sigma(i+1).
///
/// Composition is functional: (pi * sigma)(i) = pi(sigma(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The basic transposition tau_i = (i, i+1) in S_n.
  static Permutation transposition(int i, int n);
  static Permutation longest(int n);

  int degree() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return p_; }
  bool is_identity() const;

  /// Number of inversions.
  int length() const;
  Permutation inverse() const;
  /// tau_i * sigma, i.e. the values i and i+1 exchanged.
  Permutation left_swap(int i) const;
  /// sigma * tau_i, i.e. the positions i and i+1 exchanged.
  Permutation right_swap(int i) const;
  /// True when l(tau_i sigma) < l(sigma).
  bool has_left_descent(int i) const;
  /// Reduced word (i_1, ..., i_l) with sigma = tau_{i_1} ... tau_{i_l}, built by
  /// repeatedly taking the smallest left descent.
  std::vector<int> reduced_word() const;
  /// The image in S_{k+n} that fixes 1..k and acts on k+1..k+n like sigma.
  Permutation shift(int k) const;
  /// The same permutation regarded in S_m, m >= n, fixing n+1..m.
  Permutation embed(int m) const;

  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.p_ != b.p_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;
};

/// Ordered positive parts summing to the ambient degree.
using Composition = std::vector<int>;

int composition_total(const Composition& lambda);

/// Orders by length, then lexicographically in one-line notation.
bool length_lex_less(const Permutation& a, const Permutation& b);

/// The cycle i -> j: (i, i+1, ..., j) when i < j, (i, i-1, ..., j) when i > j.
Permutation cycle(int i, int j, int n);

/// The longest distinguished representative of S_{k+n}/S_{k,n}:
/// ((1+n)->1)((2+n)->2)...((k+n)->k).
Permutation longest_rho(int k, int n);

/// Membership in the Young subgroup S_lambda (blocks of consecutive positions).
bool in_young_subgroup(const Permutation& s, const Composition& lambda);

/// Elements of the Young subgroup, sorted by (length, one-line).
std::vector<Permutation> young_subgroup(const Composition& lambda);

/// Length of the longest element of S_lambda.
int young_longest_length(const Composition& lambda);

enum class CosetSide { left, right };

/// Distinguished coset representatives: left gives D(S_n/S_lambda) (increasing on
/// each block), right gives their inverses. Sorted by (length, one-line).
std::vector<Permutation> coset_reps(int n, const Composition& lambda, CosetSide side);

/// Default upper bound on n for enumerate.
inline constexpr int kEnumerateBound = 8;

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> enumerate(int n, int bound = kEnumerateBound);

}  // namespace hecke
