#include "hecke/permgroup.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
  std::vector<bool> seen(p_.size() + 1, false);
  for (int v : p_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidArgument("negative permutation degree");
  Permutation s;
  s.p_.resize(static_cast<std::size_t>(n));
  std::iota(s.p_.begin(), s.p_.end(), 1);
  return s;
}

Permutation Permutation::transposition(int i, int n) {
  if (i < 1 || i >= n) throw InvalidArgument("basic transposition index out of range");
  Permutation s = identity(n);
  std::swap(s.p_[static_cast<std::size_t>(i - 1)], s.p_[static_cast<std::size_t>(i)]);
  return s;
}

Permutation Permutation::longest(int n) {
  Permutation s = identity(n);
  std::reverse(s.p_.begin(), s.p_.end());
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    for (std::size_t j = i + 1; j < p_.size(); ++j) inv += p_[i] > p_[j] ? 1 : 0;
  }
  return inv;
}

Permutation Permutation::inverse() const {
  Permutation s;
  s.p_.resize(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) s.p_[static_cast<std::size_t>(p_[i] - 1)] = static_cast<int>(i) + 1;
  return s;
}

Permutation Permutation::left_swap(int i) const {
  Permutation s = *this;
  for (int& v : s.p_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return s;
}

Permutation Permutation::right_swap(int i) const {
  Permutation s = *this;
  std::swap(s.p_[static_cast<std::size_t>(i - 1)], s.p_[static_cast<std::size_t>(i)]);
  return s;
}

bool Permutation::has_left_descent(int i) const {
  // i+1 appears before i in one-line notation.
  for (int v : p_) {
    if (v == i) return false;
    if (v == i + 1) return true;
  }
  return false;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation s = *this;
  for (;;) {
    int i = 1;
    while (i < degree() && !s.has_left_descent(i)) ++i;
    if (i >= degree()) break;
    word.push_back(i);
    s = s.left_swap(i);
  }
  return word;
}

Permutation Permutation::shift(int k) const {
  if (k < 0) throw InvalidArgument("negative shift");
  Permutation s = identity(k + degree());
  for (std::size_t i = 0; i < p_.size(); ++i) s.p_[static_cast<std::size_t>(k) + i] = p_[i] + k;
  return s;
}

Permutation Permutation::embed(int m) const {
  if (m < degree()) throw InvalidArgument("cannot embed into a smaller symmetric group");
  Permutation s = identity(m);
  std::copy(p_.begin(), p_.end(), s.p_.begin());
  return s;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p_[i]);
  }
  return out + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
  Permutation s;
  s.p_.resize(b.p_.size());
  for (std::size_t i = 0; i < b.p_.size(); ++i) s.p_[i] = a.p_[static_cast<std::size_t>(b.p_[i] - 1)];
  return s;
}

int composition_total(const Composition& lambda) {
  int n = 0;
  for (int part : lambda) {
    if (part < 0) throw InvalidArgument("composition parts must be nonnegative");
    n += part;
  }
  return n;
}

bool length_lex_less(const Permutation& a, const Permutation& b) {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a < b;
}

Permutation cycle(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) throw InvalidArgument("cycle endpoints out of range");
  Permutation s = Permutation::identity(n);
  if (i < j) {
    for (int t = j - 1; t >= i; --t) s = s.left_swap(t);
  } else {
    for (int t = j; t <= i - 1; ++t) s = s.left_swap(t);
  }
  return s;
}

Permutation longest_rho(int k, int n) {
  Permutation rho = Permutation::identity(k + n);
  for (int i = 1; i <= k; ++i) rho = rho * cycle(i + n, i, k + n);
  return rho;
}

namespace {

// Block boundaries of lambda: positions p with p and p+1 in the same block.
std::vector<bool> same_block(const Composition& lambda) {
  const int n = composition_total(lambda);
  std::vector<bool> inner(static_cast<std::size_t>(n + 1), false);
  int start = 1;
  for (int part : lambda) {
    for (int p = start; p < start + part - 1; ++p) inner[static_cast<std::size_t>(p)] = true;
    start += part;
  }
  return inner;
}

}  // namespace

bool in_young_subgroup(const Permutation& s, const Composition& lambda) {
  if (composition_total(lambda) != s.degree()) throw InvalidArgument("composition does not match degree");
  int start = 1;
  for (int part : lambda) {
    for (int p = start; p < start + part; ++p) {
      if (s(p) < start || s(p) >= start + part) return false;
    }
    start += part;
  }
  return true;
}

std::vector<Permutation> young_subgroup(const Composition& lambda) {
  std::vector<Permutation> out;
  for (const Permutation& s : enumerate(composition_total(lambda))) {
    if (in_young_subgroup(s, lambda)) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), length_lex_less);
  return out;
}

int young_longest_length(const Composition& lambda) {
  int l = 0;
  for (int part : lambda) l += part * (part - 1) / 2;
  return l;
}

std::vector<Permutation> coset_reps(int n, const Composition& lambda, CosetSide side) {
  if (composition_total(lambda) != n) throw InvalidArgument("composition does not sum to n");
  const std::vector<bool> inner = same_block(lambda);
  std::vector<Permutation> out;
  for (const Permutation& s : enumerate(n)) {
    bool ok = true;
    for (int p = 1; p < n && ok; ++p) {
      if (inner[static_cast<std::size_t>(p)] && s(p) > s(p + 1)) ok = false;
    }
    if (ok) out.push_back(side == CosetSide::left ? s : s.inverse());
  }
  std::stable_sort(out.begin(), out.end(), length_lex_less);
  return out;
}

std::vector<Permutation> enumerate(int n, int bound) {
  if (n < 0) throw InvalidArgument("negative permutation degree");
  if (n > bound) throw SizeLimitExceeded("enumerate: n exceeds bound " + std::to_string(bound));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace hecke
