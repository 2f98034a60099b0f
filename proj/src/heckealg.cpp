#include "hecke/heckealg.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Scalar sign(int l) { return l % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

HeckeElement HeckeElement::basis(const Permutation& s, const FieldSpec& F) {
  HeckeElement h(s.degree(), F);
  h.terms_.emplace(s, Scalar(1));
  return h;
}

HeckeElement HeckeElement::one(int n, const FieldSpec& F) {
  return basis(Permutation::identity(n), F);
}

HeckeElement HeckeElement::generator(int i, int n, const FieldSpec& F) {
  return basis(Permutation::transposition(i, n), F);
}

Scalar HeckeElement::coeff(const Permutation& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Scalar() : it->second;
}

void HeckeElement::add_term(const Permutation& s, const Scalar& c) {
  if (s.degree() != n_) throw InvalidArgument("Hecke term of the wrong degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::left_generator(int i) const {
  HeckeElement out(n_, F_);
  const Scalar qm1 = F_.q - Scalar(1);
  for (const auto& [s, c] : terms_) {
    if (!s.has_left_descent(i)) {
      out.add_term(s.left_swap(i), c);
    } else {
      out.add_term(s, c * qm1);
      out.add_term(s.left_swap(i), c * F_.q);
    }
  }
  return out;
}

HeckeElement HeckeElement::right_generator(int i) const {
  HeckeElement out(n_, F_);
  const Scalar qm1 = F_.q - Scalar(1);
  for (const auto& [s, c] : terms_) {
    if (s(i) < s(i + 1)) {
      out.add_term(s.right_swap(i), c);
    } else {
      out.add_term(s, c * qm1);
      out.add_term(s.right_swap(i), c * F_.q);
    }
  }
  return out;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r = *this;
  for (auto& [s, c] : r.terms_) c = -c;
  return r;
}

void HeckeElement::require_compatible(const HeckeElement& o) const {
  if (n_ != o.n_) throw InvalidArgument("Hecke elements of different degree");
  if (!(F_ == o.F_)) throw FieldMismatch("Hecke elements over different fields");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  require_compatible(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

HeckeElement operator*(const Scalar& c, const HeckeElement& h) {
  HeckeElement r(h.n_, h.F_);
  if (c.is_zero()) return r;
  for (const auto& [s, x] : h.terms_) r.terms_.emplace(s, c * x);
  return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return mul(a, b); }

HeckeElement mul(const HeckeElement& a, const HeckeElement& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("Hecke elements of different degree");
  if (!(a.field() == b.field())) throw FieldMismatch("Hecke elements over different fields");
  // T_pi * b, built from T_{tau_i pi} * b with i the smallest left descent of pi.
  std::map<Permutation, HeckeElement> memo;
  memo.emplace(Permutation::identity(a.degree()), b);
  auto left_times_b = [&](auto&& self, const Permutation& pi) -> const HeckeElement& {
    auto it = memo.find(pi);
    if (it != memo.end()) return it->second;
    int i = 1;
    while (!pi.has_left_descent(i)) ++i;
    HeckeElement r = self(self, pi.left_swap(i)).left_generator(i);
    return memo.emplace(pi, std::move(r)).first->second;
  };
  HeckeElement out(a.degree(), a.field());
  for (const auto& [pi, c] : a.terms()) out += c * left_times_b(left_times_b, pi);
  return out;
}

HeckeElement antisymmetrizer(int n, const FieldSpec& F) {
  HeckeElement y(n, F);
  const int ln = n * (n - 1) / 2;
  for (const Permutation& s : enumerate(n)) {
    const int l = s.length();
    y.add_term(s, sign(l) * pow(F.q, ln - l));
  }
  return y;
}

HeckeElement partial_y(int n, const Composition& lambda, PartialKind which, const FieldSpec& F) {
  if (composition_total(lambda) != n) throw InvalidArgument("composition does not sum to n");
  HeckeElement y(n, F);
  const int lsub = young_longest_length(lambda);
  if (which == PartialKind::subgroup) {
    for (const Permutation& s : young_subgroup(lambda)) {
      const int l = s.length();
      y.add_term(s, sign(l) * pow(F.q, lsub - l));
    }
    return y;
  }
  const int top = n * (n - 1) / 2 - lsub;
  const CosetSide side = which == PartialKind::left ? CosetSide::left : CosetSide::right;
  for (const Permutation& d : coset_reps(n, lambda, side)) {
    const int l = d.length();
    y.add_term(d, sign(l) * pow(F.q, top - l));
  }
  return y;
}

HeckeElement shift_element(const HeckeElement& h, int k) {
  HeckeElement r(h.degree() + k, h.field());
  for (const auto& [s, c] : h.terms()) r.add_term(s.shift(k), c);
  return r;
}

HeckeElement embed_element(const HeckeElement& h, int m) {
  HeckeElement r(m, h.field());
  for (const auto& [s, c] : h.terms()) r.add_term(s.embed(m), c);
  return r;
}

std::string difference_witness(const HeckeElement& a, const HeckeElement& b) {
  if (a.degree() != b.degree()) return "degrees differ";
  HeckeElement d = a - b;
  if (d.is_zero()) return {};
  const auto& [s, c] = *d.terms().begin();
  return "coefficient of T" + s.to_string() + ": " + a.coeff(s).to_string() + " vs " +
         b.coeff(s).to_string();
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Permutation, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return length_lex_less(x.first, y.first); });
  std::string out;
  for (const auto& [s, c] : ordered) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*T" + s.to_string();
  }
  return out;
}

Report verify_identities(int n_max, const FieldSpec& F) {
  if (n_max > 6) throw SizeLimitExceeded("identity suite limited to n <= 6");
  Report rep;
  auto y = [&](int n) { return antisymmetrizer(n, F); };
  auto ylr = [&](int k, int l) { return partial_y(k + l, {k, l}, PartialKind::left, F); };
  auto eq = [](const HeckeElement& a, const HeckeElement& b) { return difference_witness(a, b); };

  for (int n = 1; n <= n_max; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const HeckeElement yn = y(n);
    rep.run("antisymmetrizer squares to q-factorial multiple, " + tag, "y_n^2 = [n]!_q y_n",
            [&] { return eq(yn * yn, qfact(n, F) * yn); });
    rep.run("generators act on antisymmetrizer by -1, " + tag, "T_i y_n = y_n T_i = -y_n", [&] {
      for (int i = 1; i < n; ++i) {
        if (auto w = eq(yn.left_generator(i), -yn); !w.empty()) return "left T_" + std::to_string(i) + ": " + w;
        if (auto w = eq(yn.right_generator(i), -yn); !w.empty()) return "right T_" + std::to_string(i) + ": " + w;
      }
      return std::string();
    });
    rep.run("basis elements act on antisymmetrizer by sign, " + tag,
            "T_s y_n = y_n T_s = (-1)^l(s) y_n", [&] {
              for (const Permutation& s : enumerate(n)) {
                const HeckeElement ts = HeckeElement::basis(s, F);
                const HeckeElement expect = sign(s.length()) * yn;
                if (auto w = eq(ts * yn, expect); !w.empty()) return s.to_string() + " left: " + w;
                if (auto w = eq(yn * ts, expect); !w.empty()) return s.to_string() + " right: " + w;
              }
              return std::string();
            });
    for (int k = 0; k <= n; ++k) {
      const Composition lam{k, n - k};
      const std::string ktag = tag + ", k=" + std::to_string(k);
      const HeckeElement sub = partial_y(n, lam, PartialKind::subgroup, F);
      rep.run("left coset factorization, " + ktag, "y_n = y(S_n/S') y(S')",
              [&] { return eq(partial_y(n, lam, PartialKind::left, F) * sub, yn); });
      rep.run("right coset factorization, " + ktag, "y_n = y(S') y(S'\\S_n)",
              [&] { return eq(sub * partial_y(n, lam, PartialKind::right, F), yn); });
      rep.run("Young antisymmetrizer splits, " + ktag, "y_{k,l} = y_k shift(y_l, k)", [&] {
        return eq(sub, embed_element(y(k), n) * shift_element(y(n - k), k));
      });
    }
    if (n >= 2) {
      rep.run("inductive antisymmetrizer formulas, " + tag,
              "y_n = sum (-1)^(n-i) q^(i-1) T_{i->n} y_{n-1}", [&] {
                HeckeElement left(n, F), right(n, F);
                for (int i = 1; i <= n; ++i) {
                  const Scalar c = sign(n - i) * pow(F.q, i - 1);
                  left += c * HeckeElement::basis(cycle(i, n, n), F);
                  right += c * HeckeElement::basis(cycle(n, i, n), F);
                }
                const HeckeElement ym = embed_element(y(n - 1), n);
                if (auto w = eq(left * ym, yn); !w.empty()) return "left: " + w;
                if (auto w = eq(ym * right, yn); !w.empty()) return "right: " + w;
                return std::string();
              });
    }
  }

  // Splitting off the position of n+1 in the coset representatives.
  for (int n = 1; n + 1 <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      rep.run("coset antisymmetrizer recursion, n=" + std::to_string(n) + ", k=" + std::to_string(k),
              "y_{n+1/k,n+1-k} = q^k y_{n/k,n-k} + (-1)^(n+1-k) y_{n/k-1,n+1-k} T_c", [&] {
                const HeckeElement lhs = ylr(k, n + 1 - k);
                const HeckeElement tc = HeckeElement::basis(cycle(n + 1, k, n + 1), F);
                const HeckeElement rhs =
                    pow(F.q, k) * embed_element(ylr(k, n - k), n + 1) +
                    sign(n + 1 - k) * (embed_element(ylr(k - 1, n + 1 - k), n + 1) * tc);
                return eq(lhs, rhs);
              });
    }
  }

  for (int k = 0; k <= n_max; ++k) {
    for (int l = 0; k + l <= n_max; ++l) {
      for (int m = 0; k + l + m <= n_max; ++m) {
        const int n = k + l + m;
        if (n == 0) continue;
        rep.run("three-block coset products agree, k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                    ", m=" + std::to_string(m),
                "y_{k+l+m/k+l,m} y_{k+l/k,l} = y_{k+l+m/k,l+m} shift(y_{l+m/l,m}, k)", [&] {
                  const HeckeElement lhs = ylr(k + l, m) * embed_element(ylr(k, l), n);
                  const HeckeElement rhs = ylr(k, l + m) * shift_element(ylr(l, m), k);
                  return eq(lhs, rhs);
                });
      }
    }
  }
  return rep;
}

}  // namespace hecke
