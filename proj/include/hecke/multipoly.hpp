#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/expression.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

inline std::string coefficient_to_string(const Rational& c) { return c.get_str(); }
inline std::string coefficient_to_string(const Scalar& c) { return c.to_string(); }

/// Multivariate polynomial over the coefficient field C (Rational or Scalar).
///
/// Variables come from an ordered list shared by every polynomial of one ring;
/// exponent vectors are dense over that order. A polynomial built from a bare
/// constant has no variable list and adopts the list of whatever it meets.
template <class C>
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using Vars = std::shared_ptr<const std::vector<std::string>>;
  using Terms = std::map<Exponents, C>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(C(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const C& c) {                 // NOLINT(google-explicit-constructor)
    if (!hecke::is_zero(c)) terms_.emplace(Exponents{}, c);
  }
  template <class R = Rational>
    requires(!std::is_same_v<C, R>)
  MultiPoly(const Rational& c) : MultiPoly(C(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly constant(Vars vars, const C& c) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    if (!hecke::is_zero(c)) p.terms_.emplace(Exponents(p.nvars(), 0), c);
    return p;
  }
  static MultiPoly variable(Vars vars, int index, int power = 1) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    Exponents e(p.nvars(), 0);
    e.at(static_cast<std::size_t>(index)) = power;
    p.terms_.emplace(std::move(e), C(1));
    return p;
  }
  static MultiPoly from_terms(Vars vars, Terms terms) {
    MultiPoly p;
    p.vars_ = std::move(vars);
    for (auto& [e, c] : terms) {
      if (!hecke::is_zero(c)) p.terms_.emplace(e, c);
    }
    return p;
  }

  const Vars& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                              terms_.begin()->first.end(),
                                              [](int x) { return x == 0; }));
  }
  C constant_term() const {
    for (const auto& [e, c] : terms_) {
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return c;
    }
    return C(0);
  }

  int index_of(std::string_view name) const {
    if (vars_) {
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if ((*vars_)[i] == name) return static_cast<int>(i);
      }
    }
    throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  }

  int degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// Coefficient of a full monomial.
  C coefficient(const Exponents& e) const {
    auto it = terms_.find(padded(e));
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(int var, int k) const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<std::size_t>(var)] != k) continue;
      Exponents f = e;
      f[static_cast<std::size_t>(var)] = 0;
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, false); }
  MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, true); }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    out.vars_ = a.vars_ ? a.vars_ : b.vars_;
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return out;
    const std::size_t n = out.nvars();
    for (const auto& [ea, ca] : a.terms_) {
      const Exponents pa = out.padded(ea);
      for (const auto& [eb, cb] : b.terms_) {
        const Exponents pb = out.padded(eb);
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = pa[i] + pb[i];
        auto [it, inserted] = out.terms_.try_emplace(std::move(e), ca * cb);
        if (!inserted) {
          it->second += ca * cb;
        }
      }
    }
    out.prune();
    return out;
  }

  /// Division by a nonzero constant; anything else is not a polynomial.
  friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (!b.is_constant()) throw InvalidArgument("division by a nonconstant polynomial");
    return a.scaled(C(1) / b.constant_term());
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.vars_ && b.vars_) {
      check_compatible(a, b);
      return a.terms_ == b.terms_;
    }
    return (a - b).is_zero();
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly scaled(const C& s) const {
    MultiPoly r;
    r.vars_ = vars_;
    if (hecke::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }

  /// Exact division of every coefficient by s.
  MultiPoly divided_by(const C& s) const {
    if (hecke::is_zero(s)) throw DivisionByZero("polynomial division by zero");
    return scaled(C(1) / s);
  }

  /// Replaces variable `var` by the polynomial `value`.
  MultiPoly substitute(int var, const MultiPoly& value) const {
    const int deg = degree_in(var);
    if (deg <= 0) return *this;
    std::vector<MultiPoly> powers{MultiPoly::constant(vars_, C(1))};
    for (int k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
    MultiPoly out = MultiPoly::constant(vars_, C(0));
    for (int k = 0; k <= deg; ++k) {
      MultiPoly ck = coefficient_of(var, k);
      if (!ck.is_zero()) out += ck * powers[static_cast<std::size_t>(k)];
    }
    return out;
  }

  /// Homogenized substitution var -> num/den: returns P(num/den) * den^deg,
  /// where deg is the degree of P in var.
  MultiPoly substitute_fraction(int var, const MultiPoly& num, const MultiPoly& den) const {
    const int deg = degree_in(var);
    if (deg <= 0) return *this;
    std::vector<MultiPoly> np{MultiPoly::constant(vars_, C(1))}, dp{np[0]};
    for (int k = 1; k <= deg; ++k) {
      np.push_back(np.back() * num);
      dp.push_back(dp.back() * den);
    }
    MultiPoly out = MultiPoly::constant(vars_, C(0));
    for (int k = 0; k <= deg; ++k) {
      MultiPoly ck = coefficient_of(var, k);
      if (!ck.is_zero()) {
        out += ck * np[static_cast<std::size_t>(k)] * dp[static_cast<std::size_t>(deg - k)];
      }
    }
    return out;
  }

  /// Exchanges two variables.
  MultiPoly swap_variables(int i, int j) const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      std::swap(f.at(static_cast<std::size_t>(i)), f.at(static_cast<std::size_t>(j)));
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Renames variables by an index map: variable i becomes perm[i].
  MultiPoly permute_variables(const std::vector<int>& perm) const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      Exponents f(e.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f.at(static_cast<std::size_t>(perm[i])) += e[i];
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Evaluates at a full point (one value per variable).
  template <class T>
  T evaluate(const std::vector<T>& point) const {
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m = T(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) m = m * pow(point.at(i), e[i]);
      }
      acc = acc + m;
    }
    return acc;
  }

  /// Terms by decreasing total degree, then decreasing exponent vector.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, C>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
      int dx = 0, dy = 0;
      for (int v : x.first) dx += v;
      for (int v : y.first) dy += v;
      if (dx != dy) return dx > dy;
      return x.first > y.first;
    });
    std::string out;
    for (const auto& [e, c] : ordered) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (*vars_)[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string cs = coefficient_to_string(c);
      bool negative = false;
      const bool compound = cs.find_first_of("+ ", 1) != std::string::npos ||
                            cs.find('-', 1) != std::string::npos;
      if (!compound && cs[0] == '-') {
        negative = true;
        cs = cs.substr(1);
      }
      if (compound) cs = "(" + cs + ")";
      std::string piece;
      if (mono.empty()) {
        piece = cs;
      } else if (cs == "1") {
        piece = mono;
      } else {
        piece = cs + "*" + mono;
      }
      if (out.empty()) {
        out = (negative ? "-" : "") + piece;
      } else {
        out += (negative ? " - " : " + ") + piece;
      }
    }
    return out;
  }

 private:
  std::size_t nvars_or(std::size_t n) const { return vars_ ? vars_->size() : n; }

  Exponents padded(const Exponents& e) const {
    if (e.size() == nvars()) return e;
    Exponents f(nvars(), 0);
    for (std::size_t i = 0; i < e.size() && i < f.size(); ++i) f[i] = e[i];
    return f;
  }

  static void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ && b.vars_ && a.vars_ != b.vars_ && *a.vars_ != *b.vars_) {
      throw InvalidArgument("polynomials from different variable sets");
    }
  }

  void adopt(const Vars& v) {
    if (vars_ || !v) return;
    vars_ = v;
    Terms t;
    for (auto& [e, c] : terms_) t.emplace(padded(e), c);
    terms_ = std::move(t);
  }

  MultiPoly& accumulate(const MultiPoly& o, bool subtract) {
    check_compatible(*this, o);
    adopt(o.vars_);
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(padded(e), subtract ? C(-c) : c);
      if (!inserted) {
        if (subtract) {
          it->second -= c;
        } else {
          it->second += c;
        }
        if (hecke::is_zero(it->second)) terms_.erase(it);
      }
    }
    return *this;
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = hecke::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
  }

  Vars vars_;
  Terms terms_;
};

template <class C>
MultiPoly<C> pow(const MultiPoly<C>& x, long e) {
  if (e < 0) throw InvalidArgument("negative polynomial exponent");
  MultiPoly<C> result = MultiPoly<C>::constant(x.vars(), C(1)), base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

template <class C>
bool is_zero(const MultiPoly<C>& p) {
  return p.is_zero();
}

template <class C>
std::ostream& operator<<(std::ostream& os, const MultiPoly<C>& p) {
  return os << p.to_string();
}

/// A polynomial ring: owns the variable list and hands out generators.
template <class C>
class PolyRing {
 public:
  using Poly = MultiPoly<C>;

  PolyRing(std::initializer_list<std::string> names)
      : vars_(std::make_shared<const std::vector<std::string>>(names)) {}
  explicit PolyRing(std::vector<std::string> names)
      : vars_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

  const typename Poly::Vars& vars() const { return vars_; }
  Poly var(std::string_view name) const { return Poly::variable(vars_, index(name)); }
  Poly operator()(std::string_view name) const { return var(name); }
  Poly constant(const C& c) const { return Poly::constant(vars_, c); }
  int index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if ((*vars_)[i] == name) return static_cast<int>(i);
    }
    throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  }

  /// Parses an expression over this ring's variables (and `e` when C is
  /// Scalar and order > 1).
  Poly parse(std::string_view text, int order = 1) const {
    ExpressionParser<Poly> p(text, [&](std::string_view name) -> std::optional<Poly> {
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if ((*vars_)[i] == name) return Poly::variable(vars_, static_cast<int>(i));
      }
      if constexpr (std::is_same_v<C, Scalar>) {
        if (name == "e" && order > 1) return constant(Scalar::zeta(order));
      }
      return std::nullopt;
    });
    Poly r = p.parse();
    return r + constant(C(0));
  }

 private:
  typename Poly::Vars vars_;
};

using RatPoly = MultiPoly<Rational>;
using ScalarPoly = MultiPoly<Scalar>;

}  // namespace hecke
