#include "hecke/upoly.hpp"

#include <map>
#include <mutex>

#include "hecke/errors.hpp"

namespace hecke {

namespace {
const Rational kZero(0);
}

UPoly::UPoly(const Rational& c) {
  if (sgn(c) != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

UPoly UPoly::x() { return monomial(Rational(1), 1); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  UPoly p;
  if (sgn(c) == 0) return p;
  p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  p.c_.back().canonicalize();
  return p;
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rational& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1, Rational(0));
  const Rational inv_lead = 1 / d.lead();
  const int dd = d.degree();
  for (int k = degree(); k >= dd; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    Rational f = top * inv_lead;
    quo[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return *this * Rational(1 / lead());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(out));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) mono = var;
    if (k >= 2) mono += "^" + std::to_string(k);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.monic();
  UPoly y = b.monic();
  while (!y.is_zero()) {
    UPoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

XGcd xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0(1), s1;
  UPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

const UPoly& cyclotomic_polynomial(int m) {
  if (m < 1) throw InvalidArgument("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<int, UPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 = prod_{d | m} Phi_d
  UPoly p = UPoly::monomial(Rational(1), m) - UPoly(1);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto found = cache.find(d);
    UPoly phi_d;
    if (found == cache.end()) {
      // Recursion without holding the lock twice: build divisors bottom-up.
      UPoly q = UPoly::monomial(Rational(1), d) - UPoly(1);
      for (int e = 1; e < d; ++e) {
        if (d % e == 0) q = q.exact_div(cache.at(e));
      }
      phi_d = cache.emplace(d, q).first->second;
    } else {
      phi_d = found->second;
    }
    p = p.exact_div(phi_d);
  }
  return cache.emplace(m, p).first->second;
}

}  // namespace hecke
