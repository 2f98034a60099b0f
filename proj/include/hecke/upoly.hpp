#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace hecke {

using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Dense univariate polynomial with rational coefficients.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  UPoly(const Rational& c);             // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly x();
  static UPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const;
  const Rational& coeff(int i) const;
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  UPoly operator-() const;

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  /// Exact quotient; throws InvalidArgument when the remainder is nonzero.
  UPoly exact_div(const UPoly& d) const;

  UPoly monic() const;
  UPoly derivative() const;
  Rational eval(const Rational& x) const;

  /// Horner evaluation in any ring that accepts rational constants.
  template <class T>
  T eval_in(const T& x, const T& one) const {
    T acc = one * T(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + one * T(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
  UPoly g, s, t;
};
XGcd xgcd(const UPoly& a, const UPoly& b);

/// The m-th cyclotomic polynomial (cached, thread-safe).
const UPoly& cyclotomic_polynomial(int m);

std::string rational_to_string(const Rational& r);

}  // namespace hecke
