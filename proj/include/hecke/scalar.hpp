#pragma once

#include <string>
#include <variant>

#include "hecke/upoly.hpp"

namespace hecke {

/// Element of Q(q): reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const UPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  static RatFunc q() { return RatFunc(UPoly::x()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_;
};

/// Element of Q(zeta_m), stored as a polynomial in zeta reduced modulo Phi_m.
class Cyclo {
 public:
  Cyclo() : order_(1) {}
  Cyclo(int order, UPoly value);

  /// The generator zeta_m.
  static Cyclo zeta(int order);

  int order() const { return order_; }
  const UPoly& value() const { return v_; }
  /// Coefficient vector of length deg Phi_m.
  std::vector<Rational> coefficients() const;
  bool is_zero() const { return v_.is_zero(); }
  bool is_rational() const { return v_.is_constant(); }

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo inverse() const;
  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    return a.order_ == b.order_ && a.v_ == b.v_;
  }

  std::string to_string(const std::string& var = "e") const;

 private:
  int order_;
  UPoly v_;
};

/// An exact field element: rational, rational function in q, or cyclotomic.
///
/// Values are kept canonical: anything equal to a rational number is stored as
/// a Rational, so equality is structural.
class Scalar {
 public:
  enum class Kind { rational, ratfunc, cyclotomic };

  Scalar() : v_(Rational(0)) {}
  Scalar(int x) : v_(Rational(x)) {}   // NOLINT(google-explicit-constructor)
  Scalar(long x) : v_(Rational(x)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& x) : v_(x) {   // NOLINT(google-explicit-constructor)
    std::get<Rational>(v_).canonicalize();
  }
  Scalar(const RatFunc& x);             // NOLINT(google-explicit-constructor)
  Scalar(const Cyclo& x);               // NOLINT(google-explicit-constructor)

  static Scalar q() { return Scalar(RatFunc::q()); }
  static Scalar zeta(int order) { return Scalar(Cyclo::zeta(order)); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_rational() const { return v_.index() == 0; }
  bool is_zero() const;
  bool is_one() const;
  const Rational& rational() const { return std::get<Rational>(v_); }
  RatFunc as_ratfunc() const;
  Cyclo as_cyclo(int order) const;
  /// Cyclotomic order of this value, 1 when rational or a rational function.
  int cyclo_order() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Expression-grammar text; parse_scalar(to_string()) returns the same value.
  std::string to_string() const;

 private:
  std::variant<Rational, RatFunc, Cyclo> v_;
};

Scalar pow(const Scalar& x, long e);
inline bool is_zero(const Scalar& x) { return x.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// The field a computation runs over, with the value bound to q.
struct FieldSpec {
  enum class Kind { rational, ratfunc_q, cyclotomic };

  Kind kind = Kind::ratfunc_q;
  int order = 1;
  Scalar q = Scalar::q();

  static FieldSpec generic() { return {}; }
  static FieldSpec rational(const Rational& q0);
  static FieldSpec cyclotomic(int m, const Scalar& q0);

  /// Throws FieldMismatch if x does not belong to this field.
  void check(const Scalar& x) const;
  std::string kind_name() const;
  std::string describe() const;
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.order == b.order && a.q == b.q;
  }
};

Scalar qint(int n, const FieldSpec& F);
Scalar qfact(int n, const FieldSpec& F);
Scalar qbinom(int n, int k, const FieldSpec& F);

/// Evaluation homomorphism q -> q0; throws PoleError at a root of the denominator.
Scalar specialize(const Scalar& x, const Scalar& q0);

/// A fixed primitive m-th root of unity in Q(zeta_order); m must divide order.
Scalar primitive_root(int m, int order);
inline Scalar primitive_root(int m) { return primitive_root(m, m); }

}  // namespace hecke
