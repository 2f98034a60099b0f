#include "hecke/scalar.hpp"

#include <ostream>

#include "hecke/errors.hpp"

namespace hecke {

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const UPoly& num) : num_(num), den_(1) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    UPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (den_.lead() != 1) {
    Rational inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::constant_value() const { return num_.coeff(0) / den_.coeff(0); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_);
    return RatFunc(a.num_ + b.num_, a.den_);
  }
  if (b.den_.is_one()) {
    RatFunc r;
    r.num_ = a.num_ + b.num_ * a.den_;
    r.den_ = a.den_;
    return r;  // gcd(num, den) unchanged
  }
  if (a.den_.is_one()) return b + a;
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  UPoly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  UPoly g1 = gcd(n1, d2);
  if (g1.degree() > 0) {
    n1 = n1.exact_div(g1);
    d2 = d2.exact_div(g1);
  }
  UPoly g2 = gcd(n2, d1);
  if (g2.degree() > 0) {
    n2 = n2.exact_div(g2);
    d1 = d1.exact_div(g2);
  }
  RatFunc r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  Rational inv = 1 / r.den_.lead();
  r.num_ *= inv;
  r.den_ *= inv;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string("q");
  std::string n = num_.to_string("q");
  if (num_.coeffs().size() > 1 || sgn(num_.coeff(0)) < 0 || num_.coeff(0).get_den() != 1) {
    n = "(" + n + ")";
  }
  return n + "/(" + den_.to_string("q") + ")";
}

// ---------------------------------------------------------------- Cyclo

Cyclo::Cyclo(int order, UPoly value) : order_(order) {
  if (order < 1) throw InvalidArgument("cyclotomic order must be >= 1");
  const UPoly& phi = cyclotomic_polynomial(order);
  v_ = value.degree() >= phi.degree() ? value % phi : std::move(value);
}

Cyclo Cyclo::zeta(int order) { return Cyclo(order, UPoly::x()); }

std::vector<Rational> Cyclo::coefficients() const {
  const int d = cyclotomic_polynomial(order_).degree();
  std::vector<Rational> out(static_cast<std::size_t>(d), Rational(0));
  for (int i = 0; i <= v_.degree(); ++i) out[static_cast<std::size_t>(i)] = v_.coeff(i);
  return out;
}

static void require_same_order(const Cyclo& a, const Cyclo& b) {
  if (a.order() != b.order()) {
    throw FieldMismatch("cyclotomic orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
  }
}

Cyclo Cyclo::operator-() const { return Cyclo(order_, -v_); }

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  require_same_order(a, b);
  return Cyclo(a.order_, a.v_ + b.v_);
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  require_same_order(a, b);
  return Cyclo(a.order_, a.v_ - b.v_);
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  require_same_order(a, b);
  return Cyclo(a.order_, a.v_ * b.v_);
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic element");
  XGcd r = xgcd(v_, cyclotomic_polynomial(order_));
  return Cyclo(order_, r.s);
}

std::string Cyclo::to_string(const std::string& var) const { return v_.to_string(var); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const RatFunc& x) {
  if (x.is_constant()) {
    v_ = x.constant_value();
  } else {
    v_ = x;
  }
}

Scalar::Scalar(const Cyclo& x) {
  if (x.is_rational()) {
    v_ = x.value().coeff(0);
  } else {
    v_ = x;
  }
}

bool Scalar::is_zero() const { return is_rational() && sgn(rational()) == 0; }
bool Scalar::is_one() const { return is_rational() && rational() == 1; }

RatFunc Scalar::as_ratfunc() const {
  switch (v_.index()) {
    case 0:
      return RatFunc(UPoly(std::get<Rational>(v_)));
    case 1:
      return std::get<RatFunc>(v_);
    default:
      throw FieldMismatch("cyclotomic value used as a rational function of q");
  }
}

Cyclo Scalar::as_cyclo(int order) const {
  switch (v_.index()) {
    case 0:
      return Cyclo(order, UPoly(std::get<Rational>(v_)));
    case 2: {
      const Cyclo& c = std::get<Cyclo>(v_);
      if (c.order() != order) {
        throw FieldMismatch("cyclotomic orders differ: " + std::to_string(c.order()) + " vs " +
                            std::to_string(order));
      }
      return c;
    }
    default:
      throw FieldMismatch("rational function of q used in a cyclotomic field");
  }
}

int Scalar::cyclo_order() const {
  return v_.index() == 2 ? std::get<Cyclo>(v_).order() : 1;
}

namespace {

// Common kind of a binary operation: 0 rational, 1 ratfunc, 2 cyclotomic.
int common_kind(const Scalar& a, const Scalar& b) {
  const int ka = static_cast<int>(a.kind());
  const int kb = static_cast<int>(b.kind());
  if (ka == 0) return kb;
  if (kb == 0 || ka == kb) return ka;
  throw FieldMismatch("cannot mix a rational function of q with a cyclotomic value");
}

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
  switch (common_kind(a, b)) {
    case 0:
      return Scalar(Rational(op(a.rational(), b.rational())));
    case 1:
      return Scalar(op(a.as_ratfunc(), b.as_ratfunc()));
    default: {
      const int m = a.cyclo_order() > 1 ? a.cyclo_order() : b.cyclo_order();
      return Scalar(op(a.as_cyclo(m), b.as_cyclo(m)));
    }
  }
}

}  // namespace

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0:
      return Scalar(Rational(-std::get<Rational>(v_)));
    case 1:
      return Scalar(-std::get<RatFunc>(v_));
    default:
      return Scalar(-std::get<Cyclo>(v_));
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return a;
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar Scalar::inverse() const {
  switch (v_.index()) {
    case 0:
      if (sgn(std::get<Rational>(v_)) == 0) throw DivisionByZero("division by zero");
      return Scalar(Rational(1 / std::get<Rational>(v_)));
    case 1:
      return Scalar(std::get<RatFunc>(v_).inverse());
    default:
      return Scalar(std::get<Cyclo>(v_).inverse());
  }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  if (a.is_zero()) return Scalar();
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return a.v_ == b.v_;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar pow(const Scalar& x, long e) { return x.pow(e); }

std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 0:
      return std::get<Rational>(v_).get_str();
    case 1:
      return std::get<RatFunc>(v_).to_string();
    default:
      return std::get<Cyclo>(v_).to_string("e");
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::rational(const Rational& q0) {
  FieldSpec F;
  F.kind = Kind::rational;
  F.order = 1;
  F.q = Scalar(q0);
  return F;
}

FieldSpec FieldSpec::cyclotomic(int m, const Scalar& q0) {
  if (m < 1) throw InvalidArgument("cyclotomic order must be >= 1");
  FieldSpec F;
  F.kind = Kind::cyclotomic;
  F.order = m;
  F.check(q0);
  F.q = q0;
  return F;
}

void FieldSpec::check(const Scalar& x) const {
  switch (kind) {
    case Kind::rational:
      if (!x.is_rational()) throw FieldMismatch("value " + x.to_string() + " is not rational");
      break;
    case Kind::ratfunc_q:
      if (x.kind() == Scalar::Kind::cyclotomic) {
        throw FieldMismatch("cyclotomic value " + x.to_string() + " in the field Q(q)");
      }
      break;
    case Kind::cyclotomic:
      if (x.kind() == Scalar::Kind::ratfunc) {
        throw FieldMismatch("rational function " + x.to_string() + " in a cyclotomic field");
      }
      if (x.kind() == Scalar::Kind::cyclotomic && x.cyclo_order() != order) {
        throw FieldMismatch("cyclotomic order mismatch for " + x.to_string());
      }
      break;
  }
}

std::string FieldSpec::kind_name() const {
  switch (kind) {
    case Kind::rational:
      return "rational";
    case Kind::ratfunc_q:
      return "ratfunc_q";
    default:
      return "cyclotomic";
  }
}

std::string FieldSpec::describe() const {
  std::string s = kind_name();
  if (kind == Kind::cyclotomic) s += "(" + std::to_string(order) + ")";
  return s + ", q = " + q.to_string();
}

// ---------------------------------------------------------------- q-numbers

Scalar qint(int n, const FieldSpec& F) {
  if (n < 0) throw InvalidArgument("qint requires n >= 0");
  Scalar sum, power(1);
  for (int i = 0; i < n; ++i) {
    sum += power;
    power *= F.q;
  }
  return sum;
}

Scalar qfact(int n, const FieldSpec& F) {
  if (n < 0) throw InvalidArgument("qfact requires n >= 0");
  Scalar p(1);
  for (int k = 1; k <= n; ++k) p *= qint(k, F);
  return p;
}

Scalar qbinom(int n, int k, const FieldSpec& F) {
  if (n < 0 || k < 0 || k > n) throw InvalidArgument("qbinom requires 0 <= k <= n");
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<Scalar> row{Scalar(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Scalar> next(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      Scalar v;
      if (j >= 1) v += row[static_cast<std::size_t>(j - 1)];
      if (j <= m - 1) v += F.q.pow(j) * row[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Scalar specialize(const Scalar& x, const Scalar& q0) {
  if (x.kind() == Scalar::Kind::cyclotomic) {
    throw FieldMismatch("specialize expects a rational function of q");
  }
  RatFunc r = x.as_ratfunc();
  Scalar one(1);
  Scalar den = r.den().eval_in<Scalar>(q0, one);
  if (den.is_zero()) {
    throw PoleError("denominator " + r.den().to_string("q") + " vanishes at q = " + q0.to_string());
  }
  return r.num().eval_in<Scalar>(q0, one) / den;
}

Scalar primitive_root(int m, int order) {
  if (m < 1 || order < 1 || order % m != 0) {
    throw FieldMismatch("no primitive " + std::to_string(m) + "-th root of unity in Q(zeta_" +
                        std::to_string(order) + ")");
  }
  return Scalar::zeta(order).pow(order / m);
}

}  // namespace hecke
