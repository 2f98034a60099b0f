#pragma once

#include <Eigen/Core>

#include "hecke/multipoly.hpp"
#include "hecke/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<hecke::Scalar> : GenericNumTraits<hecke::Scalar> {
  using Real = hecke::Scalar;
  using NonInteger = hecke::Scalar;
  using Nested = hecke::Scalar;
  using Literal = hecke::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<hecke::Rational> : GenericNumTraits<hecke::Rational> {
  using Real = hecke::Rational;
  using NonInteger = hecke::Rational;
  using Nested = hecke::Rational;
  using Literal = hecke::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <class C>
struct NumTraits<hecke::MultiPoly<C>> : GenericNumTraits<hecke::MultiPoly<C>> {
  using Real = hecke::MultiPoly<C>;
  using NonInteger = hecke::MultiPoly<C>;
  using Nested = hecke::MultiPoly<C>;
  using Literal = hecke::MultiPoly<C>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 256,
    MulCost = 1024
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
