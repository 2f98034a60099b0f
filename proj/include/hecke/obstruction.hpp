#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hecke/regular3.hpp"
#include "hecke/symmetry.hpp"

namespace hecke {

using SymPoly = MultiPoly<Scalar>;
using SymMatrix = Mat<SymPoly>;
using SymVector = Vec<SymPoly>;

/// Coefficients of X^2, Y^2, Z^2, YZ, ZX, XY.
struct TernaryQuadratic {
  std::array<SymPoly, 6> c;
};

/// The variables X, Y, Z inside a polynomial ring that also carries the
/// coefficient variables.
struct TernaryVars {
  SymPoly X, Y, Z;
  int ix = 0, iy = 0, iz = 0;
  static TernaryVars from_ring(const PolyRing<Scalar>& ring);
};

SymPoly as_polynomial(const TernaryQuadratic& F, const TernaryVars& v);
/// Throws InvalidArgument if F is not a quadratic form in X, Y, Z.
TernaryQuadratic from_polynomial(const SymPoly& F, const TernaryVars& v);

/// D_1, D_2, D_3 as 3x3 determinants of linear forms. For D_1,
/// F_j = l_1j X^2 + l_2j Y + l_3j Z where l_2j collects every monomial with a
/// factor Y (Y^2, XY, YZ) and l_3j the rest (Z^2, ZX). D_2 and D_3 follow by
/// the cyclic shift X -> Y -> Z -> X.
std::array<SymPoly, 3> sylvester_dets(const std::array<TernaryQuadratic, 3>& F, const TernaryVars& v);
/// The 6x6 matrix whose columns hold the coefficients of F_1..F_3, D_1..D_3.
SymMatrix sylvester_matrix(const std::array<TernaryQuadratic, 3>& F, const TernaryVars& v);
SymPoly sylvester_resultant(const std::array<TernaryQuadratic, 3>& F, const TernaryVars& v);

/// F_1 = bcX^2+caY^2+abZ^2, F_2 = a^2YZ+b^2ZX+c^2XY,
/// F_3 = a^2X^2+b^2Y^2+c^2Z^2-2bcYZ-2caZX-2abXY.
std::array<TernaryQuadratic, 3> case1_system(const SklParameters<SymPoly>& p);

/// The candidate functional with phi = Id: f(x_(i-1) x_i x_(i+1)) = a',
/// f(x_(i+1) x_i x_(i-1)) = b', f(x_i^3) = c', zero on x_(i+-1) x_i^2 and
/// every rotation. For Scalar entries throws InvalidArgument unless
/// aa' + bb' + cc' = 1.
template <class T>
Vec<T> case1_f(const SklParameters<T>& p, const T& ap, const T& bp, const T& cp) {
  if constexpr (std::is_same_v<T, Scalar>) {
    if (p.a * ap + p.b * bp + p.c * cp != Scalar(1)) {
      throw InvalidArgument("case1_f needs a a' + b b' + c c' = 1");
    }
  }
  Vec<T> f = Vec<T>::Constant(27, T(0));
  for (int i = 0; i < 3; ++i) {
    for (int r = 0; r < 3; ++r) {
      const int w[3] = {i - 1, i, i + 1};
      const int u[3] = {i + 1, i, i - 1};
      f(word3(w[r], w[(r + 1) % 3], w[(r + 2) % 3])) = ap;
      f(word3(u[r], u[(r + 1) % 3], u[(r + 2) % 3])) = bp;
    }
    f(word3(i, i, i)) = cp;
  }
  return f;
}

/// A projection onto span(t_1, t_2, t_3) in factored form P = basis * coeff,
/// with basis 9x3 (columns t_i) and coeff 3x9.
template <class T>
struct Projection {
  Mat<T> basis;
  Mat<T> coeff;
  Mat<T> matrix() const { return multiply(basis, coeff); }
};

/// P(w) = sum_i f(xt_i w) t_i where xt_i = sum_a dual(a, i) x_a.
template <class T>
Projection<T> projection_from_f(const Vec<T>& f, const std::array<Vec<T>, 3>& t, const Mat<T>& dual) {
  Projection<T> P;
  P.basis = Mat<T>::Constant(9, 3, T(0));
  for (int i = 0; i < 3; ++i) P.basis.col(i) = t[static_cast<std::size_t>(i)];
  P.coeff = Mat<T>::Constant(3, 9, T(0));
  for (int i = 0; i < 3; ++i) {
    for (int w = 0; w < 9; ++w) {
      T s(0);
      for (int a = 0; a < 3; ++a) {
        if (!entry_is_zero(dual(a, i)) && !entry_is_zero(f(9 * a + w))) s += dual(a, i) * f(9 * a + w);
      }
      P.coeff(i, w) = s;
    }
  }
  return P;
}

/// Gram matrix G(a, j) = f(x_a t_j).
template <class T>
Mat<T> pairing_matrix(const Vec<T>& f, const std::array<Vec<T>, 3>& t) {
  Mat<T> G = Mat<T>::Constant(3, 3, T(0));
  for (int a = 0; a < 3; ++a) {
    for (int j = 0; j < 3; ++j) {
      T s(0);
      for (int w = 0; w < 9; ++w) {
        const T& x = t[static_cast<std::size_t>(j)](w);
        if (!entry_is_zero(x)) s += f(9 * a + w) * x;
      }
      G(a, j) = s;
    }
  }
  return G;
}

/// M: Id x P from Upsilon^(2,1) to Upsilon^(1,2) in the bases t_i x_j and
/// x_j t_i (index 3j + i); N: P x Id in the reverse direction.
template <class T>
std::pair<Mat<T>, Mat<T>> restricted_maps(const Projection<T>& P) {
  const auto& C = P.coeff;
  Mat<T> M = Mat<T>::Constant(9, 9, T(0));
  Mat<T> N = Mat<T>::Constant(9, 9, T(0));
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      const int col = 3 * j + i;
      // t_i x x_j has entry t_i(w) at 3w + j; Id x P acts on the block of its first factor.
      for (int k = 0; k < 3; ++k) {
        for (int ip = 0; ip < 3; ++ip) {
          T s(0);
          for (int m = 0; m < 3; ++m) {
            const T& tv = P.basis(3 * k + m, i);
            if (!entry_is_zero(tv) && !entry_is_zero(C(ip, 3 * m + j))) s += C(ip, 3 * m + j) * tv;
          }
          M(3 * k + ip, col) = s;
        }
      }
      // x_j t_i has entry t_i(w) at 9j + w; P x Id sees u_k(w') = v(3w' + k).
      for (int k = 0; k < 3; ++k) {
        for (int ip = 0; ip < 3; ++ip) {
          T s(0);
          for (int m = 0; m < 3; ++m) {
            // w' = 3 j + m, so v(3w' + k) = t_i(3m + k) when the first letter is x_j.
            const T& tv = P.basis(3 * m + k, i);
            if (!entry_is_zero(tv) && !entry_is_zero(C(ip, 3 * j + m))) s += C(ip, 3 * j + m) * tv;
          }
          N(3 * k + ip, col) = s;
        }
      }
    }
  }
  return {M, N};
}

/// Scalar form: recovers the factored projection from P and the relations.
std::pair<MatrixF, MatrixF> restricted_maps(const MatrixF& P, const std::array<VectorF, 3>& relations);

/// R = q Id - (1+q) P and the braid difference on V^(x3).
MatrixF braid_residual_of_projection(const MatrixF& P, const Scalar& q);
/// Builds P from f via the basis dual to the relations under f, then the
/// braid difference. Throws DegeneratePairing.
MatrixF braid_residual(const VectorF& f, const SklScalar& p, const Scalar& q);

struct CaseReport {
  int id = 0;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::vector<std::pair<std::string, std::string>> equations;
  Report checks;
  bool contradiction = false;
  std::string verdict;
};

CaseReport verify_case1();
CaseReport verify_case2();
CaseReport verify_case3();
CaseReport verify_case4();
CaseReport verify_case(int id);

/// The Case 1 resultant and its contracted form, with the comparison against
/// the expanded coefficients.
struct ResultantCheck {
  SymPoly resultant;
  SymPoly contracted;
  SymPoly expanded_display;
  Report checks;
};
ResultantCheck case1_resultant();

/// Type-A sample points used for the nonvanishing checks.
std::vector<SklScalar> type_a_samples();

}  // namespace hecke
