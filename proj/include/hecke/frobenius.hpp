#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hecke/report.hpp"
#include "hecke/symmetry.hpp"

namespace hecke {

/// Top degree n of Upsilon(V,R) and the spanning tensor t of Upsilon^(n).
struct TopComponent {
  int n = 0;
  VectorF t;
};

/// Smallest n <= n_max with dim Upsilon^(n) = 1 and Upsilon^(n+1) = 0. t is
/// scaled so its first nonzero coordinate is 1. Throws NoTopComponent.
TopComponent top_component(const HeckeSymmetry& S, int n_max);
/// The default search bound 2N+1.
inline int default_max_degree(const HeckeSymmetry& S) { return 2 * S.dim() + 1; }

struct FrobeniusProfile {
  int n = 0;
  VectorF t;
  /// Upsilon^(k) for k = 0..n; its echelon rows are the bases used below.
  std::vector<SubspaceF> upsilon;
  /// beta[k](a, b) on basis rows a of Upsilon^(k) and b of Upsilon^(n-k).
  std::vector<MatrixF> beta;
  MatrixF theta;
  MatrixF theta_bar;
  MatrixF phi;
  MatrixF psi;
  /// Present only when [n-1]!_q != 0; f(e_w) for each basis word w.
  std::optional<VectorF> f;
};

/// beta_k(u, w) t = y_{n/k,n-k}(u x w), on the echelon bases. Throws
/// DegeneratePairing when the matrix is not square and invertible.
MatrixF pairing(int k, const FrobeniusProfile& P, const HeckeSymmetry& S);
/// (theta, theta_bar): T_{(n+1)->1}(v t) = t theta(v) and T_{1->(n+1)}(t v) = theta_bar(v) t.
std::pair<MatrixF, MatrixF> theta(const FrobeniusProfile& P, const HeckeSymmetry& S);
/// t = sum x_i t_i = sum t_i psi(x_i) with x_i the standard basis.
MatrixF psi(const FrobeniusProfile& P, const HeckeSymmetry& S);
/// beta_{n-1}(b, a) = beta_1(phi(a), b); needs P.beta filled.
MatrixF phi(const FrobeniusProfile& P, const HeckeSymmetry& S);
/// y_n u = [n-1]!_q f(u) t. Throws QFactorialVanishes.
VectorF f_functional(const FrobeniusProfile& P, const HeckeSymmetry& S);

/// Full profile: top component, every beta_k, theta, theta_bar, psi, phi and,
/// when available, f.
FrobeniusProfile frobenius_profile(const HeckeSymmetry& S, int n_max);
inline FrobeniusProfile frobenius_profile(const HeckeSymmetry& S) {
  return frobenius_profile(S, default_max_degree(S));
}

/// k-fold tensor power of a square matrix (k = 0 gives the 1x1 identity).
MatrixF tensor_power(const MatrixF& A, int k);
/// Matrix of the restriction of A (acting on the ambient space) to an A-stable
/// subspace U, in U's echelon basis. Throws InvalidArgument if U is not stable.
MatrixF restrict_to(const MatrixF& A, const SubspaceF& U);

struct TraceRow {
  int k = 0;
  Scalar xi;
  Scalar eta;
  Scalar expected;
};

/// tr xi_k, tr eta_k and (-1)^(kn-k) q^(k(k+1)/2) [n over k]_q for k = 1..n.
std::vector<TraceRow> trace_table(const FrobeniusProfile& P, const HeckeSymmetry& S);
/// Trace formula for every k plus the ratio tr xi_{n-k} = q^((n-2k)(n+1)/2) tr xi_k.
Report trace_report(const FrobeniusProfile& P, const HeckeSymmetry& S);

/// Every identity relating t, beta_k, theta, theta_bar, phi, psi and f.
Report verify_frobenius(const FrobeniusProfile& P, const HeckeSymmetry& S);
/// Operators of the opposite symmetry: phi^-1, psi^-1 and theta_bar.
Report verify_opposite(const FrobeniusProfile& P, const HeckeSymmetry& S);
/// Structure of the spaces Upsilon^(k) up to degree n_max: containments,
/// closure under T_rho, the T_rho scalar identity, y_n nonvanishing.
Report verify_upsilon(const FrobeniusProfile& P, const HeckeSymmetry& S);

struct DimensionRow {
  int k = 0;
  Eigen::Index upsilon = 0;
  Eigen::Index lambda = 0;
};
/// dim Upsilon^(k) against dim Lambda_k = N^k - dim I_k, for k = 0..k_max,
/// stopping silently at the size cap.
std::vector<DimensionRow> dimension_probe(const HeckeSymmetry& S, int k_max);

struct Reconstruction {
  MatrixF P;
  MatrixF R;
};

/// P(w) = sum f(xt_i w) t_i with xt the basis of V dual to the relation basis
/// t_i under (v, r) -> f(v r); R = q Id - (1+q) P. f lives on V^(x3).
Reconstruction reconstruct_from_f(const VectorF& f, const SubspaceF& relations, const Scalar& q, int N);

}  // namespace hecke
