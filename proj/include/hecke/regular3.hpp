#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/linalg.hpp"
#include "hecke/multipoly.hpp"
#include "hecke/report.hpp"

namespace hecke {

/// Coefficients of the three-generator Sklyanin family. T is Scalar for
/// concrete work or MultiPoly for symbolic work.
template <class T>
struct SklParameters {
  T a, b, c;
};

using SklScalar = SklParameters<Scalar>;

namespace detail {
inline int mod3(int i) { return ((i % 3) + 3) % 3; }
}  // namespace detail

/// Position of x_i x_j (i, j in 0..2) in V x V, and of x_i x_j x_k in V^(x3).
inline Eigen::Index word2(int i, int j) { return 3 * detail::mod3(i) + detail::mod3(j); }
inline Eigen::Index word3(int i, int j, int k) {
  return 9 * detail::mod3(i) + 3 * detail::mod3(j) + detail::mod3(k);
}

/// t_i = a x_(i+1) x_(i-1) + b x_(i-1) x_(i+1) + c x_i^2, i = 0..2, in V x V.
template <class T>
std::array<Vec<T>, 3> skl_relations(const SklParameters<T>& p) {
  std::array<Vec<T>, 3> t;
  for (int i = 0; i < 3; ++i) {
    t[i] = Vec<T>::Constant(9, T(0));
    t[i](word2(i + 1, i - 1)) += p.a;
    t[i](word2(i - 1, i + 1)) += p.b;
    t[i](word2(i, i)) += p.c;
  }
  return t;
}

/// t = sum (a x_(i-1) x_i x_(i+1) + b x_(i+1) x_i x_(i-1) + c x_i^3) in V^(x3).
template <class T>
Vec<T> skl_tensor(const SklParameters<T>& p) {
  Vec<T> t = Vec<T>::Constant(27, T(0));
  for (int i = 0; i < 3; ++i) {
    t(word3(i - 1, i, i + 1)) += p.a;
    t(word3(i + 1, i, i - 1)) += p.b;
    t(word3(i, i, i)) += p.c;
  }
  return t;
}

/// sum x_i x t_i and sum t_i x x_i, both of which equal skl_tensor(p).
template <class T>
std::pair<Vec<T>, Vec<T>> skl_tensor_from_relations(const SklParameters<T>& p) {
  const auto r = skl_relations(p);
  Vec<T> left = Vec<T>::Constant(27, T(0));
  Vec<T> right = left;
  for (int i = 0; i < 3; ++i) {
    Vec<T> x = Vec<T>::Constant(3, T(0));
    x(i) = T(1);
    const Vec<T> l = kronecker(x, r[i]);
    const Vec<T> rr = kronecker(r[i], x);
    for (Eigen::Index k = 0; k < 27; ++k) {
      left(k) += l(k);
      right(k) += rr(k);
    }
  }
  return {left, right};
}

using Poly3 = MultiPoly<Scalar>;

/// The ring Q(e)[x1, x2, x3].
const Poly3::Vars& cubic_vars();
/// Image of a tensor in V^(x3) in the symmetric algebra.
Poly3 symmetric_image(const VectorF& v);
/// t^S = 3(a+b) x1x2x3 + c (x1^3 + x2^3 + x3^3).
Poly3 skl_symmetric_image(const SklScalar& p);

/// t = t+ + t-: t- alternating with coefficient (a-b)/2, t+ symmetric.
std::pair<VectorF, VectorF> skl_split(const SklScalar& p);
/// sum over S_3 of sgn(pi) x_pi(1) x_pi(2) x_pi(3).
VectorF alternating_tensor();

bool is_regular(const SklScalar& p);
bool is_type_A(const SklScalar& p);

/// (a^3+b^3+c^3)^3 - 27 a^3 b^3 c^3 and the product of (e^i a + e^j b + c).
std::pair<MultiPoly<Scalar>, MultiPoly<Scalar>> pencil_discriminant_forms();

/// 3x3 invertible matrix up to scalars, normalized so the first nonzero entry
/// in row-major order is 1.
class ProjectiveElement {
 public:
  explicit ProjectiveElement(const MatrixF& m);
  static ProjectiveElement identity();

  const MatrixF& matrix() const { return m_; }
  const std::string& key() const { return key_; }
  ProjectiveElement inverse() const;
  /// Smallest k >= 1 with g^k = 1.
  int order() const;

  friend ProjectiveElement operator*(const ProjectiveElement& x, const ProjectiveElement& y);
  friend bool operator==(const ProjectiveElement& x, const ProjectiveElement& y) {
    return x.key_ == y.key_;
  }
  friend bool operator<(const ProjectiveElement& x, const ProjectiveElement& y) {
    return x.key_ < y.key_;
  }

 private:
  MatrixF m_;
  std::string key_;
};

/// Cyclic shift x1 -> x2 -> x3 -> x1 as a matrix acting on V.
MatrixF cyclic_shift();
/// diag(d1, d2, d3).
MatrixF diagonal3(const Scalar& d1, const Scalar& d2, const Scalar& d3);
/// The transposition x1 <-> x2.
MatrixF swap12();
/// x_j -> sum_i e^(ij) x_i.
MatrixF fourier3();

/// Cyclic shift, diag(e,e^2,1), diag(e,1,1), swap, fourier3.
std::vector<ProjectiveElement> hessian_generators();
/// Breadth-first closure of gens under right multiplication, identity first.
std::vector<ProjectiveElement> group_closure(const std::vector<ProjectiveElement>& gens);

struct HessianGroup {
  std::vector<ProjectiveElement> G;
  std::vector<ProjectiveElement> T;
  std::vector<ProjectiveElement> Z;
};

/// The group of order 216 and its subgroups of orders 9 and 18. Throws
/// ValidationFailure if a closure has the wrong order.
HessianGroup hessian_group();

struct ConjugacyClass {
  int order = 0;
  std::vector<std::size_t> members;  // indices into G
};

/// Classes of G, in order of their first member.
std::vector<ConjugacyClass> conjugacy_classes(const std::vector<ProjectiveElement>& G,
                                              const std::vector<ProjectiveElement>& gens);
/// element order -> count.
std::map<int, int> order_census(const std::vector<ProjectiveElement>& G);

struct HessianReport {
  std::size_t order_G = 0, order_T = 0, order_Z = 0;
  std::vector<ConjugacyClass> classes;
  std::map<int, int> census;
  Report checks;
};
HessianReport conjugacy_report(const HessianGroup& H);

/// w1 = sum x_(i-1) x_i x_(i+1), w2 = sum x_(i+1) x_i x_(i-1), w3 = sum x_i^3.
std::array<VectorF, 3> parameter_basis();
/// Matrix of tau^(x3) on span(w1, w2, w3); columns are images of w_j.
/// Throws InvalidArgument if the span is not stable.
MatrixF action_on_parameters(const MatrixF& tau);

struct RelationsCheck {
  bool preserves = false;
  /// For a != b: whether theta(t^S) = det(theta) t^S.
  std::optional<bool> det_twisted;
};
RelationsCheck preserves_relations(const MatrixF& theta, const SklScalar& p);

/// -2^12 3^3 (k^3-1)^3 k^3 / (8k^3+1)^3. Throws PoleError at the pole.
Scalar j_invariant(const Scalar& kappa);

/// The 9 base points of the pencil, first nonzero coordinate 1.
std::vector<VectorF> inflection_points();
/// g (acting on column vectors) maps the 9 points onto themselves.
bool permutes_inflection_points(const MatrixF& g);

}  // namespace hecke
