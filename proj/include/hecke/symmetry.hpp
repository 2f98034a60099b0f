#pragma once

#include <optional>
#include <string>

#include "hecke/heckealg.hpp"
#include "hecke/linalg.hpp"

namespace hecke {

/// Largest tensor dimension N^n that dense tensor operations accept.
Eigen::Index max_tensor_dim();
void set_max_tensor_dim(Eigen::Index cap);
/// N^n, or SizeLimitExceeded beyond the cap.
Eigen::Index tensor_dim(int N, int n);

/// Outcome of an exact relation check; `witness` names the first bad entry.
struct RelationCheck {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

/// (R - q)(R + 1) = 0.
RelationCheck check_hecke(const MatrixF& R, const Scalar& q);
/// (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R) on V^(x3).
RelationCheck check_braid(const MatrixF& R, int N);
/// The braid difference itself (zero iff R satisfies the braid equation).
MatrixF braid_residual(const MatrixF& R, int N);

/// A Hecke symmetry R on V (dim N) with parameter q, validated at construction.
///
/// R acts on V x V in the lexicographic basis e_i x e_j; entry (r, c) is the
/// coefficient of basis vector r in the image of basis vector c.
class HeckeSymmetry {
 public:
  HeckeSymmetry(int N, FieldSpec F, MatrixF R, std::string name = "custom");

  int dim() const { return N_; }
  const FieldSpec& field() const { return F_; }
  const Scalar& q() const { return F_.q; }
  const MatrixF& matrix() const { return R_; }
  const std::string& name() const { return name_; }

 private:
  int N_;
  FieldSpec F_;
  MatrixF R_;
  std::string name_;
};

/// Standard Drinfeld-Jimbo type symmetry on an N-dimensional space.
HeckeSymmetry dj_standard(int N, const FieldSpec& F);
/// The flip of tensorands, q = 1.
HeckeSymmetry flip(int N);
/// R = q Id.
HeckeSymmetry scalar_symmetry(int N, const FieldSpec& F);

HeckeSymmetry dual_symmetry(const HeckeSymmetry& S);
HeckeSymmetry opposite(const HeckeSymmetry& S);
/// (tau x tau) R (tau^-1 x tau^-1).
HeckeSymmetry conjugate(const HeckeSymmetry& S, const MatrixF& tau);
/// The same matrix with every entry specialized at q = q0.
HeckeSymmetry specialize_symmetry(const HeckeSymmetry& S, const FieldSpec& target);

/// Lexicographic position of the word (i_1..i_n) over 1..N.
Eigen::Index word_index(const std::vector<int>& word, int N);
std::vector<int> index_word(Eigen::Index idx, int N, int n);

/// R_i^(n) applied to the columns of X (rows indexed by V^(x n)).
MatrixF apply_generator(const HeckeSymmetry& S, int n, int i, const MatrixF& X);
/// The element h of H_m, m <= n, acting on the first m tensor factors.
MatrixF act(const HeckeElement& h, const HeckeSymmetry& S, int n, const MatrixF& X);
VectorF act(const HeckeElement& h, const HeckeSymmetry& S, int n, const VectorF& x);
MatrixF rep_matrix(const HeckeElement& h, int n, const HeckeSymmetry& S);
/// Id^(i-1) x R x Id^(n-i-1).
MatrixF generator_matrix(const HeckeSymmetry& S, int n, int i);

/// Upsilon^(n) = intersection of the images of R_i - q, via the recursion
/// Upsilon^(n) = (Upsilon^(n-1) x V) meet (V x Upsilon^(n-1)).
SubspaceF upsilon(int n, const HeckeSymmetry& S);
/// Upsilon^(m) from Upsilon^(m-1) (ignored for m <= 2).
SubspaceF upsilon_step(const SubspaceF& prev, int m, const HeckeSymmetry& S);
/// The same space from the defining intersection.
SubspaceF upsilon_direct(int n, const HeckeSymmetry& S);
/// I_n = sum of the kernels of R_i - q.
SubspaceF ideal_component(int n, const HeckeSymmetry& S);
/// Span of all u x w with u in U, w in W.
SubspaceF tensor_product(const SubspaceF& U, const SubspaceF& W);

/// a * b = y_{k+l/k,l}(a x b); throws InvalidArgument if a result leaves Upsilon^(k+l).
VectorF star(const VectorF& a, int k, const VectorF& b, int l, const HeckeSymmetry& S);

}  // namespace hecke
