#pragma once

#include <map>
#include <string>

#include "hecke/permgroup.hpp"
#include "hecke/report.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// Element of the Hecke algebra H_n(q) in the standard basis {T_sigma}.
class HeckeElement {
 public:
  using Terms = std::map<Permutation, Scalar>;

  HeckeElement(int n, FieldSpec F) : n_(n), F_(std::move(F)) {}

  static HeckeElement basis(const Permutation& s, const FieldSpec& F);
  static HeckeElement one(int n, const FieldSpec& F);
  /// The generator T_i.
  static HeckeElement generator(int i, int n, const FieldSpec& F);

  int degree() const { return n_; }
  const FieldSpec& field() const { return F_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const Permutation& s) const;

  void add_term(const Permutation& s, const Scalar& c);

  /// T_i * this.
  HeckeElement left_generator(int i) const;
  /// this * T_i.
  HeckeElement right_generator(int i) const;

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Scalar& c, const HeckeElement& h);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void require_compatible(const HeckeElement& o) const;

  int n_;
  FieldSpec F_;
  Terms terms_;
};

HeckeElement mul(const HeckeElement& a, const HeckeElement& b);

/// y_n = sum (-1)^l(s) q^(l_n - l(s)) T_s.
HeckeElement antisymmetrizer(int n, const FieldSpec& F);

enum class PartialKind { subgroup, left, right };

/// y(S_lambda), y(S_n / S_lambda) or y(S_lambda \ S_n).
HeckeElement partial_y(int n, const Composition& lambda, PartialKind which, const FieldSpec& F);

/// Image under T_i -> T_{k+i}, in H_{k+n}.
HeckeElement shift_element(const HeckeElement& h, int k);
/// The same element regarded in H_m, m >= n.
HeckeElement embed_element(const HeckeElement& h, int m);

/// First permutation where a and b differ, with both coefficients.
std::string difference_witness(const HeckeElement& a, const HeckeElement& b);

/// Exact identity suite for all admissible degrees up to n_max (n_max <= 6).
Report verify_identities(int n_max, const FieldSpec& F);

}  // namespace hecke
