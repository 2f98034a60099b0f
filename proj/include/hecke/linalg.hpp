#pragma once

#include <Eigen/Core>

#include <bit>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hecke/eigen_support.hpp"
#include "hecke/errors.hpp"

namespace hecke {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using MatrixF = Mat<Scalar>;
using VectorF = Vec<Scalar>;

template <class T>
struct is_field : std::bool_constant<std::is_same_v<T, Scalar> || std::is_same_v<T, Rational>> {};

template <class T>
bool entry_is_zero(const T& x) {
  return is_zero(x);
}

template <class T>
Mat<T> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Mat<T>::Constant(rows, cols, T(0));
}

template <class T>
Mat<T> identity(Eigen::Index n) {
  Mat<T> I = zeros<T>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) I(i, i) = T(1);
  return I;
}

template <class A, class B>
bool equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

template <class D>
bool all_zero(const Eigen::MatrixBase<D>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!entry_is_zero(a(i, j))) return false;
    }
  }
  return true;
}

/// Product that skips zero entries of the left factor; exact matrices here
/// are mostly sparse.
template <class T>
Mat<T> multiply(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("multiply: shape mismatch");
  Mat<T> out = zeros<T>(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const T& aik = a(i, k);
      if (entry_is_zero(aik)) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        const T& bkj = b(k, j);
        if (!entry_is_zero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

template <class T>
Vec<T> multiply(const Mat<T>& a, const Vec<T>& v) {
  Mat<T> m = v;
  return multiply(a, m).col(0);
}

template <class T>
Mat<T> kronecker(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> out = zeros<T>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (entry_is_zero(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          if (!entry_is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

template <class T>
Vec<T> kronecker(const Vec<T>& a, const Vec<T>& b) {
  Vec<T> out = Vec<T>::Constant(a.size() * b.size(), T(0));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (entry_is_zero(a(i))) continue;
    for (Eigen::Index k = 0; k < b.size(); ++k) {
      if (!entry_is_zero(b(k))) out(i * b.size() + k) = a(i) * b(k);
    }
  }
  return out;
}

template <class T>
T trace(const Mat<T>& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("trace of a non-square matrix");
  T s(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

template <class T>
struct Echelon {
  Mat<T> matrix;
  std::vector<Eigen::Index> pivots;
};

/// Reduced row echelon form; the pivot in each column is the first nonzero
/// entry at or below the current row.
template <class T>
Echelon<T> rref(Mat<T> a) {
  static_assert(is_field<T>::value, "rref needs field entries");
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && entry_is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const T inv = T(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) {
      if (!entry_is_zero(a(row, j))) a(row, j) = a(row, j) * inv;
    }
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || entry_is_zero(a(i, col))) continue;
      const T f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) {
        if (!entry_is_zero(a(row, j))) a(i, j) -= f * a(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T>
Eigen::Index rank(const Mat<T>& a) {
  return static_cast<Eigen::Index>(rref(a).pivots.size());
}

/// A linear subspace of T^ambient, stored as the nonzero rows of an RREF.
template <class T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Eigen::Index ambient) : ambient_(ambient), basis_(zeros<T>(0, ambient)) {}

  /// Span of the rows of m.
  static Subspace from_rows(const Mat<T>& m) {
    Subspace s(m.cols());
    Echelon<T> e = rref(m);
    const auto r = static_cast<Eigen::Index>(e.pivots.size());
    s.basis_ = e.matrix.topRows(r);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  /// Span of the columns of m.
  static Subspace from_columns(const Mat<T>& m) { return from_rows(m.transpose()); }
  static Subspace full(Eigen::Index n) { return from_rows(identity<T>(n)); }
  static Subspace zero(Eigen::Index n) { return Subspace(n); }

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return basis_.rows(); }
  /// Basis vectors as rows, in reduced echelon form.
  const Mat<T>& basis() const { return basis_; }
  /// Basis vectors as columns.
  Mat<T> basis_columns() const { return basis_.transpose(); }
  Vec<T> vector(Eigen::Index i) const { return basis_.row(i).transpose(); }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  /// Coordinates of v in the echelon basis (read at the pivot columns), or
  /// nothing when v is not in the subspace.
  std::optional<Vec<T>> coordinates(const Vec<T>& v) const {
    if (v.size() != ambient_) throw InvalidArgument("vector has the wrong ambient dimension");
    Vec<T> c(dim());
    Vec<T> rest = v;
    for (Eigen::Index i = 0; i < dim(); ++i) {
      c(i) = v(pivots_[static_cast<std::size_t>(i)]);
      if (entry_is_zero(c(i))) continue;
      for (Eigen::Index j = 0; j < ambient_; ++j) {
        if (!entry_is_zero(basis_(i, j))) rest(j) -= c(i) * basis_(i, j);
      }
    }
    if (!all_zero(rest)) return std::nullopt;
    return c;
  }
  bool contains(const Vec<T>& v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& u) const {
    for (Eigen::Index i = 0; i < u.dim(); ++i) {
      if (!contains(u.vector(i))) return false;
    }
    return true;
  }

  /// Rows spanning the annihilator: v lies in the subspace iff constraints()*v = 0.
  Mat<T> constraints() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
  }

 private:
  Eigen::Index ambient_ = 0;
  Mat<T> basis_;
  std::vector<Eigen::Index> pivots_;
};

using SubspaceF = Subspace<Scalar>;

/// Null space of a, as a subspace of the domain.
template <class T>
Subspace<T> kernel(const Mat<T>& a) {
  Echelon<T> e = rref(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
  }
  Mat<T> rows = zeros<T>(static_cast<Eigen::Index>(free.size()), n);
  for (std::size_t f = 0; f < free.size(); ++f) {
    const auto r = static_cast<Eigen::Index>(f);
    rows(r, free[f]) = T(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const T& x = e.matrix(static_cast<Eigen::Index>(i), free[f]);
      if (!entry_is_zero(x)) rows(r, e.pivots[i]) = -x;
    }
  }
  return Subspace<T>::from_rows(rows);
}

template <class T>
Subspace<T> image(const Mat<T>& a) {
  return Subspace<T>::from_columns(a);
}

template <class T>
Mat<T> Subspace<T>::constraints() const {
  return kernel(basis_).basis();
}

template <class T>
Subspace<T> sum(const Subspace<T>& u, const Subspace<T>& v) {
  if (u.ambient() != v.ambient()) throw InvalidArgument("sum: ambient dimensions differ");
  Mat<T> m(u.dim() + v.dim(), u.ambient());
  m << u.basis(), v.basis();
  return Subspace<T>::from_rows(m);
}

/// Intersection. Small pairs solve u = v directly (kernel of [U^T | -V^T]);
/// large pairs take the kernel of the stacked annihilators.
template <class T>
Subspace<T> intersect(const Subspace<T>& u, const Subspace<T>& v) {
  if (u.ambient() != v.ambient()) throw InvalidArgument("intersect: ambient dimensions differ");
  if (u.dim() == 0 || v.dim() == 0) return Subspace<T>::zero(u.ambient());
  if (u.dim() + v.dim() <= u.ambient()) {
    Mat<T> m(u.ambient(), u.dim() + v.dim());
    m << u.basis().transpose(), -v.basis().transpose();
    const Subspace<T> k = kernel(m);
    if (k.dim() == 0) return Subspace<T>::zero(u.ambient());
    return Subspace<T>::from_rows(multiply(Mat<T>(k.basis().leftCols(u.dim())), u.basis()));
  }
  const Mat<T> cu = u.constraints();
  const Mat<T> cv = v.constraints();
  if (cu.rows() == 0) return v;
  if (cv.rows() == 0) return u;
  Mat<T> m(cu.rows() + cv.rows(), u.ambient());
  m << cu, cv;
  return kernel(m);
}

/// Determinant by cofactor expansion along rows, memoized on column subsets.
/// Needs only ring operations, so it serves polynomial entries.
template <class T>
T determinant(const Mat<T>& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const auto n = static_cast<int>(a.rows());
  if (n == 0) return T(1);
  if (n > 20) throw SizeLimitExceeded("determinant: matrix too large for expansion");
  // minor[mask] = det of rows n-popcount(mask).. with the columns in mask.
  std::vector<std::optional<T>> minor(std::size_t{1} << n);
  minor[0] = T(1);
  std::function<const T&(unsigned)> get = [&](unsigned mask) -> const T& {
    auto& slot = minor[mask];
    if (slot) return *slot;
    const int row = n - std::popcount(mask);
    T acc(0);
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const T& x = a(row, c);
      if (!entry_is_zero(x)) {
        const T term = x * get(mask & ~(1u << c));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    slot = std::move(acc);
    return *slot;
  };
  return get((1u << n) - 1);
}

/// Image of a subspace under a linear map.
template <class T>
Subspace<T> map_subspace(const Mat<T>& a, const Subspace<T>& u) {
  return image(multiply(a, u.basis_columns()));
}

/// Some solution x of a*x = b, or nothing.
template <class T>
std::optional<Vec<T>> solve(const Mat<T>& a, const Vec<T>& b) {
  if (a.rows() != b.size()) throw InvalidArgument("solve: shape mismatch");
  Mat<T> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  Echelon<T> e = rref(aug);
  Vec<T> x = Vec<T>::Constant(a.cols(), T(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x(e.pivots[i]) = e.matrix(static_cast<Eigen::Index>(i), a.cols());
  }
  return x;
}

/// Unique solution X of a*X = b (b may have several columns); throws
/// InconsistentSolve when there is none or more than one.
template <class T>
Mat<T> solve_unique(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("solve: shape mismatch");
  Mat<T> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  Echelon<T> e = rref(aug);
  const auto r = static_cast<Eigen::Index>(e.pivots.size());
  if (r != a.cols() || (r > 0 && e.pivots.back() >= a.cols())) {
    throw InconsistentSolve("linear system has no unique solution");
  }
  for (Eigen::Index i = r; i < aug.rows(); ++i) {
    if (!all_zero(e.matrix.row(i))) throw InconsistentSolve("linear system is inconsistent");
  }
  return e.matrix.block(0, a.cols(), r, b.cols());
}

template <class T>
Mat<T> inverse(const Mat<T>& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("inverse of a non-square matrix");
  try {
    return solve_unique(a, identity<T>(a.rows()));
  } catch (const InconsistentSolve&) {
    throw DivisionByZero("matrix is singular");
  }
}

namespace detail {

template <class T>
T det_gauss(Mat<T> a) {
  const Eigen::Index n = a.rows();
  T d(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && entry_is_zero(a(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      d = -d;
    }
    d *= a(c, c);
    const T inv = T(1) / a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (entry_is_zero(a(i, c))) continue;
      const T f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) {
        if (!entry_is_zero(a(c, j))) a(i, j) -= f * a(c, j);
      }
    }
  }
  return d;
}

// Laplace expansion along rows with memoized column subsets; division-free,
// so it works over polynomial rings.
template <class T>
T det_laplace(const Mat<T>& a) {
  const auto n = static_cast<int>(a.rows());
  if (n == 0) return T(1);
  if (n > 20) throw SizeLimitExceeded("cofactor determinant limited to order 20");
  std::vector<T> minor(std::size_t{1} << n, T(0));
  minor[0] = T(1);
  for (unsigned s = 1; s < minor.size(); ++s) {
    const int r = __builtin_popcount(s) - 1;
    T acc(0);
    int idx = 0;
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const T& x = a(r, j);
      const T& m = minor[s & ~(1u << j)];
      if (!entry_is_zero(x) && !entry_is_zero(m)) {
        if ((r + idx) % 2 == 0) {
          acc += x * m;
        } else {
          acc -= x * m;
        }
      }
      ++idx;
    }
    minor[s] = std::move(acc);
  }
  return minor.back();
}

}  // namespace detail

template <class T>
T det(const Mat<T>& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if constexpr (is_field<T>::value) {
    return detail::det_gauss(a);
  } else {
    return detail::det_laplace(a);
  }
}

template <class T>
Mat<T> map_entries(const Mat<T>& a, auto&& fn) {
  Mat<T> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = fn(a(i, j));
  }
  return out;
}

/// First entry (row-major) where a and b differ, as "(i,j): x vs y".
template <class T>
std::optional<std::string> first_difference(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
           std::to_string(b.rows()) + "x" + std::to_string(b.cols());
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + a(i, j).to_string() +
               " vs " + b(i, j).to_string();
      }
    }
  }
  return std::nullopt;
}

}  // namespace hecke
