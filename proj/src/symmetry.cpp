#include "hecke/symmetry.hpp"

#include <map>
#include <utility>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Eigen::Index g_max_tensor_dim = 243;

MatrixF flip_matrix(int N) {
  MatrixF P = zeros<Scalar>(N * N, N * N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) P(j * N + i, i * N + j) = Scalar(1);
  }
  return P;
}

RelationCheck first_nonzero(const MatrixF& m, const std::string& what) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (!m(r, c).is_zero()) {
        return {false, what + " entry (" + std::to_string(r) + "," + std::to_string(c) +
                           ") = " + m(r, c).to_string()};
      }
    }
  }
  return {};
}

MatrixF minus_scalar(MatrixF m, const Scalar& s) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) -= s;
  return m;
}

void add_scaled(MatrixF& acc, const Scalar& c, const MatrixF& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) acc(i, j) += c * m(i, j);
    }
  }
}

}  // namespace

Eigen::Index max_tensor_dim() { return g_max_tensor_dim; }
void set_max_tensor_dim(Eigen::Index cap) { g_max_tensor_dim = cap; }

Eigen::Index tensor_dim(int N, int n) {
  if (N < 1 || n < 0) throw InvalidArgument("tensor_dim: bad dimensions");
  Eigen::Index d = 1;
  for (int i = 0; i < n; ++i) {
    d *= N;
    if (d > g_max_tensor_dim) {
      throw SizeLimitExceeded("V^(x" + std::to_string(n) + ") with dim V = " + std::to_string(N) +
                              " exceeds the tensor size cap " + std::to_string(g_max_tensor_dim));
    }
  }
  return d;
}

RelationCheck check_hecke(const MatrixF& R, const Scalar& q) {
  if (R.rows() != R.cols()) return {false, "R is not square"};
  MatrixF plus = R;
  for (Eigen::Index i = 0; i < R.rows(); ++i) plus(i, i) += Scalar(1);
  return first_nonzero(multiply(minus_scalar(R, q), plus), "(R - q)(R + 1)");
}

MatrixF braid_residual(const MatrixF& R, int N) {
  const MatrixF I = identity<Scalar>(N);
  const MatrixF A = kronecker(R, I);
  const MatrixF B = kronecker(I, R);
  return multiply(multiply(A, B), A) - multiply(multiply(B, A), B);
}

RelationCheck check_braid(const MatrixF& R, int N) {
  if (R.rows() != N * N || R.cols() != N * N) return {false, "R has the wrong shape"};
  return first_nonzero(braid_residual(R, N), "braid difference");
}

HeckeSymmetry::HeckeSymmetry(int N, FieldSpec F, MatrixF R, std::string name)
    : N_(N), F_(std::move(F)), R_(std::move(R)), name_(std::move(name)) {
  if (N_ < 1) throw InvalidArgument("dim V must be positive");
  if (R_.rows() != N_ * N_ || R_.cols() != N_ * N_) {
    throw InvalidArgument("R must be " + std::to_string(N_ * N_) + "x" + std::to_string(N_ * N_));
  }
  if (F_.q.is_zero()) throw ValidationFailure("q must be nonzero");
  for (Eigen::Index j = 0; j < R_.cols(); ++j) {
    for (Eigen::Index i = 0; i < R_.rows(); ++i) F_.check(R_(i, j));
  }
  if (auto c = check_hecke(R_, F_.q); !c) throw ValidationFailure(name_ + ": Hecke relation fails: " + c.witness);
  if (auto c = check_braid(R_, N_); !c) throw ValidationFailure(name_ + ": braid relation fails: " + c.witness);
}

HeckeSymmetry dj_standard(int N, const FieldSpec& F) {
  MatrixF R = zeros<Scalar>(N * N, N * N);
  const Scalar& q = F.q;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const int col = i * N + j;
      if (i == j) {
        R(col, col) = q;
      } else if (i < j) {
        R(j * N + i, col) = q;
        R(col, col) = q - Scalar(1);
      } else {
        R(j * N + i, col) = Scalar(1);
      }
    }
  }
  return HeckeSymmetry(N, F, std::move(R), "dj_standard(" + std::to_string(N) + ")");
}

HeckeSymmetry flip(int N) {
  return HeckeSymmetry(N, FieldSpec::rational(Rational(1)), flip_matrix(N), "flip(" + std::to_string(N) + ")");
}

HeckeSymmetry scalar_symmetry(int N, const FieldSpec& F) {
  MatrixF R = identity<Scalar>(N * N);
  for (Eigen::Index i = 0; i < R.rows(); ++i) R(i, i) = F.q;
  return HeckeSymmetry(N, F, std::move(R), "scalar(" + std::to_string(N) + ")");
}

HeckeSymmetry dual_symmetry(const HeckeSymmetry& S) {
  return HeckeSymmetry(S.dim(), S.field(), S.matrix().transpose(), "dual(" + S.name() + ")");
}

HeckeSymmetry opposite(const HeckeSymmetry& S) {
  const MatrixF P = flip_matrix(S.dim());
  return HeckeSymmetry(S.dim(), S.field(), multiply(multiply(P, S.matrix()), P), "opposite(" + S.name() + ")");
}

HeckeSymmetry conjugate(const HeckeSymmetry& S, const MatrixF& tau) {
  if (tau.rows() != S.dim() || tau.cols() != S.dim()) throw InvalidArgument("conjugate: tau has the wrong shape");
  MatrixF inv;
  try {
    inv = inverse(tau);
  } catch (const DivisionByZero&) {
    throw InvalidArgument("conjugate: tau is singular");
  }
  const MatrixF R = multiply(multiply(kronecker(tau, tau), S.matrix()), kronecker(inv, inv));
  return HeckeSymmetry(S.dim(), S.field(), R, "conjugate(" + S.name() + ")");
}

HeckeSymmetry specialize_symmetry(const HeckeSymmetry& S, const FieldSpec& target) {
  if (S.field().kind != FieldSpec::Kind::ratfunc_q) {
    throw InvalidArgument("only symmetries over Q(q) can be specialized");
  }
  const MatrixF R = map_entries(S.matrix(), [&](const Scalar& x) { return specialize(x, target.q); });
  return HeckeSymmetry(S.dim(), target, R, S.name() + " at q = " + target.q.to_string());
}

Eigen::Index word_index(const std::vector<int>& word, int N) {
  Eigen::Index idx = 0;
  for (int w : word) {
    if (w < 1 || w > N) throw InvalidArgument("word letter out of range");
    idx = idx * N + (w - 1);
  }
  return idx;
}

std::vector<int> index_word(Eigen::Index idx, int N, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    w[static_cast<std::size_t>(p)] = static_cast<int>(idx % N) + 1;
    idx /= N;
  }
  return w;
}

MatrixF apply_generator(const HeckeSymmetry& S, int n, int i, const MatrixF& X) {
  const int N = S.dim();
  if (i < 1 || i >= n) throw InvalidArgument("generator index out of range");
  const Eigen::Index total = tensor_dim(N, n);
  if (X.rows() != total) throw InvalidArgument("apply_generator: row count is not N^n");
  Eigen::Index s = 1;
  for (int p = i + 1; p < n; ++p) s *= N;
  const Eigen::Index NN = N * N;
  const Eigen::Index block = NN * s;
  const Eigen::Index outer = total / block;

  std::vector<std::vector<std::pair<Eigen::Index, Scalar>>> cols(static_cast<std::size_t>(NN));
  for (Eigen::Index c = 0; c < NN; ++c) {
    for (Eigen::Index r = 0; r < NN; ++r) {
      if (!S.matrix()(r, c).is_zero()) cols[static_cast<std::size_t>(c)].emplace_back(r, S.matrix()(r, c));
    }
  }
  MatrixF out = zeros<Scalar>(total, X.cols());
  for (Eigen::Index col = 0; col < X.cols(); ++col) {
    for (Eigen::Index hi = 0; hi < outer; ++hi) {
      for (Eigen::Index lo = 0; lo < s; ++lo) {
        const Eigen::Index base = hi * block + lo;
        for (Eigen::Index m = 0; m < NN; ++m) {
          const Scalar& x = X(base + m * s, col);
          if (x.is_zero()) continue;
          for (const auto& [r, v] : cols[static_cast<std::size_t>(m)]) out(base + r * s, col) += v * x;
        }
      }
    }
  }
  return out;
}

MatrixF act(const HeckeElement& h, const HeckeSymmetry& S, int n, const MatrixF& X) {
  if (h.degree() > n) throw InvalidArgument("Hecke element degree exceeds the tensor power");
  // T_pi X = R_i (T_{tau_i pi} X) with i the smallest left descent of pi.
  std::map<Permutation, MatrixF> memo;
  memo.emplace(Permutation::identity(h.degree()), X);
  auto apply = [&](auto&& self, const Permutation& pi) -> const MatrixF& {
    auto it = memo.find(pi);
    if (it != memo.end()) return it->second;
    int i = 1;
    while (!pi.has_left_descent(i)) ++i;
    MatrixF r = apply_generator(S, n, i, self(self, pi.left_swap(i)));
    return memo.emplace(pi, std::move(r)).first->second;
  };
  MatrixF out = zeros<Scalar>(X.rows(), X.cols());
  for (const auto& [pi, c] : h.terms()) add_scaled(out, c, apply(apply, pi));
  return out;
}

VectorF act(const HeckeElement& h, const HeckeSymmetry& S, int n, const VectorF& x) {
  const MatrixF m = x;
  return act(h, S, n, m).col(0);
}

MatrixF rep_matrix(const HeckeElement& h, int n, const HeckeSymmetry& S) {
  return act(h, S, n, identity<Scalar>(tensor_dim(S.dim(), n)));
}

MatrixF generator_matrix(const HeckeSymmetry& S, int n, int i) {
  if (i < 1 || i >= n) throw InvalidArgument("generator index out of range");
  tensor_dim(S.dim(), n);
  const MatrixF left = identity<Scalar>(tensor_dim(S.dim(), i - 1));
  const MatrixF right = identity<Scalar>(tensor_dim(S.dim(), n - i - 1));
  return kronecker(kronecker(left, S.matrix()), right);
}

SubspaceF tensor_product(const SubspaceF& U, const SubspaceF& W) {
  const Eigen::Index amb = U.ambient() * W.ambient();
  if (U.dim() == 0 || W.dim() == 0) return SubspaceF::zero(amb);
  MatrixF rows(U.dim() * W.dim(), amb);
  for (Eigen::Index a = 0; a < U.dim(); ++a) {
    for (Eigen::Index b = 0; b < W.dim(); ++b) {
      rows.row(a * W.dim() + b) = kronecker(U.vector(a), W.vector(b)).transpose();
    }
  }
  return SubspaceF::from_rows(rows);
}

SubspaceF upsilon_step(const SubspaceF& prev, int m, const HeckeSymmetry& S) {
  const int N = S.dim();
  const Eigen::Index d = tensor_dim(N, m);
  if (m == 0) return SubspaceF::full(1);
  if (m == 1) return SubspaceF::full(N);
  if (m == 2) return image(minus_scalar(S.matrix(), S.q()));
  if (prev.ambient() * N != d) throw InvalidArgument("upsilon_step: previous space has the wrong degree");
  if (prev.dim() == 0) return SubspaceF::zero(d);
  const SubspaceF V = SubspaceF::full(N);
  return intersect(tensor_product(prev, V), tensor_product(V, prev));
}

SubspaceF upsilon(int n, const HeckeSymmetry& S) {
  tensor_dim(S.dim(), n);
  SubspaceF U;
  for (int m = 0; m <= n; ++m) U = upsilon_step(U, m, S);
  return U;
}

SubspaceF upsilon_direct(int n, const HeckeSymmetry& S) {
  const Eigen::Index d = tensor_dim(S.dim(), n);
  if (n <= 1) return SubspaceF::full(d);
  SubspaceF U = SubspaceF::full(d);
  for (int i = 1; i < n; ++i) U = intersect(U, image(minus_scalar(generator_matrix(S, n, i), S.q())));
  return U;
}

SubspaceF ideal_component(int n, const HeckeSymmetry& S) {
  if (n < 2) throw InvalidArgument("ideal components start in degree 2");
  const int N = S.dim();
  const Eigen::Index d = tensor_dim(N, n);
  const SubspaceF K = kernel(minus_scalar(S.matrix(), S.q()));
  SubspaceF I = SubspaceF::zero(d);
  for (int i = 1; i < n; ++i) {
    const SubspaceF left = SubspaceF::full(tensor_dim(N, i - 1));
    const SubspaceF right = SubspaceF::full(tensor_dim(N, n - i - 1));
    I = sum(I, tensor_product(tensor_product(left, K), right));
  }
  return I;
}

VectorF star(const VectorF& a, int k, const VectorF& b, int l, const HeckeSymmetry& S) {
  const int N = S.dim();
  if (a.size() != tensor_dim(N, k) || b.size() != tensor_dim(N, l)) {
    throw InvalidArgument("star: factor sizes do not match their degrees");
  }
  const VectorF ab = kronecker(a, b);
  const HeckeElement y = partial_y(k + l, {k, l}, PartialKind::left, S.field());
  const VectorF out = act(y, S, k + l, ab);
  if (!upsilon(k + l, S).contains(out)) throw InvalidArgument("star: product leaves Upsilon^(k+l)");
  return out;
}

}  // namespace hecke
