#include "hecke/frobenius.hpp"

#include <string>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Scalar sign(long e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); }

std::string diff(const MatrixF& a, const MatrixF& b) { return first_difference(a, b).value_or(""); }

std::string k_tag(int k) { return "k=" + std::to_string(k); }

Eigen::Index pivot_of(const VectorF& t) {
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    if (!t(i).is_zero()) return i;
  }
  throw InvalidArgument("zero tensor has no pivot");
}

MatrixF as_column(const VectorF& v) { return v; }

MatrixF scaled(const Scalar& c, MatrixF m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) m(i, j) *= c;
    }
  }
  return m;
}

/// Coefficient c with v = c t, checked.
Scalar multiple_of_t(const VectorF& v, const VectorF& t, Eigen::Index p) {
  const Scalar c = v(p) / t(p);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v(i) == c * t(i))) throw InconsistentSolve("vector is not a multiple of the top tensor");
  }
  return c;
}

/// Columns kron(a_i, b) for the columns a_i of A.
MatrixF kron_columns(const MatrixF& A, const VectorF& b) {
  MatrixF out(A.rows() * b.size(), A.cols());
  for (Eigen::Index j = 0; j < A.cols(); ++j) out.col(j) = kronecker(VectorF(A.col(j)), b);
  return out;
}

MatrixF kron_columns(const VectorF& a, const MatrixF& B) {
  MatrixF out(a.size() * B.rows(), B.cols());
  for (Eigen::Index j = 0; j < B.cols(); ++j) out.col(j) = kronecker(a, VectorF(B.col(j)));
  return out;
}

/// (-1)^(kn-k) q^(k(k+1)/2).
Scalar prop_constant(int k, int n, const Scalar& q) {
  return sign(static_cast<long>(k) * n - k) * pow(q, static_cast<long>(k) * (k + 1) / 2);
}

/// Value of the pairing y_{n/k,n-k}(u x w) = c t.
Scalar pair_vectors(const VectorF& u, int k, const VectorF& w, const FrobeniusProfile& P, const HeckeSymmetry& S) {
  const HeckeElement y = partial_y(P.n, {k, P.n - k}, PartialKind::left, S.field());
  return multiple_of_t(act(y, S, P.n, kronecker(u, w)), P.t, pivot_of(P.t));
}

/// t = sum_i U_i x W_i with U_i the echelon basis of Upsilon^(k): returns W as rows.
MatrixF split_top(const FrobeniusProfile& P, Eigen::Index left_dim, const SubspaceF& left) {
  const Eigen::Index right_dim = P.t.size() / left_dim;
  MatrixF T(left_dim, right_dim);
  for (Eigen::Index r = 0; r < left_dim; ++r) {
    for (Eigen::Index s = 0; s < right_dim; ++s) T(r, s) = P.t(r * right_dim + s);
  }
  return solve_unique(left.basis_columns(), T);
}

bool within_cap(int N, int n) {
  try {
    tensor_dim(N, n);
    return true;
  } catch (const SizeLimitExceeded&) {
    return false;
  }
}

}  // namespace

TopComponent top_component(const HeckeSymmetry& S, int n_max) {
  SubspaceF U = upsilon_step(SubspaceF(), 0, S);
  for (int n = 1; n <= n_max; ++n) {
    U = upsilon_step(U, n, S);
    if (U.dim() == 0) {
      throw NoTopComponent("Upsilon^(" + std::to_string(n) + ") vanishes before a one-dimensional component appears");
    }
    if (U.dim() != 1) continue;
    if (upsilon_step(U, n + 1, S).dim() != 0) continue;
    return {n, U.vector(0)};
  }
  throw NoTopComponent("no one-dimensional Upsilon^(n) followed by zero for n <= " + std::to_string(n_max));
}

MatrixF pairing(int k, const FrobeniusProfile& P, const HeckeSymmetry& S) {
  const int n = P.n;
  if (k < 0 || k > n) throw InvalidArgument("pairing degree out of range");
  const SubspaceF& U = P.upsilon[static_cast<std::size_t>(k)];
  const SubspaceF& W = P.upsilon[static_cast<std::size_t>(n - k)];
  if (U.dim() != W.dim()) {
    throw DegeneratePairing("dim Upsilon^(" + std::to_string(k) + ") != dim Upsilon^(" + std::to_string(n - k) + ")");
  }
  MatrixF X(P.t.size(), U.dim() * W.dim());
  for (Eigen::Index a = 0; a < U.dim(); ++a) {
    for (Eigen::Index b = 0; b < W.dim(); ++b) X.col(a * W.dim() + b) = kronecker(U.vector(a), W.vector(b));
  }
  const HeckeElement y = partial_y(n, {k, n - k}, PartialKind::left, S.field());
  const MatrixF Z = act(y, S, n, X);
  const Eigen::Index p = pivot_of(P.t);
  MatrixF B(U.dim(), W.dim());
  for (Eigen::Index a = 0; a < U.dim(); ++a) {
    for (Eigen::Index b = 0; b < W.dim(); ++b) B(a, b) = multiple_of_t(Z.col(a * W.dim() + b), P.t, p);
  }
  if (rank(B) != B.rows()) throw DegeneratePairing("beta_" + std::to_string(k) + " is singular");
  return B;
}

std::pair<MatrixF, MatrixF> theta(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  const int N = S.dim();
  const int n = P.n;
  const Eigen::Index p = pivot_of(P.t);
  const MatrixF I = identity<Scalar>(N);

  const MatrixF Z = act(HeckeElement::basis(cycle(n + 1, 1, n + 1), S.field()), S, n + 1, kron_columns(I, P.t));
  MatrixF th(N, N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) th(i, j) = Z(p * N + i, j) / P.t(p);
  }
  if (!equal(Z, kron_columns(P.t, th))) throw InconsistentSolve("T_{(n+1)->1}(v t) is not of the form t theta(v)");

  const MatrixF Zb = act(HeckeElement::basis(cycle(1, n + 1, n + 1), S.field()), S, n + 1, kron_columns(P.t, I));
  const Eigen::Index Nn = P.t.size();
  MatrixF tb(N, N);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) tb(i, j) = Zb(i * Nn + p, j) / P.t(p);
  }
  if (!equal(Zb, kron_columns(tb, P.t))) throw InconsistentSolve("T_{1->(n+1)}(t v) is not of the form theta_bar(v) t");
  return {th, tb};
}

MatrixF psi(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  const int N = S.dim();
  const Eigen::Index rest = P.t.size() / N;
  MatrixF Tm(rest, N), Sm(rest, N);
  for (int i = 0; i < N; ++i) {
    for (Eigen::Index r = 0; r < rest; ++r) {
      Tm(r, i) = P.t(i * rest + r);
      Sm(r, i) = P.t(r * N + i);
    }
  }
  try {
    return solve_unique(Tm, Sm).transpose();
  } catch (const InconsistentSolve&) {
    throw InconsistentSolve("t = sum t_i psi(x_i) has no unique solution");
  }
}

MatrixF phi(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  (void)S;
  const MatrixF& B1 = P.beta.at(1);
  const MatrixF& Bn1 = P.beta.at(static_cast<std::size_t>(P.n - 1));
  return solve_unique(MatrixF(B1.transpose()), Bn1);
}

VectorF f_functional(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  const Scalar c = qfact(P.n - 1, S.field());
  if (c.is_zero()) throw QFactorialVanishes("[" + std::to_string(P.n - 1) + "]!_q vanishes at q = " + S.q().to_string());
  const MatrixF Y = rep_matrix(antisymmetrizer(P.n, S.field()), P.n, S);
  const Eigen::Index p = pivot_of(P.t);
  VectorF f(Y.cols());
  for (Eigen::Index w = 0; w < Y.cols(); ++w) f(w) = multiple_of_t(Y.col(w), P.t, p) / c;
  return f;
}

FrobeniusProfile frobenius_profile(const HeckeSymmetry& S, int n_max) {
  FrobeniusProfile P;
  const TopComponent top = top_component(S, n_max);
  P.n = top.n;
  P.t = top.t;
  SubspaceF U;
  for (int k = 0; k <= P.n; ++k) {
    U = upsilon_step(U, k, S);
    P.upsilon.push_back(U);
  }
  for (int k = 0; k <= P.n; ++k) P.beta.push_back(pairing(k, P, S));
  std::tie(P.theta, P.theta_bar) = theta(P, S);
  P.psi = psi(P, S);
  P.phi = phi(P, S);
  if (!qfact(P.n - 1, S.field()).is_zero()) P.f = f_functional(P, S);
  return P;
}

MatrixF tensor_power(const MatrixF& A, int k) {
  MatrixF out = identity<Scalar>(1);
  for (int i = 0; i < k; ++i) out = kronecker(out, A);
  return out;
}

MatrixF restrict_to(const MatrixF& A, const SubspaceF& U) {
  MatrixF out(U.dim(), U.dim());
  for (Eigen::Index a = 0; a < U.dim(); ++a) {
    const auto c = U.coordinates(multiply(A, U.vector(a)));
    if (!c) throw InvalidArgument("subspace is not stable under the operator");
    out.col(a) = *c;
  }
  return out;
}

namespace {

Scalar trace_on(const MatrixF& A, int k, const FrobeniusProfile& P) {
  return trace(restrict_to(tensor_power(A, k), P.upsilon[static_cast<std::size_t>(k)]));
}

}  // namespace

std::vector<TraceRow> trace_table(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  const MatrixF xi = multiply(inverse(P.psi), P.theta);
  const MatrixF eta = multiply(P.psi, P.theta_bar);
  std::vector<TraceRow> rows;
  for (int k = 1; k <= P.n; ++k) {
    rows.push_back({k, trace_on(xi, k, P), trace_on(eta, k, P),
                    prop_constant(k, P.n, S.q()) * qbinom(P.n, k, S.field())});
  }
  return rows;
}

Report trace_report(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  Report rep;
  const int n = P.n;
  for (const TraceRow& r : trace_table(P, S)) {
    rep.add("trace of xi_k, " + k_tag(r.k), "tr (psi^-1 theta)^(xk)|Upsilon^(k) = (-1)^(kn-k) q^(k(k+1)/2) [n over k]_q",
            r.xi == r.expected, r.xi == r.expected ? "" : r.xi.to_string() + " vs " + r.expected.to_string());
    rep.add("trace of eta_k, " + k_tag(r.k), "tr (psi theta_bar)^(xk)|Upsilon^(k) = (-1)^(kn-k) q^(k(k+1)/2) [n over k]_q",
            r.eta == r.expected, r.eta == r.expected ? "" : r.eta.to_string() + " vs " + r.expected.to_string());
  }
  const MatrixF xi = multiply(inverse(P.psi), P.theta);
  for (int k = 0; k <= n; ++k) {
    rep.run("trace ratio, " + k_tag(k), "tr xi_(n-k) = q^((n-2k)(n+1)/2) tr xi_k", [&] {
      const Scalar lhs = trace_on(xi, n - k, P);
      const Scalar rhs = pow(S.q(), static_cast<long>(n - 2 * k) * (n + 1) / 2) * trace_on(xi, k, P);
      return lhs == rhs ? std::string() : lhs.to_string() + " vs " + rhs.to_string();
    });
  }
  return rep;
}

Report verify_frobenius(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  Report rep;
  const int N = S.dim();
  const int n = P.n;
  const Scalar& q = S.q();
  const FieldSpec& F = S.field();
  const MatrixF& th = P.theta;
  const MatrixF& tb = P.theta_bar;
  const MatrixF& ph = P.phi;
  const MatrixF& ps = P.psi;

  rep.run("theta_bar theta = q^(n+1) Id", "theta_bar = q^(n+1) theta^-1", [&] {
    const MatrixF expect = scaled(pow(q, n + 1), identity<Scalar>(N));
    if (auto w = diff(multiply(tb, th), expect); !w.empty()) return "theta_bar theta " + w;
    return diff(multiply(th, tb), expect);
  });
  rep.run("theta and phi commute", "theta phi = phi theta", [&] { return diff(multiply(th, ph), multiply(ph, th)); });
  rep.run("theta and psi commute", "theta psi = psi theta", [&] { return diff(multiply(th, ps), multiply(ps, th)); });
  rep.run("phi and psi commute", "phi psi = psi phi", [&] { return diff(multiply(ph, ps), multiply(ps, ph)); });
  rep.run("psi from phi and theta", "psi = q^(-n-1) phi theta^2",
          [&] { return diff(ps, scaled(pow(q, -(n + 1)), multiply(ph, multiply(th, th)))); });
  const std::pair<const char*, const MatrixF*> ops[] = {{"theta", &th}, {"phi", &ph}, {"psi", &ps}};
  for (const auto& [name, op] : ops) {
    rep.run(std::string(name) + " x " + name + " commutes with R", "chi x chi commutes with R", [&] {
      const MatrixF sq = kronecker(*op, *op);
      return diff(multiply(sq, S.matrix()), multiply(S.matrix(), sq));
    });
  }
  rep.run("theta^(xn) scales t", "theta^(xn)(t) = q^(n(n+1)/2) t", [&] {
    return diff(multiply(tensor_power(th, n), as_column(P.t)), scaled(pow(q, static_cast<long>(n) * (n + 1) / 2), as_column(P.t)));
  });

  for (int k = 0; k <= n; ++k) {
    const SubspaceF& Uk = P.upsilon[static_cast<std::size_t>(k)];
    rep.run("Nakayama automorphism is phi^(xk), " + k_tag(k), "beta_(n-k)(b, a) = beta_k(phi^(xk)(a), b)", [&] {
      const MatrixF Phik = restrict_to(tensor_power(ph, k), Uk);
      const MatrixF& Bk = P.beta[static_cast<std::size_t>(k)];
      return diff(P.beta[static_cast<std::size_t>(n - k)], multiply(MatrixF(Bk.transpose()), Phik));
    });
    if (k == 0) continue;
    rep.run("theta^(xk) nu = (psi theta_bar)^(xk) on Upsilon^(k), " + k_tag(k),
            "theta^(xk)(nu(a)) = (psi theta_bar)^(xk)(a)", [&] {
              const MatrixF B = Uk.basis_columns();
              return diff(multiply(tensor_power(multiply(th, ph), k), B), multiply(tensor_power(multiply(ps, tb), k), B));
            });
  }

  for (int k = 1; k <= 2; ++k) {
    const std::string tag = k_tag(k);
    if (!within_cap(N, k + n)) {
      rep.skip("T_rho moves V^(xk) past t, " + tag, "T_rho(u t) = t theta^(xk)(u)", "V^(x(k+n)) exceeds the size cap");
      rep.skip("T_rho^-1 moves V^(xk) past t, " + tag, "T_rho^-1(t u) = theta_bar^(xk)(u) t", "V^(x(k+n)) exceeds the size cap");
      continue;
    }
    const Permutation rho = longest_rho(k, n);
    const MatrixF I = identity<Scalar>(tensor_dim(N, k));
    rep.run("T_rho moves V^(xk) past t, " + tag, "T_rho(u t) = t theta^(xk)(u)", [&] {
      const MatrixF Z = act(HeckeElement::basis(rho, F), S, k + n, kron_columns(I, P.t));
      return diff(Z, kron_columns(P.t, tensor_power(th, k)));
    });
    rep.run("T_rho^-1 moves V^(xk) past t, " + tag, "T_rho^-1(t u) = theta_bar^(xk)(u) t", [&] {
      const MatrixF Z = act(HeckeElement::basis(rho.inverse(), F), S, k + n, kron_columns(P.t, I));
      return diff(Z, kron_columns(tensor_power(tb, k), P.t));
    });
  }

  for (int k = 1; k <= std::min(2, n); ++k) {
    const std::string tag = k_tag(k);
    const SubspaceF& Uk = P.upsilon[static_cast<std::size_t>(k)];
    const SubspaceF& Wk = P.upsilon[static_cast<std::size_t>(n - k)];
    const Scalar C = prop_constant(k, n, q);
    rep.run("theta^(xk) from the pairing, " + tag, "theta^(xk)(a) = C sum beta_k(a, w_i) psi^(xk)(u_i)", [&] {
      const MatrixF W = split_top(P, tensor_dim(N, k), Uk);
      const MatrixF psik = tensor_power(ps, k);
      for (Eigen::Index i = 0; i < W.rows(); ++i) {
        if (!Wk.contains(VectorF(W.row(i).transpose()))) return std::string("w_i outside Upsilon^(n-k)");
      }
      for (Eigen::Index a = 0; a < Uk.dim(); ++a) {
        VectorF expect = VectorF::Constant(Uk.ambient(), Scalar(0));
        for (Eigen::Index i = 0; i < W.rows(); ++i) {
          const Scalar b = pair_vectors(Uk.vector(a), k, W.row(i).transpose(), P, S);
          expect += (C * b) * multiply(psik, Uk.vector(i));
        }
        const VectorF got = multiply(tensor_power(th, k), Uk.vector(a));
        if (auto w = diff(as_column(got), as_column(expect)); !w.empty()) return "basis vector " + std::to_string(a) + " " + w;
      }
      return std::string();
    });
    rep.run("theta_bar^(xk) from the pairing, " + tag, "theta_bar^(xk)(a) = C sum beta_(n-k)(w_i, a) u_i", [&] {
      const MatrixF W = split_top(P, tensor_dim(N, k), Uk);
      for (Eigen::Index a = 0; a < Uk.dim(); ++a) {
        VectorF expect = VectorF::Constant(Uk.ambient(), Scalar(0));
        for (Eigen::Index i = 0; i < W.rows(); ++i) {
          const Scalar b = pair_vectors(W.row(i).transpose(), n - k, Uk.vector(a), P, S);
          expect += (C * b) * Uk.vector(i);
        }
        const VectorF got = multiply(tensor_power(tb, k), Uk.vector(a));
        if (auto w = diff(as_column(got), as_column(expect)); !w.empty()) return "basis vector " + std::to_string(a) + " " + w;
      }
      return std::string();
    });
    rep.run("twisted splitting of t, " + tag, "t = sum u_i w_i = sum w_i psi^(xk)(u_i)", [&] {
      const MatrixF W = split_top(P, tensor_dim(N, k), Uk);
      const MatrixF psik = tensor_power(ps, k);
      VectorF sum = VectorF::Constant(P.t.size(), Scalar(0));
      for (Eigen::Index i = 0; i < W.rows(); ++i) sum += kronecker(VectorF(W.row(i).transpose()), multiply(psik, Uk.vector(i)));
      return diff(as_column(sum), as_column(P.t));
    });
  }

  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    const Scalar lambda = ps(0, 0).is_zero() ? Scalar() : th(0, 0) / ps(0, 0);
    if (!lambda.is_zero() && equal(th, scaled(lambda, ps))) {
      rep.add("scalar theta/psi ratio", "theta = lambda psi with n = 2m+1 forces lambda = q^(m+1)",
              lambda == pow(q, m + 1), lambda.to_string() + " vs " + pow(q, m + 1).to_string());
    } else {
      rep.skip("scalar theta/psi ratio", "theta = lambda psi with n = 2m+1 forces lambda = q^(m+1)",
               "theta is not a scalar multiple of psi");
    }
  } else {
    rep.skip("scalar theta/psi ratio", "theta = lambda psi with n = 2m+1 forces lambda = q^(m+1)", "n is even");
  }

  if (!P.f) {
    const std::string why = "[n-1]!_q = 0, so f is unavailable";
    for (const char* name : {"f(t) = [n]_q", "f is twisted cyclic", "ker f = ker y_n", "theta from f", "theta_bar from f"}) {
      rep.skip(name, "y_n u = [n-1]!_q f(u) t", why);
    }
  } else {
    const VectorF& f = *P.f;
    const Eigen::Index rest = P.t.size() / N;
    auto f_of = [&](const VectorF& u) {
      Scalar s;
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (!u(i).is_zero() && !f(i).is_zero()) s += f(i) * u(i);
      }
      return s;
    };
    auto t_i = [&](int i) { return VectorF(P.t.segment(i * rest, rest)); };
    rep.run("f(t) = [n]_q", "f(t) = [n]_q", [&] {
      const Scalar v = f_of(P.t);
      return v == qint(n, F) ? std::string() : v.to_string() + " vs " + qint(n, F).to_string();
    });
    rep.run("f is twisted cyclic", "f(w v) = f(phi(v) w)", [&] {
      for (Eigen::Index w = 0; w < rest; ++w) {
        for (int j = 0; j < N; ++j) {
          Scalar rhs;
          for (int c = 0; c < N; ++c) rhs += ph(c, j) * f(c * rest + w);
          if (!(f(w * N + j) == rhs)) {
            return "word " + std::to_string(w) + ", v = e_" + std::to_string(j + 1) + ": " + f(w * N + j).to_string() +
                   " vs " + rhs.to_string();
          }
        }
      }
      return std::string();
    });
    rep.run("ker f = ker y_n", "Ker f = {u | y_n u = 0}", [&] {
      MatrixF frow(1, f.size());
      frow.row(0) = f.transpose();
      const SubspaceF kf = kernel(frow);
      const SubspaceF ky = kernel(rep_matrix(antisymmetrizer(n, F), n, S));
      return kf == ky ? std::string() : "kernel dimensions " + std::to_string(kf.dim()) + " vs " + std::to_string(ky.dim());
    });
    const Scalar c = sign(n - 1) * q;
    rep.run("theta from f", "theta(v) = (-1)^(n-1) q sum f(v t_i) psi(x_i)", [&] {
      MatrixF expect = zeros<Scalar>(N, N);
      for (int v = 0; v < N; ++v) {
        for (int i = 0; i < N; ++i) {
          const Scalar fv = f_of(kronecker(VectorF(identity<Scalar>(N).col(v)), t_i(i)));
          if (!fv.is_zero()) expect.col(v) += (c * fv) * VectorF(ps.col(i));
        }
      }
      return diff(th, expect);
    });
    rep.run("theta_bar from f", "theta_bar(v) = (-1)^(n-1) q sum f(t_i v) x_i", [&] {
      MatrixF expect = zeros<Scalar>(N, N);
      for (int v = 0; v < N; ++v) {
        for (int i = 0; i < N; ++i) expect(i, v) = c * f_of(kronecker(t_i(i), VectorF(identity<Scalar>(N).col(v))));
      }
      return diff(tb, expect);
    });
  }

  rep.append(trace_report(P, S));
  return rep;
}

Report verify_opposite(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  Report rep;
  const HeckeSymmetry Sop = opposite(S);
  FrobeniusProfile Q;
  try {
    Q = frobenius_profile(Sop, P.n);
  } catch (const Error& e) {
    rep.add("opposite symmetry has a profile", "R^op = tau R tau", false, e.what());
    return rep;
  }
  rep.add("opposite symmetry has the same top degree", "R^op = tau R tau", Q.n == P.n,
          std::to_string(Q.n) + " vs " + std::to_string(P.n));
  rep.run("phi changes to phi^-1", "R -> R^op sends phi to phi^-1", [&] { return diff(Q.phi, inverse(P.phi)); });
  rep.run("psi changes to psi^-1", "R -> R^op sends psi to psi^-1", [&] { return diff(Q.psi, inverse(P.psi)); });
  rep.run("theta changes to theta_bar", "R -> R^op sends theta to theta_bar", [&] { return diff(Q.theta, P.theta_bar); });
  return rep;
}

Report verify_upsilon(const FrobeniusProfile& P, const HeckeSymmetry& S) {
  Report rep;
  const int N = S.dim();
  const int n = P.n;
  const FieldSpec& F = S.field();
  auto ups = [&](int k) -> SubspaceF {
    if (k <= n) return P.upsilon[static_cast<std::size_t>(k)];
    return upsilon(k, S);
  };

  for (int k = 2; k <= n + 1 && within_cap(N, k); ++k) {
    rep.run("recursive and direct Upsilon agree, " + k_tag(k), "Upsilon^(k) = intersection of Im(T_i - q)",
            [&] { return upsilon_direct(k, S) == ups(k) ? std::string() : "subspaces differ"; });
  }
  rep.run("top component", "dim Upsilon^(n) = 1 and Upsilon^(n+1) = 0", [&] {
    if (P.upsilon.back().dim() != 1) return std::string("dim Upsilon^(n) != 1");
    if (within_cap(N, n + 1) && upsilon(n + 1, S).dim() != 0) return std::string("Upsilon^(n+1) != 0");
    return std::string();
  });
  for (int k = 0; k <= n; ++k) {
    rep.add("complementary dimensions agree, " + k_tag(k), "dim Upsilon^(k) = dim Upsilon^(n-k)",
            ups(k).dim() == ups(n - k).dim(),
            std::to_string(ups(k).dim()) + " vs " + std::to_string(ups(n - k).dim()));
  }

  for (int total = 2; total <= n + 1 && within_cap(N, total); ++total) {
    const SubspaceF top = ups(total);
    for (int k = 1; k < total; ++k) {
      const int l = total - k;
      const std::string tag = "k=" + std::to_string(k) + ", l=" + std::to_string(l);
      const SubspaceF Ukl = tensor_product(ups(k), ups(l));
      rep.add("Upsilon^(k+l) lies in Upsilon^(k) x Upsilon^(l), " + tag, "Upsilon^(k+l) in Upsilon^(k,l)",
              Ukl.contains(top));
      if (Ukl.dim() == 0) continue;
      const MatrixF B = Ukl.basis_columns();
      rep.run("T_c maps Upsilon^(k,l) into Upsilon^(k-1,l) x V, " + tag, "T_c Upsilon^(k,l) in Upsilon^(k-1,l) x V", [&] {
        const MatrixF Z = act(HeckeElement::basis(cycle(total, k, total), F), S, total, B);
        const SubspaceF target = tensor_product(tensor_product(ups(k - 1), ups(l)), SubspaceF::full(N));
        return target.contains(SubspaceF::from_columns(Z)) ? std::string() : "image leaves the target";
      });
      rep.run("T_rho maps Upsilon^(k,l) into Upsilon^(l,k), " + tag, "T_rho Upsilon^(k,l) in Upsilon^(l,k)", [&] {
        const MatrixF Z = act(HeckeElement::basis(longest_rho(k, l), F), S, total, B);
        return tensor_product(ups(l), ups(k)).contains(SubspaceF::from_columns(Z)) ? std::string() : "image leaves Upsilon^(l,k)";
      });
      rep.run("y_{k+l/k,l} maps Upsilon^(k,l) into Upsilon^(k+l), " + tag, "y_{k+l/k,l} Upsilon^(k,l) in Upsilon^(k+l)", [&] {
        const MatrixF Z = act(partial_y(total, {k, l}, PartialKind::left, F), S, total, B);
        return top.contains(SubspaceF::from_columns(Z)) ? std::string() : "image leaves Upsilon^(k+l)";
      });
    }
  }

  for (int k = 1; k <= n; ++k) {
    const std::string tag = k_tag(k);
    const char* anchor = "y_{n/k,n-k} u = (-1)^(kn-k) q^(-k(k+1)/2) T_rho u on Upsilon^(k) x t";
    const char* mirror = "shift(y_{n/n-k,k}, k) u = (-1)^(kn-k) q^(-k(k+1)/2) T_rho^-1 u on t x Upsilon^(k)";
    if (!within_cap(N, k + n)) {
      rep.skip("antisymmetrizer acts as T_rho past t, " + tag, anchor, "V^(x(k+n)) exceeds the size cap");
      rep.skip("shifted antisymmetrizer acts as T_rho^-1 past t, " + tag, mirror, "V^(x(k+n)) exceeds the size cap");
      continue;
    }
    const Scalar Cinv = prop_constant(k, n, S.q()).inverse();
    const Permutation rho = longest_rho(k, n);
    const MatrixF Uk = ups(k).basis_columns();
    rep.run("antisymmetrizer acts as T_rho past t, " + tag, anchor, [&] {
      const MatrixF X = kron_columns(Uk, P.t);
      const MatrixF lhs = act(partial_y(n, {k, n - k}, PartialKind::left, F), S, k + n, X);
      const MatrixF rhs = scaled(Cinv, act(HeckeElement::basis(rho, F), S, k + n, X));
      return diff(lhs, rhs);
    });
    rep.run("shifted antisymmetrizer acts as T_rho^-1 past t, " + tag, mirror, [&] {
      const MatrixF X = kron_columns(P.t, Uk);
      const MatrixF lhs = act(shift_element(partial_y(n, {n - k, k}, PartialKind::left, F), k), S, k + n, X);
      const MatrixF rhs = scaled(Cinv, act(HeckeElement::basis(rho.inverse(), F), S, k + n, X));
      return diff(lhs, rhs);
    });
  }

  for (int k = 0; k <= n; ++k) {
    rep.run("t splits over complementary bases, " + k_tag(k), "t = w_1 u_1 + ... + w_d u_d", [&] {
      const SubspaceF& W = P.upsilon[static_cast<std::size_t>(n - k)];
      const MatrixF Ucoef = split_top(P, W.ambient(), W);
      if (rank(Ucoef) != ups(k).dim()) return std::string("u_i are not a basis");
      for (Eigen::Index i = 0; i < Ucoef.rows(); ++i) {
        if (!ups(k).contains(VectorF(Ucoef.row(i).transpose()))) return std::string("u_i outside Upsilon^(k)");
      }
      return std::string();
    });
  }

  rep.run("antisymmetrizers generate Upsilon", "y_k V^(xk) = Upsilon^(k) for k <= n", [&] {
    for (int k = 0; k <= n; ++k) {
      const SubspaceF img = image(rep_matrix(antisymmetrizer(k, F), k, S));
      if (!(img == ups(k))) return "degree " + std::to_string(k) + ": image has dimension " + std::to_string(img.dim());
    }
    return std::string();
  });
  if (n == 3 && N > 1) {
    rep.run("y_3 acts nonzero", "dim V > 1 and dim Upsilon^(3) = 1 imply y_3 V^(x3) != 0",
            [&] { return all_zero(rep_matrix(antisymmetrizer(3, F), 3, S)) ? std::string("y_3 acts as zero") : std::string(); });
  }
  return rep;
}

std::vector<DimensionRow> dimension_probe(const HeckeSymmetry& S, int k_max) {
  std::vector<DimensionRow> rows;
  SubspaceF U;
  for (int k = 0; k <= k_max && within_cap(S.dim(), k); ++k) {
    U = upsilon_step(U, k, S);
    const Eigen::Index total = tensor_dim(S.dim(), k);
    const Eigen::Index ideal = k < 2 ? 0 : ideal_component(k, S).dim();
    rows.push_back({k, U.dim(), total - ideal});
  }
  return rows;
}

Reconstruction reconstruct_from_f(const VectorF& f, const SubspaceF& relations, const Scalar& q, int N) {
  if (q == Scalar(-1)) throw InvalidArgument("reconstruction needs q != -1");
  const Eigen::Index NN = static_cast<Eigen::Index>(N) * N;
  if (f.size() != NN * N || relations.ambient() != NN) throw InvalidArgument("f must live on V^(x3) and relations in V^(x2)");
  const Eigen::Index d = relations.dim();
  if (d != N) throw DegeneratePairing("the relation space must have dimension dim V");
  // G(a, j) = f(e_a t_j).
  MatrixF G(N, d);
  for (int a = 0; a < N; ++a) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Scalar s;
      for (Eigen::Index r = 0; r < NN; ++r) s += f(a * NN + r) * relations.basis()(j, r);
      G(a, j) = s;
    }
  }
  MatrixF Xt;
  try {
    Xt = inverse(MatrixF(G.transpose()));
  } catch (const DivisionByZero&) {
    throw DegeneratePairing("the pairing of V with the relations via f is degenerate");
  }
  MatrixF P = zeros<Scalar>(NN, NN);
  for (Eigen::Index w = 0; w < NN; ++w) {
    for (Eigen::Index i = 0; i < d; ++i) {
      Scalar c;
      for (int a = 0; a < N; ++a) c += Xt(a, i) * f(a * NN + w);
      if (!c.is_zero()) P.col(w) += c * VectorF(relations.basis().row(i).transpose());
    }
  }
  if (!equal(multiply(P, P), P)) throw InconsistentSolve("reconstructed P is not idempotent");
  if (!(image(P) == relations)) throw InconsistentSolve("reconstructed P does not project onto the relations");
  MatrixF R = scaled(-(Scalar(1) + q), P);
  for (Eigen::Index i = 0; i < NN; ++i) R(i, i) += q;
  return {P, R};
}

}  // namespace hecke
