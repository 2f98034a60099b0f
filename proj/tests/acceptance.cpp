#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "hecke/frobenius.hpp"
#include "hecke/heckealg.hpp"
#include "hecke/obstruction.hpp"
#include "hecke/regular3.hpp"
#include "hecke/symmetry.hpp"

using namespace hecke;

namespace {

// Returns an empty string on success, otherwise the first failure.
using Criterion = std::function<std::string()>;

std::string from_report(const Report& r) {
  const auto bad = r.first_failure();
  return bad ? bad->name + ": " + bad->detail : std::string();
}

std::string frobenius_suite(const HeckeSymmetry& S) {
  Report r;
  if (const auto h = check_hecke(S.matrix(), S.q()); !h) return "Hecke relation: " + h.witness;
  if (const auto b = check_braid(S.matrix(), S.dim()); !b) return "braid relation: " + b.witness;
  const FrobeniusProfile P = frobenius_profile(S);
  r.append(verify_upsilon(P, S));
  r.append(verify_frobenius(P, S));
  r.append(trace_report(P, S));
  r.append(verify_opposite(P, S));
  if (r.checks.empty()) return "no checks ran";
  return from_report(r);
}

MatrixF diag(std::initializer_list<Scalar> d) {
  MatrixF m = zeros<Scalar>(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (const auto& x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

std::string resultant_identity() {
  const ResultantCheck r = case1_resultant();
  if (const auto e = from_report(r.checks); !e.empty()) return e;
  const SymPoly& res = r.resultant;
  const auto exps = [&](int a, int b, int c) {
    std::vector<int> e(res.nvars(), 0);
    e[static_cast<std::size_t>(res.index_of("a"))] = a;
    e[static_cast<std::size_t>(res.index_of("b"))] = b;
    e[static_cast<std::size_t>(res.index_of("c"))] = c;
    return e;
  };
  if (res.coefficient(exps(8, 8, 8)) != Scalar(495)) return "coefficient of a^8b^8c^8";
  for (const auto& e : {exps(14, 5, 5), exps(5, 14, 5), exps(5, 5, 14)}) {
    if (res.coefficient(e) != Scalar(-24)) return "coefficient of a^5b^5c^5 times a 9th power";
  }
  return {};
}

std::string hessian_facts() {
  const HessianGroup H = hessian_group();
  const HessianReport r = conjugacy_report(H);
  if (H.G.size() != 216 || H.T.size() != 9 || H.Z.size() != 18) return "group orders";
  if (H.G.size() / H.Z.size() != 12) return "order of G/Z";
  int order2 = 0, order4 = 0;
  for (const auto& c : r.classes) {
    order2 += c.order == 2;
    order4 += c.order == 4;
  }
  if (order2 != 1 || order4 != 1) return "classes of order 2 and 4";
  const auto class_of = [&](const ProjectiveElement& g) {
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
      for (const auto idx : r.classes[k].members) {
        if (H.G[idx] == g) return static_cast<int>(k);
      }
    }
    return -1;
  };
  int cls = -1;
  for (const auto& t : H.T) {
    if (t == ProjectiveElement::identity()) continue;
    const int k = class_of(t);
    if (k < 0 || (cls >= 0 && k != cls)) return "nonidentity translations are not conjugate";
    cls = k;
  }
  return from_report(r.checks);
}

std::string frobenius_generic() {
  const FieldSpec F = FieldSpec::generic();
  const Scalar q = Scalar::q();
  for (int N : {2, 3}) {
    if (const auto e = frobenius_suite(dj_standard(N, F)); !e.empty()) return "N=" + std::to_string(N) + ": " + e;
  }
  const auto S = dj_standard(2, F);
  const FrobeniusProfile P = frobenius_profile(S);
  if (!equal(P.theta, diag({q * q, q}))) return "theta for N=2";
  if (!equal(P.psi, diag({-q, -Scalar(1) / q}))) return "psi for N=2";
  if (!equal(P.phi, diag({Scalar(-1), Scalar(-1)}))) return "phi for N=2";
  return {};
}

std::string root_of_unity() {
  const Scalar e = Scalar::zeta(3);
  return frobenius_suite(dj_standard(2, FieldSpec::cyclotomic(3, e)));
}

std::string reconstruction() {
  const auto S = dj_standard(3, FieldSpec::generic());
  const FrobeniusProfile P = frobenius_profile(S);
  const VectorF f = f_functional(P, S);
  const Reconstruction rec = reconstruct_from_f(f, P.upsilon[2], S.q(), 3);
  return equal(rec.R, S.matrix()) ? std::string() : "reconstructed R differs";
}

std::string case_checkers() {
  for (int id = 1; id <= 4; ++id) {
    const CaseReport r = verify_case(id);
    if (const auto e = from_report(r.checks); !e.empty()) return "case " + std::to_string(id) + ": " + e;
    if (!r.contradiction) return "case " + std::to_string(id) + ": no contradiction";
  }
  return {};
}

std::string negative() {
  const auto S = dj_standard(2, FieldSpec::generic());
  MatrixF R = S.matrix();
  R(1, 2) += Scalar(1);
  const auto b = check_braid(R, 2);
  if (b) return "perturbed matrix passes the braid check";
  if (b.witness.empty()) return "braid failure without a witness";
  if (is_regular(SklScalar{1, 1, 1})) return "(1,1,1) accepted as regular";
  return {};
}

struct Entry {
  int id;
  const char* name;
  double limit;  // seconds, 0 for none
  Criterion run;
};

}  // namespace

int main() {
  const Entry entries[] = {
      {1, "resultant identity", 30, resultant_identity},
      {2, "Hessian group facts", 30, hessian_facts},
      {3, "Hecke-algebra identities n<=5", 60, [] { return from_report(verify_identities(5, FieldSpec::generic())); }},
      {4, "Frobenius suite dj(2), dj(3)", 120, frobenius_generic},
      {5, "root-of-unity profile", 60, root_of_unity},
      {6, "reconstruction roundtrip", 0, reconstruction},
      {7, "case checkers", 120, case_checkers},
      {8, "negative tests", 0, negative},
  };
  int failed = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = e.run();
    } catch (const std::exception& ex) {
      err = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err.empty() && e.limit > 0 && secs > e.limit) err = "over the time limit";
    std::printf("%s  criterion %d  %s  (%.2fs)%s%s\n", err.empty() ? "PASS" : "FAIL", e.id, e.name, secs,
                err.empty() ? "" : "  ", err.c_str());
    failed += !err.empty();
  }
  return failed == 0 ? 0 : 1;
}
