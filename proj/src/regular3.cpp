#include "hecke/regular3.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace hecke {

namespace {

Scalar eps() { return Scalar::zeta(3); }

Scalar eps_pow(int k) { return eps().pow(detail::mod3(k)); }

Scalar cube(const Scalar& x) { return x * x * x; }

VectorF normalized_point(VectorF v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) {
      const Scalar s = v(i).inverse();
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) *= s;
      return v;
    }
  }
  throw InvalidArgument("zero vector is not a projective point");
}

std::string point_key(const VectorF& v) {
  std::string k;
  for (Eigen::Index i = 0; i < v.size(); ++i) k += v(i).as_cyclo(3).to_string() + ";";
  return k;
}

VectorF point(const Scalar& x, const Scalar& y, const Scalar& z) {
  VectorF v(3);
  v << x, y, z;
  return normalized_point(v);
}

MatrixF cube_power(const MatrixF& m) { return kronecker(kronecker(m, m), m); }

}  // namespace

const Poly3::Vars& cubic_vars() {
  static const Poly3::Vars vars =
      std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"x1", "x2", "x3"});
  return vars;
}

Poly3 symmetric_image(const VectorF& v) {
  if (v.size() != 27) throw InvalidArgument("symmetric_image: expected a vector in V^(x3), dim V = 3");
  Poly3::Terms terms;
  for (Eigen::Index k = 0; k < 27; ++k) {
    if (v(k).is_zero()) continue;
    Poly3::Exponents e(3, 0);
    ++e[static_cast<std::size_t>(k / 9)];
    ++e[static_cast<std::size_t>((k / 3) % 3)];
    ++e[static_cast<std::size_t>(k % 3)];
    auto [it, inserted] = terms.emplace(e, v(k));
    if (!inserted) it->second += v(k);
  }
  return Poly3::from_terms(cubic_vars(), std::move(terms));
}

Poly3 skl_symmetric_image(const SklScalar& p) { return symmetric_image(skl_tensor(p)); }

VectorF alternating_tensor() {
  VectorF v = VectorF::Constant(27, Scalar(0));
  for (int i = 0; i < 3; ++i) {
    v(word3(i - 1, i, i + 1)) += Scalar(1);
    v(word3(i + 1, i, i - 1)) -= Scalar(1);
  }
  return v;
}

std::pair<VectorF, VectorF> skl_split(const SklScalar& p) {
  const VectorF t = skl_tensor(p);
  const Scalar half_diff = (p.a - p.b) / Scalar(2);
  VectorF minus = alternating_tensor();
  for (Eigen::Index k = 0; k < 27; ++k) minus(k) *= half_diff;
  VectorF plus = t;
  for (Eigen::Index k = 0; k < 27; ++k) plus(k) -= minus(k);
  return {plus, minus};
}

bool is_regular(const SklScalar& p) {
  const int nonzero = (p.a.is_zero() ? 0 : 1) + (p.b.is_zero() ? 0 : 1) + (p.c.is_zero() ? 0 : 1);
  if (nonzero < 2) return false;
  const Scalar a3 = cube(p.a), b3 = cube(p.b), c3 = cube(p.c);
  return !(a3 == b3 && b3 == c3);
}

bool is_type_A(const SklScalar& p) {
  if (!is_regular(p)) return false;
  if ((p.a * p.b * p.c).is_zero()) return false;
  const Scalar a3 = cube(p.a), b3 = cube(p.b), c3 = cube(p.c);
  return cube(a3 + b3 + c3) != Scalar(27) * a3 * b3 * c3;
}

std::pair<MultiPoly<Scalar>, MultiPoly<Scalar>> pencil_discriminant_forms() {
  using P = MultiPoly<Scalar>;
  const auto vars = std::make_shared<const std::vector<std::string>>(std::vector<std::string>{"a", "b", "c"});
  const P a = P::variable(vars, 0), b = P::variable(vars, 1), c = P::variable(vars, 2);
  const P a3 = a * a * a, b3 = b * b * b, c3 = c * c * c;
  const P s = a3 + b3 + c3;
  const P lhs = s * s * s - P(Scalar(27)) * a3 * b3 * c3;
  P rhs = P::constant(vars, Scalar(1));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) rhs = rhs * (a.scaled(eps_pow(i)) + b.scaled(eps_pow(j)) + c);
  }
  return {lhs, rhs};
}

ProjectiveElement::ProjectiveElement(const MatrixF& m) : m_(m) {
  if (m.rows() != 3 || m.cols() != 3) throw InvalidArgument("projective element must be 3x3");
  if (determinant(m).is_zero()) throw InvalidArgument("projective element must be invertible");
  Scalar lead;
  bool found = false;
  for (Eigen::Index r = 0; r < 3 && !found; ++r) {
    for (Eigen::Index c = 0; c < 3 && !found; ++c) {
      if (!m(r, c).is_zero()) {
        lead = m(r, c);
        found = true;
      }
    }
  }
  const Scalar s = lead.inverse();
  for (Eigen::Index r = 0; r < 3; ++r) {
    for (Eigen::Index c = 0; c < 3; ++c) {
      m_(r, c) = m(r, c) * s;
      key_ += m_(r, c).as_cyclo(3).to_string() + ";";
    }
  }
}

ProjectiveElement ProjectiveElement::identity() { return ProjectiveElement(hecke::identity<Scalar>(3)); }

ProjectiveElement ProjectiveElement::inverse() const { return ProjectiveElement(hecke::inverse(m_)); }

int ProjectiveElement::order() const {
  const ProjectiveElement one = identity();
  ProjectiveElement x = *this;
  for (int k = 1; k <= 1000; ++k) {
    if (x == one) return k;
    x = x * *this;
  }
  throw ValidationFailure("projective element has order above 1000");
}

ProjectiveElement operator*(const ProjectiveElement& x, const ProjectiveElement& y) {
  return ProjectiveElement(multiply(x.m_, y.m_));
}

MatrixF cyclic_shift() {
  MatrixF m = zeros<Scalar>(3, 3);
  m(1, 0) = m(2, 1) = m(0, 2) = Scalar(1);
  return m;
}

MatrixF diagonal3(const Scalar& d1, const Scalar& d2, const Scalar& d3) {
  MatrixF m = zeros<Scalar>(3, 3);
  m(0, 0) = d1;
  m(1, 1) = d2;
  m(2, 2) = d3;
  return m;
}

MatrixF swap12() {
  MatrixF m = zeros<Scalar>(3, 3);
  m(1, 0) = m(0, 1) = m(2, 2) = Scalar(1);
  return m;
}

MatrixF fourier3() {
  MatrixF m(3, 3);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) m(i - 1, j - 1) = eps_pow(i * j);
  }
  return m;
}

std::vector<ProjectiveElement> hessian_generators() {
  return {ProjectiveElement(cyclic_shift()), ProjectiveElement(diagonal3(eps(), eps_pow(2), Scalar(1))),
          ProjectiveElement(diagonal3(eps(), Scalar(1), Scalar(1))), ProjectiveElement(swap12()),
          ProjectiveElement(fourier3())};
}

std::vector<ProjectiveElement> group_closure(const std::vector<ProjectiveElement>& gens) {
  std::vector<ProjectiveElement> elems{ProjectiveElement::identity()};
  std::unordered_map<std::string, std::size_t> seen{{elems[0].key(), 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      ProjectiveElement x = elems[i] * g;
      if (seen.emplace(x.key(), elems.size()).second) elems.push_back(std::move(x));
    }
    if (elems.size() > 100000) throw SizeLimitExceeded("group closure exceeds 100000 elements");
  }
  return elems;
}

HessianGroup hessian_group() {
  const auto gens = hessian_generators();
  HessianGroup H;
  H.G = group_closure(gens);
  H.T = group_closure({gens[0], gens[1]});
  H.Z = group_closure({gens[0], gens[1], gens[3]});
  auto expect = [](const char* what, std::size_t got, std::size_t want) {
    if (got != want) {
      throw ValidationFailure(std::string(what) + " has order " + std::to_string(got) + ", expected " +
                              std::to_string(want));
    }
  };
  expect("Hessian group", H.G.size(), 216);
  expect("translation subgroup", H.T.size(), 9);
  expect("translations with the swap", H.Z.size(), 18);
  return H;
}

std::vector<ConjugacyClass> conjugacy_classes(const std::vector<ProjectiveElement>& G,
                                              const std::vector<ProjectiveElement>& gens) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < G.size(); ++i) index.emplace(G[i].key(), i);
  std::vector<ProjectiveElement> inv;
  for (const auto& g : gens) inv.push_back(g.inverse());
  std::vector<int> cls(G.size(), -1);
  std::vector<ConjugacyClass> out;
  for (std::size_t s = 0; s < G.size(); ++s) {
    if (cls[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    ConjugacyClass c;
    c.order = G[s].order();
    std::deque<std::size_t> queue{s};
    cls[s] = id;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      c.members.push_back(x);
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const ProjectiveElement y = gens[g] * G[x] * inv[g];
        const auto it = index.find(y.key());
        if (it == index.end()) throw ValidationFailure("conjugate leaves the group");
        if (cls[it->second] < 0) {
          cls[it->second] = id;
          queue.push_back(it->second);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::map<int, int> order_census(const std::vector<ProjectiveElement>& G) {
  std::map<int, int> census;
  for (const auto& g : G) ++census[g.order()];
  return census;
}

HessianReport conjugacy_report(const HessianGroup& H) {
  HessianReport out;
  out.order_G = H.G.size();
  out.order_T = H.T.size();
  out.order_Z = H.Z.size();
  const auto gens = hessian_generators();
  out.classes = conjugacy_classes(H.G, gens);
  out.census = order_census(H.G);
  Report& r = out.checks;

  r.add("Hessian group has order 216", "Hessian group order", out.order_G == 216,
        "order " + std::to_string(out.order_G));
  r.add("translation subgroup T has order 9", "normal subgroup of order 9", out.order_T == 9,
        "order " + std::to_string(out.order_T));
  r.add("Z = <T, swap> has order 18", "subgroup Z of order 18", out.order_Z == 18,
        "order " + std::to_string(out.order_Z));
  r.add("G/Z has order 12", "quotient by Z", out.order_G == 12 * out.order_Z);

  std::set<std::string> tkeys;
  for (const auto& t : H.T) tkeys.insert(t.key());
  r.run("T is normal in G", "T normal with quotient SL2(F3)", [&]() -> std::string {
    for (const auto& g : gens) {
      const ProjectiveElement gi = g.inverse();
      for (const auto& t : H.T) {
        if (!tkeys.count((g * t * gi).key())) return "conjugate of a translation leaves T";
      }
    }
    return {};
  });
  r.add("G/T has order 24", "T normal with quotient SL2(F3)", out.order_G == 24 * out.order_T);

  r.run("element orders lie in {1,2,3,4,6,9,12}", "element orders", [&]() -> std::string {
    static const std::set<int> allowed{1, 2, 3, 4, 6, 9, 12};
    for (const auto& [ord, cnt] : out.census) {
      if (!allowed.count(ord)) return "element of order " + std::to_string(ord);
    }
    return {};
  });

  auto classes_of_order = [&](int ord) {
    int n = 0;
    for (const auto& c : out.classes) n += c.order == ord ? 1 : 0;
    return n;
  };
  r.add("elements of order 2 form one class", "involutions conjugate", classes_of_order(2) == 1,
        std::to_string(classes_of_order(2)) + " classes");
  r.add("elements of order 4 form one class", "order-4 elements conjugate", classes_of_order(4) == 1,
        std::to_string(classes_of_order(4)) + " classes");

  r.run("the 8 nonidentity translations form one class", "translations conjugate", [&]() -> std::string {
    const std::string one = ProjectiveElement::identity().key();
    std::set<std::string> nontrivial;
    for (const auto& t : H.T) {
      if (t.key() != one) nontrivial.insert(t.key());
    }
    for (const auto& c : out.classes) {
      if (!nontrivial.count(H.G[c.members.front()].key())) continue;
      std::set<std::string> members;
      for (auto m : c.members) members.insert(H.G[m].key());
      if (members != nontrivial) return "class of size " + std::to_string(members.size());
      return {};
    }
    return "no class contains a translation";
  });

  r.run("every element permutes the 9 inflection points", "G permutes the 9 points", [&]() -> std::string {
    for (std::size_t i = 0; i < H.G.size(); ++i) {
      if (!permutes_inflection_points(H.G[i].matrix())) return "element " + std::to_string(i);
    }
    return {};
  });
  return out;
}

std::array<VectorF, 3> parameter_basis() {
  return {skl_tensor(SklScalar{Scalar(1), Scalar(0), Scalar(0)}),
          skl_tensor(SklScalar{Scalar(0), Scalar(1), Scalar(0)}),
          skl_tensor(SklScalar{Scalar(0), Scalar(0), Scalar(1)})};
}

MatrixF action_on_parameters(const MatrixF& tau) {
  if (tau.rows() != 3 || tau.cols() != 3) throw InvalidArgument("action_on_parameters: tau must be 3x3");
  const auto w = parameter_basis();
  MatrixF W(27, 3);
  for (int j = 0; j < 3; ++j) W.col(j) = w[static_cast<std::size_t>(j)];
  const MatrixF image = multiply(cube_power(tau), W);
  try {
    return solve_unique(W, image);
  } catch (const InconsistentSolve&) {
    throw InvalidArgument("span(w1, w2, w3) is not stable under tau");
  }
}

RelationsCheck preserves_relations(const MatrixF& theta, const SklScalar& p) {
  if (theta.rows() != 3 || theta.cols() != 3) throw InvalidArgument("preserves_relations: theta must be 3x3");
  const Scalar det = determinant(theta);
  if (det.is_zero()) throw InvalidArgument("preserves_relations: theta is singular");
  const VectorF t = skl_tensor(p);
  const VectorF image = multiply(cube_power(theta), t);
  RelationsCheck out;
  Eigen::Index lead = 0;
  while (lead < 27 && t(lead).is_zero()) ++lead;
  if (lead == 27) throw InvalidArgument("parameters are all zero");
  const Scalar lambda = image(lead) / t(lead);
  out.preserves = true;
  for (Eigen::Index k = 0; k < 27; ++k) {
    if (image(k) != lambda * t(k)) {
      out.preserves = false;
      break;
    }
  }
  if (p.a != p.b) {
    out.det_twisted = symmetric_image(image) == symmetric_image(t).scaled(det);
  }
  return out;
}

Scalar j_invariant(const Scalar& kappa) {
  const Scalar k3 = cube(kappa);
  const Scalar den = cube(Scalar(8) * k3 + Scalar(1));
  if (den.is_zero()) throw PoleError("j-invariant has a pole where 8 kappa^3 + 1 = 0");
  return Scalar(-4096 * 27) * cube(k3 - Scalar(1)) * k3 / den;
}

std::vector<VectorF> inflection_points() {
  const Scalar e = eps(), e2 = eps_pow(2), one(1), zero(0);
  return {point(zero, one, -one), point(zero, one, -e),  point(zero, one, -e2),
          point(-one, zero, one), point(-e, zero, one),  point(-e2, zero, one),
          point(one, -one, zero), point(one, -e, zero), point(one, -e2, zero)};
}

bool permutes_inflection_points(const MatrixF& g) {
  std::set<std::string> keys;
  const auto pts = inflection_points();
  for (const auto& p : pts) keys.insert(point_key(p));
  std::set<std::string> images;
  for (const auto& p : pts) {
    const std::string k = point_key(normalized_point(multiply(g, p)));
    if (!keys.count(k)) return false;
    images.insert(k);
  }
  return images.size() == keys.size();
}

}  // namespace hecke
