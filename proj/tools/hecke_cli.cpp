#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hecke/expression.hpp"
#include "hecke/heckealg.hpp"
#include "hecke/io.hpp"

using namespace hecke;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

struct Options {
  bool pretty = false;
  bool timings = false;
  std::string field = "ratfunc_q";
  std::string q = "q";
  std::string input;
  std::string builtin;
  int dim = 2;
  int max_degree = 0;
  bool hessian_report = false;
  bool case1 = false;
  int case_id = 0;
  std::string params;
  std::string a = "1", b = "1", c = "2";
  std::string check = "all";
  int n = 5;
};

struct Loaded {
  RMatrixDocument doc;
  std::string digest;
  std::string name;
};

Loaded load_input(const Options& o) {
  Loaded out;
  if (!o.builtin.empty()) {
    if (!o.input.empty()) throw InvalidArgument("give either an input file or --builtin, not both");
    HeckeSymmetry S = [&] {
      if (o.builtin == "dj") return dj_standard(o.dim, field_from_options(o.field, o.q));
      if (o.builtin == "flip") return flip(o.dim);
      throw InvalidArgument("unknown builtin '" + o.builtin + "' (expected dj or flip)");
    }();
    out.doc = {S.dim(), S.field(), S.matrix()};
    out.name = S.name();
    out.digest = input_digest(o.builtin + ":" + std::to_string(o.dim) + ":" + o.field + ":" + o.q);
    return out;
  }
  if (o.input.empty()) throw InvalidArgument("no input: give an R-matrix JSON file or --builtin");
  std::ifstream in(o.input);
  if (!in) throw InvalidArgument("cannot read " + o.input);
  std::stringstream ss;
  ss << in.rdbuf();
  out.doc = parse_rmatrix(ss.str());
  out.digest = input_digest(ss.str());
  out.name = o.input;
  return out;
}

int emit(const Options& o, const std::string& command, const std::string& digest, const Json& body,
         const Report& checks, const std::string& summary) {
  if (o.pretty) {
    if (!summary.empty()) std::cout << summary << "\n";
    std::cout << pretty(checks);
  } else {
    std::cout << report_envelope(command, digest, body).dump(2) << "\n";
  }
  return checks.ok() ? kOk : kCheckFailure;
}

int cmd_verify(const Options& o) {
  const Loaded in = load_input(o);
  Report r;
  const Scalar q = in.doc.field.q;
  r.run("Hecke relation (R - q)(R + 1) = 0", "Hecke symmetry", [&] {
    const RelationCheck c = check_hecke(in.doc.R, q);
    return c.ok ? std::string() : c.witness;
  });
  r.run("braid relation R_1 R_2 R_1 = R_2 R_1 R_2", "Hecke symmetry", [&] {
    const RelationCheck c = check_braid(in.doc.R, in.doc.dim);
    return c.ok ? std::string() : c.witness;
  });
  Json body;
  body["input"] = in.name;
  body["dim"] = in.doc.dim;
  body["field"] = to_json(in.doc.field);
  body["q"] = q.to_string();
  body["checks"] = to_json(r);
  return emit(o, "verify", in.digest, body, r, in.name + " (dim " + std::to_string(in.doc.dim) + ")");
}

int cmd_analyze(const Options& o) {
  const Loaded in = load_input(o);
  HeckeSymmetry S(in.doc.dim, in.doc.field, in.doc.R, in.name);
  const int n_max = o.max_degree > 0 ? o.max_degree : default_max_degree(S);
  Json body;
  body["input"] = in.name;
  body["field"] = to_json(S.field());
  body["q"] = S.q().to_string();
  Report checks;
  try {
    const FrobeniusProfile P = frobenius_profile(S, n_max);
    checks.append(verify_upsilon(P, S));
    checks.append(verify_frobenius(P, S));
    checks.append(trace_report(P, S));
    checks.append(verify_opposite(P, S));
    body["profile"] = to_json(P, checks);
    body["dimension_probe"] = to_json(dimension_probe(S, P.n + 1));
  } catch (const NoTopComponent& e) {
    checks.skip("Frobenius profile", "top component", e.what());
    body["checks"] = to_json(checks);
  }
  return emit(o, "analyze", in.digest, body, checks, in.name);
}

int cmd_builtin(const Options& o) {
  Options b = o;
  if (b.builtin.empty()) b.builtin = "dj";
  const Loaded in = load_input(b);
  HeckeSymmetry S(in.doc.dim, in.doc.field, in.doc.R, in.name);
  const Json doc = to_json(S);
  std::cout << doc.dump(o.pretty ? 2 : -1) << "\n";
  return kOk;
}

int cmd_hessian(const Options& o) {
  const HessianGroup H = hessian_group();
  const HessianReport r = conjugacy_report(H);
  Json body = to_json(r, H);
  if (!o.hessian_report) body.erase("classes");
  std::ostringstream s;
  s << "|G| = " << r.order_G << ", |T| = " << r.order_T << ", |Z| = " << r.order_Z << ", classes "
    << r.classes.size() << "\n";
  if (o.hessian_report) {
    for (const auto& c : r.classes) s << "  order " << c.order << "  size " << c.members.size() << "\n";
  }
  return emit(o, "hessian", input_digest("hessian"), body, r.checks, s.str());
}

int cmd_resultant(const Options& o) {
  if (!o.case1) throw InvalidArgument("resultant needs --case1");
  const ResultantCheck r = case1_resultant();
  return emit(o, "resultant", input_digest("resultant --case1"), to_json(r), r.checks,
              "Res(F1,F2,F3) = a^2*b^2*c^2*((a^3+b^3+c^3)^3-27*a^3*b^3*c^3)^2");
}

SklScalar parse_params(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw InvalidArgument("--params needs a,b,c");
  return {parse_scalar_raw(parts[0], 3), parse_scalar_raw(parts[1], 3), parse_scalar_raw(parts[2], 3)};
}

void sample_checks(CaseReport& rep, const SklScalar& p) {
  Report& r = rep.checks;
  const std::string pt = "(" + p.a.to_string() + "," + p.b.to_string() + "," + p.c.to_string() + ")";
  switch (rep.id) {
    case 1:
      r.add("(a+b)^3 + c^3 is nonzero at " + pt, "circulant determinant",
            !((p.a + p.b).pow(3) + p.c.pow(3)).is_zero());
      break;
    case 2:
      r.run("braid residual is nonzero at " + pt, "braid equation fails", [&]() -> std::string {
        if (p.c.is_zero()) return "c = 0";
        VectorF f = VectorF::Constant(27, Scalar(0));
        f(word3(2, 2, 2)) = p.c.inverse();
        MatrixF dual = zeros<Scalar>(3, 3);
        for (int i = 0; i < 3; ++i) dual(i, i) = Scalar::zeta(3).pow(3 - (i + 1) % 3);
        const MatrixF P = projection_from_f(f, skl_relations(p), dual).matrix();
        return all_zero(braid_residual_of_projection(P, Scalar::zeta(3))) ? "residual vanishes" : "";
      });
      break;
    case 3:
    case 4:
      if (p.a != p.b) {
        r.skip("parameter point " + pt, "a = b", "this case assumes a = b");
      } else if (rep.id == 3) {
        r.add("d = 8a^3 + c^3 is nonzero at " + pt, "d != 0", !(Scalar(8) * p.a.pow(3) + p.c.pow(3)).is_zero());
      }
      break;
    default:
      break;
  }
}

int cmd_obstruct(const Options& o) {
  CaseReport rep = verify_case(o.case_id);
  std::string digest = "obstruct " + std::to_string(o.case_id);
  if (!o.params.empty()) {
    const SklScalar p = parse_params(o.params);
    if (!is_type_A(p)) throw InvalidArgument("parameter point " + o.params + " is not of type A");
    digest += " " + o.params;
    sample_checks(rep, p);
    rep.contradiction = rep.contradiction && rep.checks.ok();
  }
  return emit(o, "obstruct", input_digest(digest), to_json(rep), rep.checks,
              "case " + std::to_string(rep.id) + ": " + rep.verdict);
}

int cmd_skl3(const Options& o) {
  const SklScalar p{parse_scalar_raw(o.a, 3), parse_scalar_raw(o.b, 3), parse_scalar_raw(o.c, 3)};
  if (p.a.is_zero() && p.b.is_zero() && p.c.is_zero()) throw InvalidArgument("(a,b,c) must not be zero");
  if (o.check != "regular" && o.check != "typeA" && o.check != "all") {
    throw InvalidArgument("--check must be regular, typeA or all");
  }
  Report r;
  const bool reg = is_regular(p), ta = is_type_A(p);
  if (o.check != "typeA") r.add("regular", "regularity of Skl_3(a,b,c)", reg, reg ? "" : "not regular");
  if (o.check != "regular") r.add("type A", "type A predicate", ta, ta ? "" : "not of type A");
  Json body;
  body["a"] = p.a.to_string();
  body["b"] = p.b.to_string();
  body["c"] = p.c.to_string();
  body["regular"] = reg;
  body["typeA"] = ta;
  body["t_symmetric"] = skl_symmetric_image(p).to_string();
  body["checks"] = to_json(r);
  std::ostringstream s;
  if (o.check != "typeA") s << "regular: " << (reg ? "true" : "false") << "\n";
  if (o.check != "regular") s << "typeA: " << (ta ? "true" : "false") << "\n";
  return emit(o, "skl3", input_digest(o.a + "," + o.b + "," + o.c), body, r, s.str());
}

int cmd_identities(const Options& o) {
  if (o.n < 1) throw InvalidArgument("--n must be positive");
  const FieldSpec F = field_from_options(o.field, o.q);
  const Report r = verify_identities(o.n, F);
  Json body;
  body["n_max"] = o.n;
  body["field"] = to_json(F);
  body["checks"] = to_json(r);
  return emit(o, "identities", input_digest("identities " + std::to_string(o.n) + " " + o.field + " " + o.q), body,
              r, "Hecke algebra identities for n <= " + std::to_string(o.n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Hecke symmetries"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Human-readable output");
  app.add_flag("--timings", o.timings, "Include per-check wall-clock seconds");
  app.add_option("--field", o.field, "rational, ratfunc_q or cyclotomic:m");
  app.add_option("--q", o.q, "Value bound to q (expression)");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", o.input, "R-matrix JSON file");
    cmd->add_option("--builtin", o.builtin, "dj or flip");
    cmd->add_option("--dim", o.dim, "Dimension for --builtin")->check(CLI::PositiveNumber);
  };
  CLI::App* verify = app.add_subcommand("verify", "Check the Hecke and braid relations");
  add_input(verify);
  CLI::App* analyze = app.add_subcommand("analyze", "Frobenius profile and identity checks");
  add_input(analyze);
  analyze->add_option("--max-degree", o.max_degree, "Largest degree searched for the top component");
  CLI::App* builtin = app.add_subcommand("builtin", "Print a built-in R-matrix as JSON");
  add_input(builtin);
  CLI::App* hessian = app.add_subcommand("hessian", "The group of order 216 and its classes");
  hessian->add_flag("--report", o.hessian_report, "Include the class table");
  CLI::App* resultant = app.add_subcommand("resultant", "Sylvester resultant of the case-1 system");
  resultant->add_flag("--case1", o.case1, "The three quadratic equations of case 1");
  CLI::App* obstruct = app.add_subcommand("obstruct", "Contradiction chain for one case");
  obstruct->add_option("--case", o.case_id, "1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
  obstruct->add_option("--params", o.params, "Type-A sample point a,b,c");
  CLI::App* skl3 = app.add_subcommand("skl3", "Regularity and type-A predicates");
  skl3->add_option("--a", o.a);
  skl3->add_option("--b", o.b);
  skl3->add_option("--c", o.c);
  skl3->add_option("--check", o.check, "regular, typeA or all");
  CLI::App* identities = app.add_subcommand("identities", "Hecke algebra identity suite");
  identities->add_option("--n", o.n, "Largest n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  set_report_timings(o.timings);

  try {
    if (*verify) return cmd_verify(o);
    if (*analyze) return cmd_analyze(o);
    if (*builtin) return cmd_builtin(o);
    if (*hessian) return cmd_hessian(o);
    if (*resultant) return cmd_resultant(o);
    if (*obstruct) return cmd_obstruct(o);
    if (*skl3) return cmd_skl3(o);
    if (*identities) return cmd_identities(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const FieldMismatch& e) {
    std::cerr << "field mismatch: " << e.what() << "\n";
    return kInputError;
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
  return kInputError;
}
