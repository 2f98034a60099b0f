#include "hecke/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hecke/expression.hpp"

namespace hecke {

namespace {

bool g_timings = false;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return doc.at(key);
}

Scalar parse_entry(const Json& v, const FieldSpec& F, const std::string& where) {
  if (v.is_number_integer()) return Scalar(Rational(mpz_class(v.dump())));
  if (!v.is_string()) throw InvalidArgument(where + ": expected an expression string");
  try {
    return parse_scalar(v.get<std::string>(), F);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" (line "));
    throw ParseError(where + ": " + msg, e.line(), e.column());
  } catch (const FieldMismatch& e) {
    throw FieldMismatch(where + ": " + e.what());
  }
}

FieldSpec parse_field(const Json& doc) {
  const Json& f = require(doc, "field");
  if (!f.is_object()) throw InvalidArgument("'field' must be an object");
  const std::string kind = require(f, "kind").get<std::string>();
  const int order = f.contains("order") ? f.at("order").get<int>() : 1;
  const std::string qtext = doc.contains("q") ? doc.at("q").get<std::string>() : std::string("q");
  if (kind == "ratfunc_q") {
    if (parse_scalar_raw(qtext, 1) != Scalar::q()) throw InvalidArgument("field ratfunc_q needs q = \"q\"");
    return FieldSpec::generic();
  }
  if (kind == "rational") {
    const Scalar q0 = parse_scalar_raw(qtext, 1);
    if (!q0.is_rational()) throw FieldMismatch("q = " + qtext + " is not rational");
    return FieldSpec::rational(q0.rational());
  }
  if (kind == "cyclotomic") {
    if (order < 2) throw InvalidArgument("cyclotomic field needs order >= 2");
    return FieldSpec::cyclotomic(order, parse_scalar_raw(qtext, order));
  }
  throw InvalidArgument("unknown field kind '" + kind + "'");
}

}  // namespace

RMatrixDocument parse_rmatrix(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  if (!doc.is_object()) throw InvalidArgument("R-matrix document must be a JSON object");
  RMatrixDocument out;
  try {
    out.dim = require(doc, "dim").get<int>();
  } catch (const Json::type_error&) {
    throw InvalidArgument("'dim' must be an integer");
  }
  if (out.dim < 1) throw InvalidArgument("'dim' must be positive");
  try {
    out.field = parse_field(doc);
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("bad field description: ") + e.what());
  }
  const Json& m = require(doc, "matrix");
  const int n = out.dim * out.dim;
  if (!m.is_array() || static_cast<int>(m.size()) != n) {
    throw InvalidArgument("'matrix' must have " + std::to_string(n) + " rows");
  }
  out.R = MatrixF(n, n);
  for (int r = 0; r < n; ++r) {
    const Json& row = m.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InvalidArgument("matrix row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    }
    for (int c = 0; c < n; ++c) {
      out.R(r, c) = parse_entry(row.at(static_cast<std::size_t>(c)), out.field,
                                "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return out;
}

RMatrixDocument load_rmatrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_rmatrix(ss.str());
}

std::string input_digest(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

FieldSpec field_from_options(const std::string& field, const std::string& q) {
  Json doc;
  const auto colon = field.find(':');
  Json f;
  f["kind"] = field.substr(0, colon);
  if (colon != std::string::npos) {
    try {
      f["order"] = std::stoi(field.substr(colon + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("bad cyclotomic order in '" + field + "'");
    }
  }
  doc["field"] = f;
  doc["q"] = q;
  return parse_field(doc);
}

void set_report_timings(bool on) { g_timings = on; }

Json to_json(const Scalar& x) { return x.to_string(); }

Json to_json(const MatrixF& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const VectorF& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).to_string());
  return out;
}

Json to_json(const FieldSpec& F) {
  Json out;
  out["kind"] = F.kind_name();
  out["order"] = F.order;
  return out;
}

Json to_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["anchor"] = c.anchor;
    j["status"] = status_name(c.status);
    j["detail"] = c.detail;
    if (g_timings) j["seconds"] = c.seconds;
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const HeckeSymmetry& S) {
  Json out;
  out["dim"] = S.dim();
  out["field"] = to_json(S.field());
  out["q"] = S.q().to_string();
  out["matrix"] = to_json(S.matrix());
  return out;
}

Json to_json(const FrobeniusProfile& P, const Report& checks) {
  Json out;
  out["n"] = P.n;
  out["t"] = to_json(P.t);
  Json dims = Json::array();
  for (const auto& U : P.upsilon) dims.push_back(U.dim());
  out["dims"] = dims;
  out["theta"] = to_json(P.theta);
  out["theta_bar"] = to_json(P.theta_bar);
  out["phi"] = to_json(P.phi);
  out["psi"] = to_json(P.psi);
  if (P.f) out["f"] = to_json(*P.f);
  out["checks"] = to_json(checks);
  return out;
}

Json to_json(const std::vector<DimensionRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["k"] = r.k;
    j["upsilon"] = r.upsilon;
    j["lambda"] = r.lambda;
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const HessianReport& r, const HessianGroup& H) {
  Json out;
  out["order_G"] = r.order_G;
  out["order_T"] = r.order_T;
  out["order_Z"] = r.order_Z;
  out["order_G_mod_Z"] = r.order_Z == 0 ? 0 : r.order_G / r.order_Z;
  Json census;
  for (const auto& [k, v] : r.census) census[std::to_string(k)] = v;
  out["order_census"] = census;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json j;
    j["order"] = c.order;
    j["size"] = c.members.size();
    j["representative"] = to_json(H.G.at(c.members.front()).matrix());
    classes.push_back(std::move(j));
  }
  out["classes"] = classes;
  out["checks"] = to_json(r.checks);
  return out;
}

Json to_json(const CaseReport& r) {
  Json out;
  out["case"] = r.id;
  Json b;
  for (const auto& [k, v] : r.bindings) b[k] = v;
  out["bindings"] = b;
  Json eqs = Json::array();
  for (const auto& [k, v] : r.equations) {
    Json j;
    j["name"] = k;
    j["equation"] = v;
    eqs.push_back(std::move(j));
  }
  out["equations"] = eqs;
  out["contradiction"] = r.contradiction;
  out["verdict"] = r.verdict;
  out["checks"] = to_json(r.checks);
  return out;
}

Json to_json(const ResultantCheck& r) {
  Json out;
  out["identity"] = "a^2*b^2*c^2*((a^3+b^3+c^3)^3-27*a^3*b^3*c^3)^2";
  out["resultant"] = r.resultant.to_string();
  out["terms"] = r.resultant.terms().size();
  out["checks"] = to_json(r.checks);
  return out;
}

Json report_envelope(const std::string& command, const std::string& digest, Json body) {
  Json out;
  out["tool"] = "hecke";
  out["version"] = kToolVersion;
  out["command"] = command;
  out["input_digest"] = digest;
  out["result"] = std::move(body);
  return out;
}

std::string pretty(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP") << "  " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks without failure\n";
  return os.str();
}

}  // namespace hecke
