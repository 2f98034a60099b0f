#include <doctest.h>

#include "hecke/io.hpp"

using namespace hecke;

TEST_CASE("R-matrix round trip") {
  const auto S = dj_standard(2, FieldSpec::generic());
  const RMatrixDocument d = parse_rmatrix(to_json(S).dump());
  CHECK(d.dim == 2);
  CHECK(d.field == S.field());
  CHECK(equal(d.R, S.matrix()));
  const auto C = dj_standard(2, FieldSpec::cyclotomic(3, Scalar::zeta(3)));
  const RMatrixDocument dc = parse_rmatrix(to_json(C).dump());
  CHECK(dc.field.kind == FieldSpec::Kind::cyclotomic);
  CHECK(equal(dc.R, C.matrix()));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_rmatrix("{\n  \"dim\": 2,\n  \"field\" {}\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  const std::string bad_entry =
      R"({"dim":1,"field":{"kind":"ratfunc_q"},"q":"q","matrix":[["q*(1+"]]})";
  CHECK_THROWS_AS(parse_rmatrix(bad_entry), ParseError);
  CHECK_THROWS_AS(parse_rmatrix(R"({"dim":2,"field":{"kind":"ratfunc_q"},"q":"q","matrix":[["q"]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_rmatrix(R"({"dim":1,"field":{"kind":"rational"},"q":"q","matrix":[["1"]]})"),
                  FieldMismatch);
  CHECK_THROWS_AS(parse_rmatrix(R"({"dim":1,"field":{"kind":"padic"},"q":"q","matrix":[["1"]]})"),
                  InvalidArgument);
}

TEST_CASE("field options") {
  CHECK(field_from_options("ratfunc_q", "q") == FieldSpec::generic());
  const FieldSpec c = field_from_options("cyclotomic:3", "e");
  CHECK(c.order == 3);
  CHECK(c.q == Scalar::zeta(3));
  CHECK(field_from_options("rational", "2").q == Scalar(2));
  CHECK_THROWS(field_from_options("cyclotomic:x", "e"));
}

TEST_CASE("reports") {
  Report r;
  r.add("first", "anchor", true);
  r.add("second", "anchor", false, "witness");
  const Json j = to_json(r);
  CHECK(j.size() == 2);
  CHECK(j[1]["status"] == "fail");
  CHECK(j[1]["detail"] == "witness");
  CHECK_FALSE(j[0].contains("seconds"));
  CHECK(pretty(r).find("FAIL  second  [witness]") != std::string::npos);
  CHECK(input_digest("abc") == input_digest("abc"));
  CHECK(input_digest("abc") != input_digest("abd"));
  const Json env = report_envelope("verify", "00", Json::object());
  CHECK(env["version"] == kToolVersion);
}
