#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hecke/frobenius.hpp"
#include "hecke/obstruction.hpp"
#include "hecke/regular3.hpp"
#include "hecke/symmetry.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// An R-matrix document before any relation check: dim, field and matrix.
struct RMatrixDocument {
  int dim = 0;
  FieldSpec field;
  MatrixF R;
};

/// Parses the R-matrix JSON format. Throws ParseError (with line and column)
/// on malformed JSON or expressions, InvalidArgument on shape errors and
/// FieldMismatch when an entry leaves the declared field.
RMatrixDocument parse_rmatrix(std::string_view text);
RMatrixDocument load_rmatrix(const std::string& path);

/// FNV-1a hash of the input text, as 16 hex digits.
std::string input_digest(std::string_view text);

/// Builds a field from the CLI spellings rational|ratfunc_q|cyclotomic:m and
/// a q expression.
FieldSpec field_from_options(const std::string& field, const std::string& q);

Json to_json(const Scalar& x);
Json to_json(const MatrixF& m);
Json to_json(const VectorF& v);
Json to_json(const FieldSpec& F);
Json to_json(const Report& r);
Json to_json(const HeckeSymmetry& S);
Json to_json(const FrobeniusProfile& P, const Report& checks);
Json to_json(const std::vector<DimensionRow>& rows);
Json to_json(const HessianReport& r, const HessianGroup& H);
Json to_json(const CaseReport& r);
Json to_json(const ResultantCheck& r);

/// Whether report JSON carries per-check wall-clock seconds (off by default
/// so reports are byte-identical across runs).
void set_report_timings(bool on);

/// Envelope shared by all commands: version, digest, and the payload.
Json report_envelope(const std::string& command, const std::string& digest, Json body);

/// One line per check: PASS/FAIL/SKIP, name, detail.
std::string pretty(const Report& r);

}  // namespace hecke
