#include "hecke/expression.hpp"

namespace hecke {

Scalar parse_scalar(std::string_view text, const FieldSpec& F) {
  ExpressionParser<Scalar> p(text, [&F](std::string_view name) -> std::optional<Scalar> {
    if (name == "q") return F.q;
    if (name == "e" && F.kind == FieldSpec::Kind::cyclotomic) return Scalar::zeta(F.order);
    return std::nullopt;
  });
  Scalar v = p.parse();
  F.check(v);
  return v;
}

Scalar parse_scalar_raw(std::string_view text, int order) {
  ExpressionParser<Scalar> p(text, [order](std::string_view name) -> std::optional<Scalar> {
    if (name == "q" && order <= 1) return Scalar::q();
    if (name == "e" && order > 1) return Scalar::zeta(order);
    return std::nullopt;
  });
  return p.parse();
}

}  // namespace hecke
