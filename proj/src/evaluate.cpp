#include "ordertype/evaluate.hpp"

#include "ordertype/algebra.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/parse.hpp"

namespace ordertype {

namespace {

OrderTerm callEngine(const std::string& fn, std::span<const OrderTerm> args) {
  if (fn == "cc") return cc(normalize(args[0]), Level::Countable).quotient;
  if (fn == "fc") return cc(normalize(args[0]), Level::Finite).quotient;
  if (fn == "mulw") return mulOmega(args[0], args[1]);
  if (fn == "mulf") return mulF(args[0], args[1]);
  throw OrderError(ErrorKind::Syntax, "unknown function " + fn);
}

}  // namespace

OrderTerm parse(std::string_view text) { return normalize(toTerm(parseExpr(text), callEngine)); }

Evaluation evaluate(std::string_view text) {
  const Expr expr = parseExpr(text);
  if (expr.op == Expr::Op::Call && (expr.function == "cc" || expr.function == "fc")) {
    const Level level = expr.function == "cc" ? Level::Countable : Level::Finite;
    const OrderTerm operand = normalize(toTerm(expr.args.at(0), callEngine));
    const CondResult r = cc(operand, level);
    return {operand, r.quotient, level, r};
  }
  const OrderTerm t = normalize(toTerm(expr, callEngine));
  return {t, t, std::nullopt, std::nullopt};
}

}  // namespace ordertype
