#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordertype/term.hpp"

namespace ordertype {

/// Syntax tree of the surface grammar:
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := atom | '(' expr ')' | name '(' expr (',' expr)* ')'
///   atom   := 0 | 1 | <nat> | w | w* | z | q | w1 | w1* | w2 | U
/// Postfix '*' binds to w/w1 only when written without a space ("w*").
struct Expr {
  enum class Op { Atom, Sum, Product, Call };

  Op op = Op::Atom;
  OrderTerm atom;
  std::string function;  // rev, cc, fc, mulw, mulf
  std::vector<Expr> args;
  std::size_t position = 0;
};

Expr parseExpr(std::string_view text);

/// Evaluates a call node other than rev; receives already-built arguments.
using CallHandler =
    std::function<OrderTerm(const std::string& function, std::span<const OrderTerm> args)>;

/// Builds the (unnormalized) term. Calls other than rev require a handler.
OrderTerm toTerm(const Expr& expr, const CallHandler& handler = {});

/// Parses and normalizes, evaluating cc/fc/mulw/mulf with the condensation
/// engine.
OrderTerm parse(std::string_view text);

}  // namespace ordertype
