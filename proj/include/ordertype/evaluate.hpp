#pragma once

#include <optional>
#include <string_view>

#include "ordertype/condense.hpp"

namespace ordertype {

/// Result of evaluating a surface expression. When the whole expression is
/// cc(...) or fc(...), `operand` is the normalized argument and `condensation`
/// carries the merge flags; otherwise operand equals result.
struct Evaluation {
  OrderTerm operand;
  OrderTerm result;
  std::optional<Level> level;
  std::optional<CondResult> condensation;
};

Evaluation evaluate(std::string_view text);

}  // namespace ordertype
