#pragma once

#include "ordertype/level.hpp"
#include "ordertype/normalize.hpp"

namespace ordertype {

/// Quotient of an order by a condensation. mergeLeft: the first class has a
/// small head in the original order; mergeRight: the last class has a small
/// tail.
struct CondResult {
  OrderTerm quotient;
  bool mergeLeft = false;
  bool mergeRight = false;

  friend bool operator==(const CondResult&, const CondResult&) = default;
};

/// Condensation of a normal term at the given level (memoized, thread safe).
CondResult cc(const OrderTerm& t, Level level);

/// A copies of Q, with the last class of each copy identified with the first
/// class of the next copy whenever the copy indices are adjacent in A.
OrderTerm glue(const OrderTerm& a, const OrderTerm& q);

/// Quotient of the ordinal w1*delta + rho by the countable condensation.
Ordinal ccOrdinal(const Ordinal& delta, const Ordinal& rho);

/// Right identity for the level's multiplication: condenses to a point and is
/// not small.
bool isRightIdentity(const OrderTerm& t, Level level);

namespace detail {
/// The compositional rules without the ordinal shortcut; used to cross-check
/// the shortcut.
CondResult ccStructural(const OrderTerm& t, Level level);
}  // namespace detail

}  // namespace ordertype
