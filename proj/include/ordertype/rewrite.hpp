#pragma once

#include <functional>

#include "ordertype/term.hpp"

namespace ordertype {

/// Dense in the order-theoretic sense (between any two points lies a third).
/// Empty and one-point orders count as dense.
bool isDense(const OrderTerm& t);

/// Number of nodes in the term tree.
std::size_t termSize(const OrderTerm& t);

/// Canonical representative of z * block among the cyclic rotations of the
/// block (each rotation gives an isomorphic order). The choice is stable under
/// reversal except for blocks that are rotations of their own reverse.
/// `refine` is applied to every candidate block before comparison.
OrderTerm zetaProduct(const OrderTerm& block,
                      const std::function<OrderTerm(const OrderTerm&)>& refine = {});

/// Applies the registered isomorphism rewrites to a normal term:
///   w* + w           -> z
///   z * n            -> z
///   z * (block)      -> canonical rotation of the block
///   countable dense  -> q, with 1 + / + 1 for end points
/// Terms with equal canonical forms denote isomorphic orders.
OrderTerm canonicalForm(const OrderTerm& t);

}  // namespace ordertype
