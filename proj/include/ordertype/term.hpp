#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ordertype {

/// Shape of an order-type expression. Atoms name fixed order types; Sum,
/// Product and Rev combine them. Product(outer, inner) is "outer copies of
/// inner", so Product(2, w) is w + w.
enum class Kind {
  Empty,      // 0
  Single,     // 1
  Fin,        // n >= 2
  Nat,        // w
  NatRev,     // w*
  Int,        // z
  Rat,        // q
  Omega1,     // w1
  Omega1Rev,  // w1*
  Omega2,     // w2
  Omega2Rev,  // rev(w2)
  ULine,      // U
  Sum,
  Product,
  Rev,
};

bool isAtom(Kind kind);

/// Immutable, shared, structurally compared order-type term.
class OrderTerm {
 public:
  OrderTerm();  // Empty

  static OrderTerm atom(Kind kind);
  /// 0, 1 or Fin(n) as appropriate.
  static OrderTerm finite(std::uint64_t n);
  /// Raw n-ary sum; no flattening or simplification (see normalize()).
  static OrderTerm sum(std::vector<OrderTerm> parts);
  static OrderTerm product(OrderTerm outer, OrderTerm inner);
  static OrderTerm rev(OrderTerm t);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return kind() == k; }
  /// Size of a Fin term (also 0 for Empty and 1 for Single).
  std::uint64_t size() const;
  bool isFiniteAtom() const { return is(Kind::Empty) || is(Kind::Single) || is(Kind::Fin); }

  std::span<const OrderTerm> parts() const { return node_->children; }
  const OrderTerm& outer() const { return node_->children[0]; }
  const OrderTerm& inner() const { return node_->children[1]; }
  const OrderTerm& operand() const { return node_->children[0]; }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const OrderTerm& a, const OrderTerm& b);
  /// Total structural order, used for canonical choices.
  friend bool operator<(const OrderTerm& a, const OrderTerm& b);

  /// Surface syntax; parse(toString()) reproduces normal forms exactly.
  std::string toString() const;

 private:
  struct Node {
    Kind kind;
    std::uint64_t n;
    std::vector<OrderTerm> children;
    std::size_t hash;
  };

  explicit OrderTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static OrderTerm make(Kind kind, std::uint64_t n, std::vector<OrderTerm> children);

  std::shared_ptr<const Node> node_;
};

struct OrderTermHash {
  std::size_t operator()(const OrderTerm& t) const { return t.hash(); }
};

}  // namespace ordertype
