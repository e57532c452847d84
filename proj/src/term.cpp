#include "ordertype/term.hpp"

#include <functional>

#include "ordertype/errors.hpp"

namespace ordertype {

bool isAtom(Kind kind) { return kind != Kind::Sum && kind != Kind::Product && kind != Kind::Rev; }

OrderTerm::OrderTerm() : OrderTerm(atom(Kind::Empty)) {}

OrderTerm OrderTerm::make(Kind kind, std::uint64_t n, std::vector<OrderTerm> children) {
  std::size_t h = std::hash<int>{}(static_cast<int>(kind)) * 1000003u ^ std::hash<std::uint64_t>{}(n);
  for (const auto& c : children) h = h * 31u + c.hash() + 0x9e3779b97f4a7c15ull;
  return OrderTerm(std::make_shared<const Node>(Node{kind, n, std::move(children), h}));
}

OrderTerm OrderTerm::atom(Kind kind) {
  if (!isAtom(kind)) throw OrderError(ErrorKind::InvalidArgument, "not an atom kind");
  if (kind == Kind::Fin) throw OrderError(ErrorKind::InvalidArgument, "use OrderTerm::finite");
  static const auto cache = [] {
    std::vector<OrderTerm> v;
    for (int k = 0; k <= static_cast<int>(Kind::ULine); ++k)
      v.push_back(make(static_cast<Kind>(k), k == static_cast<int>(Kind::Single) ? 1 : 0, {}));
    return v;
  }();
  return cache[static_cast<std::size_t>(kind)];
}

OrderTerm OrderTerm::finite(std::uint64_t n) {
  if (n == 0) return atom(Kind::Empty);
  if (n == 1) return atom(Kind::Single);
  return make(Kind::Fin, n, {});
}

OrderTerm OrderTerm::sum(std::vector<OrderTerm> parts) { return make(Kind::Sum, 0, std::move(parts)); }

OrderTerm OrderTerm::product(OrderTerm outer, OrderTerm inner) {
  return make(Kind::Product, 0, {std::move(outer), std::move(inner)});
}

OrderTerm OrderTerm::rev(OrderTerm t) { return make(Kind::Rev, 0, {std::move(t)}); }

std::uint64_t OrderTerm::size() const {
  if (!isFiniteAtom()) throw OrderError(ErrorKind::InvalidArgument, "size() of infinite term");
  return node_->n;
}

bool operator==(const OrderTerm& a, const OrderTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.node_->n != b.node_->n) return false;
  return a.node_->children == b.node_->children;
}

bool operator<(const OrderTerm& a, const OrderTerm& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.node_->n != b.node_->n) return a.node_->n < b.node_->n;
  const auto& x = a.node_->children;
  const auto& y = b.node_->children;
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

namespace {

const char* atomSpelling(Kind k) {
  switch (k) {
    case Kind::Empty: return "0";
    case Kind::Single: return "1";
    case Kind::Nat: return "w";
    case Kind::NatRev: return "w*";
    case Kind::Int: return "z";
    case Kind::Rat: return "q";
    case Kind::Omega1: return "w1";
    case Kind::Omega1Rev: return "w1*";
    case Kind::Omega2: return "w2";
    case Kind::Omega2Rev: return "rev(w2)";
    case Kind::ULine: return "U";
    default: return "?";
  }
}

void print(const OrderTerm& t, std::string& out) {
  switch (t.kind()) {
    case Kind::Fin:
      out += std::to_string(t.size());
      return;
    case Kind::Sum: {
      bool first = true;
      for (const auto& p : t.parts()) {
        if (!first) out += " + ";
        first = false;
        print(p, out);
      }
      return;
    }
    case Kind::Product: {
      const auto operand = [&](const OrderTerm& x, bool right) {
        const bool paren = x.is(Kind::Sum) || (right && x.is(Kind::Product));
        if (paren) out += '(';
        print(x, out);
        if (paren) out += ')';
      };
      operand(t.outer(), false);
      out += " * ";
      operand(t.inner(), true);
      return;
    }
    case Kind::Rev:
      out += "rev(";
      print(t.operand(), out);
      out += ')';
      return;
    default:
      out += atomSpelling(t.kind());
  }
}

}  // namespace

std::string OrderTerm::toString() const {
  std::string out;
  print(*this, out);
  return out;
}

}  // namespace ordertype
