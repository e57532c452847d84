#include "ordertype/rewrite.hpp"

#include <tuple>

#include "ordertype/classify.hpp"
#include "ordertype/normalize.hpp"

namespace ordertype {

bool isDense(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Empty:
    case Kind::Single:
    case Kind::Rat:
    case Kind::ULine:
      return true;
    case Kind::Sum: {
      const OrderTerm* prev = nullptr;
      for (const auto& p : t.parts()) {
        if (p.is(Kind::Empty)) continue;
        if (!isDense(p)) return false;
        if (prev && hasLast(*prev) && hasFirst(p)) return false;
        prev = &p;
      }
      return true;
    }
    case Kind::Product: {
      const OrderTerm& a = t.outer();
      const OrderTerm& b = t.inner();
      if (!isDense(b)) return false;
      // Adjacent copies would leave a gap between a last and a first point.
      const bool copiesTouch = hasLast(b) && hasFirst(b);
      return !copiesTouch || isDense(a);
    }
    case Kind::Rev:
      return isDense(t.operand());
    default:
      return false;
  }
}

std::size_t termSize(const OrderTerm& t) {
  std::size_t n = 1;
  for (const auto& c : t.parts()) n += termSize(c);
  return n;
}

OrderTerm zetaProduct(const OrderTerm& block,
                      const std::function<OrderTerm(const OrderTerm&)>& refine) {
  const OrderTerm z = OrderTerm::atom(Kind::Int);
  const auto finish = [&](const OrderTerm& b) {
    if (b.isFiniteAtom()) return b.is(Kind::Empty) ? b : z;
    return OrderTerm::product(z, b);
  };
  if (!block.is(Kind::Sum)) return finish(refine ? refine(block) : block);

  const auto parts = block.parts();
  using Key = std::tuple<std::size_t, std::string, std::string>;
  std::optional<std::pair<Key, OrderTerm>> best;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<OrderTerm> rotated(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end());
    rotated.insert(rotated.end(), parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i));
    OrderTerm c = normalSum(rotated);
    if (refine) c = refine(c);
    const std::string s = c.toString();
    const std::string r = reverse(c).toString();
    Key key{termSize(c), std::min(s, r), s};
    if (!best || key < best->first) best.emplace(std::move(key), c);
  }
  return finish(best->second);
}

namespace {

OrderTerm denseForm(const OrderTerm& t) {
  std::vector<OrderTerm> parts;
  if (hasFirst(t)) parts.push_back(OrderTerm::finite(1));
  parts.push_back(OrderTerm::atom(Kind::Rat));
  if (hasLast(t)) parts.push_back(OrderTerm::finite(1));
  return normalSum(parts);
}

OrderTerm rewriteOnce(const OrderTerm& t) {
  const Profile p = structuralProfile(t);
  if (!p.card.isSmall(Level::Finite) && p.card.isSmall(Level::Countable) && isDense(t))
    return denseForm(t);
  switch (t.kind()) {
    case Kind::Sum: {
      std::vector<OrderTerm> parts;
      for (const auto& part : t.parts()) {
        OrderTerm c = rewriteOnce(part);
        if (c.is(Kind::Nat) && !parts.empty() && parts.back().is(Kind::NatRev))
          parts.back() = OrderTerm::atom(Kind::Int);
        else
          parts.push_back(std::move(c));
      }
      return normalSum(parts);
    }
    case Kind::Product: {
      const OrderTerm outer = rewriteOnce(t.outer());
      const OrderTerm inner = rewriteOnce(t.inner());
      if (outer.is(Kind::Int)) return zetaProduct(inner, &canonicalForm);
      return normalProduct(outer, inner);
    }
    default:
      return t;
  }
}

}  // namespace

OrderTerm canonicalForm(const OrderTerm& t) {
  OrderTerm cur = normalize(t);
  for (int i = 0; i < 16; ++i) {
    OrderTerm next = rewriteOnce(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace ordertype
