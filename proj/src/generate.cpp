#include "ordertype/generate.hpp"

#include <unordered_set>

#include "ordertype/normalize.hpp"

namespace ordertype {

const std::vector<OrderTerm>& atomSet() {
  static const std::vector<OrderTerm> atoms = {
      OrderTerm::finite(1),         OrderTerm::finite(2),
      OrderTerm::finite(3),         OrderTerm::atom(Kind::Nat),
      OrderTerm::atom(Kind::NatRev), OrderTerm::atom(Kind::Int),
      OrderTerm::atom(Kind::Rat),   OrderTerm::atom(Kind::Omega1),
      OrderTerm::atom(Kind::Omega1Rev), OrderTerm::atom(Kind::Omega2),
      OrderTerm::atom(Kind::Omega2Rev), OrderTerm::atom(Kind::ULine),
  };
  return atoms;
}

namespace {

bool mentionsOmega2(const OrderTerm& t) {
  if (t.is(Kind::Omega2) || t.is(Kind::Omega2Rev)) return true;
  for (const auto& c : t.parts())
    if (mentionsOmega2(c)) return true;
  return false;
}

OrderTerm build(Rng& rng, int depth, bool omega2InProducts) {
  if (depth == 0) return rng.pick(atomSet());
  const auto child = [&] { return build(rng, static_cast<int>(rng.below(static_cast<std::uint64_t>(depth))), omega2InProducts); };
  // One child carries the full depth.
  const auto deep = [&] { return build(rng, depth - 1, omega2InProducts); };
  switch (rng.below(5)) {
    case 0:
    case 1: {
      std::vector<OrderTerm> parts{deep(), child()};
      if (rng.chance(30)) parts.push_back(child());
      if (rng.chance(50)) std::swap(parts[0], parts[1]);
      return OrderTerm::sum(std::move(parts));
    }
    case 2:
    case 3: {
      OrderTerm a = deep(), b = child();
      if (rng.chance(50)) std::swap(a, b);
      if (!omega2InProducts) {
        for (int tries = 0; mentionsOmega2(a) && tries < 8; ++tries) a = child();
        for (int tries = 0; mentionsOmega2(b) && tries < 8; ++tries) b = child();
        if (mentionsOmega2(a) || mentionsOmega2(b)) return OrderTerm::sum({a, b});
      }
      return OrderTerm::product(a, b);
    }
    default:
      return OrderTerm::rev(deep());
  }
}

}  // namespace

OrderTerm randomTerm(Rng& rng, int depth, bool omega2InProducts) {
  for (;;) {
    OrderTerm t = normalize(build(rng, depth, omega2InProducts));
    if (omega2InProducts || !t.is(Kind::Product) || !mentionsOmega2(t)) return t;
  }
}

OrderTerm randomOrdinalTerm(Rng& rng) {
  const OrderTerm w = OrderTerm::atom(Kind::Nat);
  const OrderTerm w1 = OrderTerm::atom(Kind::Omega1);
  std::vector<OrderTerm> parts;
  const auto count = 1 + rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    switch (rng.below(7)) {
      case 0: parts.push_back(OrderTerm::finite(1 + rng.below(5))); break;
      case 1: parts.push_back(w); break;
      case 2: parts.push_back(OrderTerm::product(w, w)); break;
      case 3: parts.push_back(w1); break;
      case 4: parts.push_back(OrderTerm::product(w1, w1)); break;
      case 5: parts.push_back(OrderTerm::atom(Kind::Omega2)); break;
      default: {
        // (w^e + n) copies of w1
        OrderTerm idx = rng.chance(50) ? w : OrderTerm::product(w, w);
        if (rng.chance(50)) idx = OrderTerm::sum({idx, OrderTerm::finite(1 + rng.below(3))});
        parts.push_back(OrderTerm::product(idx, w1));
      }
    }
  }
  return normalize(OrderTerm::sum(std::move(parts)));
}

std::vector<OrderTerm> generateTerms(const GeneratorOptions& options) {
  std::vector<OrderTerm> out;
  std::unordered_set<OrderTerm, OrderTermHash> seen;
  const auto add = [&](const OrderTerm& t) {
    if (seen.insert(t).second) out.push_back(t);
  };
  const auto& atoms = atomSet();
  for (const auto& a : atoms) add(a);
  if (options.depth >= 1) {
    for (const auto& a : atoms)
      for (const auto& b : atoms) {
        add(normalize(OrderTerm::sum({a, b})));
        if (options.omega2InProducts || (!mentionsOmega2(a) && !mentionsOmega2(b)))
          add(normalize(OrderTerm::product(a, b)));
      }
  }
  if (options.depth >= 2) {
    Rng rng(options.seed);
    std::size_t attempts = 0;
    const std::size_t target = out.size() + options.randomCount;
    while (out.size() < target && attempts++ < options.randomCount * 20) {
      const int d = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(options.depth - 1)));
      add(randomTerm(rng, d, options.omega2InProducts));
    }
  }
  return out;
}

}  // namespace ordertype
