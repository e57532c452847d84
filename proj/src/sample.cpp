#include <algorithm>

#include "ordertype/generate.hpp"
#include "ordertype/points.hpp"

namespace ordertype {

namespace {

const std::vector<Ordinal>& ordinalPool() {
  static const std::vector<Ordinal> pool = [] {
    std::vector<Ordinal> v;
    for (const char* s : {"0", "1", "2", "5", "w", "w + 1", "w*2", "w*2 + 3", "w^2", "w^2 + w", "w^w", "w^w + 1"})
      v.push_back(Ordinal::parse(s));
    return v;
  }();
  return pool;
}

Rational randomRational(Rng& rng) {
  const auto num = static_cast<std::int64_t>(rng.below(21)) - 10;
  const auto den = static_cast<std::int64_t>(rng.below(4)) + 1;
  return Rational(num, den);
}

UPoint randomU(Rng& rng) {
  const auto side = static_cast<UPoint::Side>(rng.below(3));
  if (side == UPoint::Side::Mid) return UPoint::rational(side, {}, randomRational(rng));
  const Ordinal& idx = rng.pick(ordinalPool());
  if (rng.chance(40)) return UPoint::spinePoint(side, idx);
  return UPoint::rational(side, idx, randomRational(rng));
}

std::optional<PointCode> randomCode(const OrderTerm& t, Rng& rng) {
  switch (t.kind()) {
    case Kind::Empty:
      return std::nullopt;
    case Kind::Single:
    case Kind::Fin:
      return PointCode::nat(rng.below(t.size()));
    case Kind::Nat:
    case Kind::NatRev:
      return PointCode::nat(rng.below(12));
    case Kind::Int:
      return PointCode::integer(static_cast<std::int64_t>(rng.below(13)) - 6);
    case Kind::Rat:
      return PointCode::rational(randomRational(rng));
    case Kind::Omega1:
    case Kind::Omega1Rev:
      return PointCode::ordinal(rng.pick(ordinalPool()));
    case Kind::Omega2:
    case Kind::Omega2Rev:
      return PointCode::ordinalPair(rng.pick(ordinalPool()), rng.pick(ordinalPool()));
    case Kind::ULine:
      return PointCode::upoint(randomU(rng));
    case Kind::Sum: {
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < t.parts().size(); ++i)
        if (!t.parts()[i].is(Kind::Empty)) live.push_back(i);
      if (live.empty()) return std::nullopt;
      const std::size_t i = rng.pick(live);
      return PointCode::part(i, *randomCode(t.parts()[i], rng));
    }
    case Kind::Product: {
      auto outer = randomCode(t.outer(), rng);
      auto inner = randomCode(t.inner(), rng);
      if (!outer || !inner) return std::nullopt;
      return PointCode::pair(std::move(*outer), std::move(*inner));
    }
    case Kind::Rev:
      return randomCode(t.operand(), rng);  // same carrier, order reversed
  }
  return std::nullopt;
}

std::optional<PointCode> anyPoint(const OrderTerm& t) {
  if (auto p = firstPoint(t)) return p;
  if (auto p = lastPoint(t)) return p;
  Rng rng(0);
  return randomCode(t, rng);
}

// A point at a limit position: no immediate predecessor yet not first (or,
// in reversed atoms, the mirror of that).
std::optional<PointCode> limitPoint(const OrderTerm& t) {
  const Ordinal w = Ordinal::omega();
  switch (t.kind()) {
    case Kind::Omega1:
    case Kind::Omega1Rev:
      return PointCode::ordinal(w);
    case Kind::Omega2:
    case Kind::Omega2Rev:
      return PointCode::ordinalPair({}, w);
    case Kind::Rat:
      return PointCode::rational(0);
    case Kind::ULine:
      return PointCode::upoint(UPoint::spinePoint(UPoint::Side::Pos, w));
    case Kind::Sum:
      for (std::size_t i = 0; i < t.parts().size(); ++i)
        if (auto p = limitPoint(t.parts()[i])) return PointCode::part(i, *p);
      return std::nullopt;
    case Kind::Product: {
      if (auto a = limitPoint(t.outer()); a && firstPoint(t.inner())) return PointCode::pair(*a, *firstPoint(t.inner()));
      auto b = limitPoint(t.inner());
      auto a = anyPoint(t.outer());
      if (a && b) return PointCode::pair(*a, *b);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::vector<PointCode> samplePoints(const OrderTerm& t, std::size_t budget, std::uint64_t seed) {
  std::vector<PointCode> out;
  auto add = [&](const std::optional<PointCode>& p) {
    if (p && out.size() < budget && std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
  };
  const auto first = firstPoint(t);
  const auto last = lastPoint(t);
  add(first);
  add(last);
  if (first) add(successor(t, *first));
  if (last) add(predecessor(t, *last));

  add(limitPoint(t));
  if (t.is(Kind::ULine)) {
    add(PointCode::upoint(UPoint::spinePoint(UPoint::Side::Neg, {})));
    add(PointCode::upoint(UPoint::rational(UPoint::Side::Mid, {}, 0)));
    add(PointCode::upoint(UPoint::spinePoint(UPoint::Side::Pos, {})));
  }

  Rng rng(seed);
  for (std::size_t tries = 0; out.size() < budget && tries < 8 * budget; ++tries) add(randomCode(t, rng));
  return out;
}

}  // namespace ordertype
