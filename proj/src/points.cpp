#include "ordertype/points.hpp"

#include "ordertype/errors.hpp"

namespace ordertype {

namespace {

std::strong_ordering cmpRational(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

[[noreturn]] void invalid(const OrderTerm& t, const PointCode& p) {
  throw OrderError(ErrorKind::InvalidCode, "code " + p.toString() + " is not an element of " + t.toString());
}

int sideRank(UPoint::Side s) { return static_cast<int>(s); }

}  // namespace

std::string UPoint::toString() const {
  const std::string idx = index.toString();
  switch (side) {
    case Side::Mid: return "Q(mid):" + value.str();
    case Side::Pos: return spine ? "u[" + idx + "]" : "Q(" + idx + "):" + value.str();
    case Side::Neg: return spine ? "-u[" + idx + "]" : "Q(-" + idx + "):" + value.str();
  }
  return "?";
}

std::strong_ordering compareU(const UPoint& a, const UPoint& b) {
  if (auto c = sideRank(a.side) <=> sideRank(b.side); c != 0) return c;
  switch (a.side) {
    case UPoint::Side::Mid:
      return cmpRational(a.value, b.value);
    case UPoint::Side::Pos: {
      if (auto c = a.index <=> b.index; c != 0) return c;
      if (a.spine != b.spine) return a.spine ? std::strong_ordering::less : std::strong_ordering::greater;
      return a.spine ? std::strong_ordering::equal : cmpRational(a.value, b.value);
    }
    case UPoint::Side::Neg: {
      // Larger indices lie further left; Q(-a) sits just below -u_a.
      if (auto c = b.index <=> a.index; c != 0) return c;
      if (a.spine != b.spine) return a.spine ? std::strong_ordering::greater : std::strong_ordering::less;
      return a.spine ? std::strong_ordering::equal : cmpRational(a.value, b.value);
    }
  }
  return std::strong_ordering::equal;
}

PointCode PointCode::nat(std::uint64_t n) {
  PointCode c;
  c.tag = Tag::Nat;
  c.n = n;
  return c;
}
PointCode PointCode::integer(std::int64_t z) {
  PointCode c;
  c.tag = Tag::Int;
  c.z = z;
  return c;
}
PointCode PointCode::rational(Rational q) {
  PointCode c;
  c.tag = Tag::Rat;
  c.q = std::move(q);
  return c;
}
PointCode PointCode::ordinal(Ordinal a) {
  PointCode c;
  c.tag = Tag::Ord;
  c.a = std::move(a);
  return c;
}
PointCode PointCode::ordinalPair(Ordinal blocks, Ordinal offset) {
  PointCode c;
  c.tag = Tag::Ord2;
  c.a = std::move(blocks);
  c.b = std::move(offset);
  return c;
}
PointCode PointCode::upoint(UPoint u) {
  PointCode c;
  c.tag = Tag::U;
  c.u = std::move(u);
  return c;
}
PointCode PointCode::part(std::uint64_t index, PointCode child) {
  PointCode c;
  c.tag = Tag::Part;
  c.n = index;
  c.children.push_back(std::move(child));
  return c;
}
PointCode PointCode::pair(PointCode outer, PointCode inner) {
  PointCode c;
  c.tag = Tag::Pair;
  c.children.push_back(std::move(outer));
  c.children.push_back(std::move(inner));
  return c;
}

std::string PointCode::toString() const {
  switch (tag) {
    case Tag::Nat: return std::to_string(n);
    case Tag::Int: return std::to_string(z);
    case Tag::Rat: return q.str();
    case Tag::Ord: return a.toString();
    case Tag::Ord2: return "w1*(" + a.toString() + ")+" + b.toString();
    case Tag::U: return u.toString();
    case Tag::Part: return "#" + std::to_string(n) + ":" + child().toString();
    case Tag::Pair: return "(" + outer().toString() + ", " + inner().toString() + ")";
  }
  return "?";
}

void validatePoint(const OrderTerm& t, const PointCode& p) {
  using Tag = PointCode::Tag;
  const auto need = [&](bool ok) {
    if (!ok) invalid(t, p);
  };
  switch (t.kind()) {
    case Kind::Empty:
      invalid(t, p);
    case Kind::Single:
    case Kind::Fin:
      need(p.tag == Tag::Nat && p.n < t.size());
      return;
    case Kind::Nat:
    case Kind::NatRev:
      need(p.tag == Tag::Nat);
      return;
    case Kind::Int:
      need(p.tag == Tag::Int);
      return;
    case Kind::Rat:
      need(p.tag == Tag::Rat);
      return;
    case Kind::Omega1:
    case Kind::Omega1Rev:
      need(p.tag == Tag::Ord);
      return;
    case Kind::Omega2:
    case Kind::Omega2Rev:
      need(p.tag == Tag::Ord2);
      return;
    case Kind::ULine:
      need(p.tag == Tag::U && p.u.valid());
      return;
    case Kind::Sum:
      need(p.tag == Tag::Part && p.n < t.parts().size() && p.children.size() == 1);
      validatePoint(t.parts()[p.n], p.child());
      return;
    case Kind::Product:
      need(p.tag == Tag::Pair && p.children.size() == 2);
      validatePoint(t.outer(), p.outer());
      validatePoint(t.inner(), p.inner());
      return;
    case Kind::Rev:
      validatePoint(t.operand(), p);
      return;
  }
}

std::strong_ordering comparePoints(const OrderTerm& t, const PointCode& p, const PointCode& q) {
  validatePoint(t, p);
  validatePoint(t, q);
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
    case Kind::Nat:
      return p.n <=> q.n;
    case Kind::NatRev:
      return q.n <=> p.n;
    case Kind::Int:
      return p.z <=> q.z;
    case Kind::Rat:
      return cmpRational(p.q, q.q);
    case Kind::Omega1:
      return p.a <=> q.a;
    case Kind::Omega1Rev:
      return q.a <=> p.a;
    case Kind::Omega2:
      if (auto c = p.a <=> q.a; c != 0) return c;
      return p.b <=> q.b;
    case Kind::Omega2Rev:
      if (auto c = q.a <=> p.a; c != 0) return c;
      return q.b <=> p.b;
    case Kind::ULine:
      return compareU(p.u, q.u);
    case Kind::Sum:
      if (auto c = p.n <=> q.n; c != 0) return c;
      return comparePoints(t.parts()[p.n], p.child(), q.child());
    case Kind::Product:
      if (auto c = comparePoints(t.outer(), p.outer(), q.outer()); c != 0) return c;
      return comparePoints(t.inner(), p.inner(), q.inner());
    case Kind::Rev:
      return comparePoints(t.operand(), q, p);
    case Kind::Empty:
      break;
  }
  invalid(t, p);
}

namespace {

std::optional<PointCode> endPoint(const OrderTerm& t, bool wantFirst);

std::optional<PointCode> sumEnd(const OrderTerm& t, bool wantFirst) {
  const auto parts = t.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const std::size_t i = wantFirst ? k : parts.size() - 1 - k;
    if (parts[i].is(Kind::Empty)) continue;
    auto e = endPoint(parts[i], wantFirst);
    if (!e) return std::nullopt;
    return PointCode::part(i, *e);
  }
  return std::nullopt;
}

std::optional<PointCode> endPoint(const OrderTerm& t, bool wantFirst) {
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return PointCode::nat(wantFirst ? 0 : t.size() - 1);
    case Kind::Nat:
      if (wantFirst) return PointCode::nat(0);
      return std::nullopt;
    case Kind::NatRev:
      if (!wantFirst) return PointCode::nat(0);
      return std::nullopt;
    case Kind::Omega1:
      if (wantFirst) return PointCode::ordinal({});
      return std::nullopt;
    case Kind::Omega1Rev:
      if (!wantFirst) return PointCode::ordinal({});
      return std::nullopt;
    case Kind::Omega2:
      if (wantFirst) return PointCode::ordinalPair({}, {});
      return std::nullopt;
    case Kind::Omega2Rev:
      if (!wantFirst) return PointCode::ordinalPair({}, {});
      return std::nullopt;
    case Kind::Sum:
      return sumEnd(t, wantFirst);
    case Kind::Product: {
      auto a = endPoint(t.outer(), wantFirst);
      auto b = endPoint(t.inner(), wantFirst);
      if (!a || !b) return std::nullopt;
      return PointCode::pair(*a, *b);
    }
    case Kind::Rev:
      return endPoint(t.operand(), !wantFirst);
    default:
      return std::nullopt;
  }
}

const Ordinal kOneOrd = Ordinal::finite(1);

std::optional<PointCode> step(const OrderTerm& t, const PointCode& p, bool up) {
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
      if (up) return p.n + 1 < t.size() ? std::optional(PointCode::nat(p.n + 1)) : std::nullopt;
      return p.n > 0 ? std::optional(PointCode::nat(p.n - 1)) : std::nullopt;
    case Kind::Nat:
    case Kind::NatRev: {
      const bool count = (t.is(Kind::Nat) == up);  // moving away from the end point
      if (count) return PointCode::nat(p.n + 1);
      return p.n > 0 ? std::optional(PointCode::nat(p.n - 1)) : std::nullopt;
    }
    case Kind::Int:
      return PointCode::integer(up ? p.z + 1 : p.z - 1);
    case Kind::Omega1:
    case Kind::Omega1Rev: {
      if (t.is(Kind::Omega1) == up) return PointCode::ordinal(p.a + kOneOrd);
      if (!p.a.isSuccessor()) return std::nullopt;
      return PointCode::ordinal(p.a.predecessor());
    }
    case Kind::Omega2:
    case Kind::Omega2Rev: {
      if (t.is(Kind::Omega2) == up) return PointCode::ordinalPair(p.a, p.b + kOneOrd);
      if (!p.b.isSuccessor()) return std::nullopt;
      return PointCode::ordinalPair(p.a, p.b.predecessor());
    }
    case Kind::Sum: {
      const auto parts = t.parts();
      if (auto s = step(parts[p.n], p.child(), up)) return PointCode::part(p.n, *s);
      if (endPoint(parts[p.n], !up) != p.child()) return std::nullopt;
      // Crossing into the neighbouring part.
      for (std::size_t i = p.n;;) {
        if (up ? i + 1 >= parts.size() : i == 0) return std::nullopt;
        i = up ? i + 1 : i - 1;
        if (parts[i].is(Kind::Empty)) continue;
        auto e = endPoint(parts[i], up);
        if (!e) return std::nullopt;
        return PointCode::part(i, *e);
      }
    }
    case Kind::Product: {
      if (auto s = step(t.inner(), p.inner(), up)) return PointCode::pair(p.outer(), *s);
      if (endPoint(t.inner(), !up) != p.inner()) return std::nullopt;
      auto a = step(t.outer(), p.outer(), up);
      auto e = endPoint(t.inner(), up);
      if (!a || !e) return std::nullopt;
      return PointCode::pair(*a, *e);
    }
    case Kind::Rev:
      return step(t.operand(), p, !up);
    default:
      return std::nullopt;  // dense atoms
  }
}

}  // namespace

std::optional<PointCode> firstPoint(const OrderTerm& t) { return endPoint(t, true); }
std::optional<PointCode> lastPoint(const OrderTerm& t) { return endPoint(t, false); }

std::optional<PointCode> successor(const OrderTerm& t, const PointCode& p) {
  validatePoint(t, p);
  return step(t, p, true);
}

std::optional<PointCode> predecessor(const OrderTerm& t, const PointCode& p) {
  validatePoint(t, p);
  return step(t, p, false);
}

}  // namespace ordertype
