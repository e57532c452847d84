// Maps each point to its condensation class. Codes live in an unnormalized
// quotient shape built by the same rule order as cc; normalizing the shape
// gives the quotient cc reports (up to the registered rewrites).
#include "memo.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/ledger.hpp"
#include "ordertype/points.hpp"

namespace ordertype {

namespace {

using Tag = PointCode::Tag;

bool isSmall(const OrderTerm& t, Level level) { return structuralProfile(t).card.isSmall(level); }

// Relabels an ordinal after removing its least element: 1 + g = a.
Ordinal dropLeast(const Ordinal& a) {
  return a.isFinite() ? Ordinal::finite(a.finiteValue() - 1) : a;
}

std::size_t firstNonEmpty(const OrderTerm& sum) {
  for (std::size_t i = 0; i < sum.parts().size(); ++i)
    if (!sum.parts()[i].is(Kind::Empty)) return i;
  throw OrderError(ErrorKind::NoEndpoint, "empty sum");
}

std::size_t lastNonEmpty(const OrderTerm& sum) {
  for (std::size_t i = sum.parts().size(); i-- > 0;)
    if (!sum.parts()[i].is(Kind::Empty)) return i;
  throw OrderError(ErrorKind::NoEndpoint, "empty sum");
}

OrderTerm withPart(const OrderTerm& sum, std::size_t i, OrderTerm part) {
  std::vector<OrderTerm> parts(sum.parts().begin(), sum.parts().end());
  parts[i] = std::move(part);
  return OrderTerm::sum(std::move(parts));
}

[[noreturn]] void noEnd(const OrderTerm& s) {
  throw OrderError(ErrorKind::NoEndpoint, "no end point to drop in " + s.toString());
}

// Shapes keep sum positions stable (emptied parts stay as 0) so that part
// indices in codes survive the surgery.
OrderTerm dropFirstShape(const OrderTerm& s) {
  switch (s.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return OrderTerm::finite(s.size() - 1);
    case Kind::Nat:
    case Kind::Omega1:
    case Kind::Omega2:
      return s;
    case Kind::Sum: {
      const std::size_t i = firstNonEmpty(s);
      return withPart(s, i, dropFirstShape(s.parts()[i]));
    }
    case Kind::Product:
      return OrderTerm::sum({dropFirstShape(s.inner()), OrderTerm::product(dropFirstShape(s.outer()), s.inner())});
    default:
      noEnd(s);
  }
}

OrderTerm dropLastShape(const OrderTerm& s) {
  switch (s.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return OrderTerm::finite(s.size() - 1);
    case Kind::NatRev:
    case Kind::Omega1Rev:
    case Kind::Omega2Rev:
      return s;
    case Kind::Sum: {
      const std::size_t i = lastNonEmpty(s);
      return withPart(s, i, dropLastShape(s.parts()[i]));
    }
    case Kind::Product:
      return OrderTerm::sum({OrderTerm::product(dropLastShape(s.outer()), s.inner()), dropLastShape(s.inner())});
    default:
      noEnd(s);
  }
}

// Code of c (not the first point of s) inside dropFirstShape(s).
PointCode dropFirstCode(const OrderTerm& s, const PointCode& c) {
  switch (s.kind()) {
    case Kind::Single:
    case Kind::Fin:
    case Kind::Nat:
      return PointCode::nat(c.n - 1);
    case Kind::Omega1:
      return PointCode::ordinal(dropLeast(c.a));
    case Kind::Omega2:
      return c.a.isZero() ? PointCode::ordinalPair(c.a, dropLeast(c.b)) : c;
    case Kind::Sum:
      if (c.n != firstNonEmpty(s)) return c;
      return PointCode::part(c.n, dropFirstCode(s.parts()[c.n], c.child()));
    case Kind::Product:
      if (c.outer() == *firstPoint(s.outer())) return PointCode::part(0, dropFirstCode(s.inner(), c.inner()));
      return PointCode::part(1, PointCode::pair(dropFirstCode(s.outer(), c.outer()), c.inner()));
    default:
      noEnd(s);
  }
}

PointCode dropLastCode(const OrderTerm& s, const PointCode& c) {
  switch (s.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return c;
    case Kind::NatRev:
      return PointCode::nat(c.n - 1);
    case Kind::Omega1Rev:
      return PointCode::ordinal(dropLeast(c.a));
    case Kind::Omega2Rev:
      return c.a.isZero() ? PointCode::ordinalPair(c.a, dropLeast(c.b)) : c;
    case Kind::Sum:
      if (c.n != lastNonEmpty(s)) return c;
      return PointCode::part(c.n, dropLastCode(s.parts()[c.n], c.child()));
    case Kind::Product:
      if (c.outer() == *lastPoint(s.outer())) return PointCode::part(1, dropLastCode(s.inner(), c.inner()));
      return PointCode::part(0, PointCode::pair(dropLastCode(s.outer(), c.outer()), c.inner()));
    default:
      noEnd(s);
  }
}

// Concatenation of segment shapes where some seams identify the last class
// on the left with the first class on the right.
struct Joined {
  std::vector<OrderTerm> pieces;  // per part, before surgery
  std::vector<bool> merged;       // merged with everything to the left
  std::vector<OrderTerm> segs;    // after surgery

  OrderTerm shape() const { return OrderTerm::sum(segs); }

  PointCode code(std::size_t i, const PointCode& c) const {
    if (!merged[i]) return PointCode::part(i, c);
    if (c != *firstPoint(pieces[i])) return PointCode::part(i, dropFirstCode(pieces[i], c));
    // The seam class lives at the end of the nearest nonempty segment.
    for (std::size_t j = i; j-- > 0;)
      if (!segs[j].is(Kind::Empty)) return PointCode::part(j, *lastPoint(segs[j]));
    throw OrderError(ErrorKind::InvalidCode, "merged class without a left neighbour");
  }
};

Joined join(std::vector<OrderTerm> pieces, std::vector<bool> merged) {
  Joined j{std::move(pieces), std::move(merged), {}};
  for (std::size_t i = 0; i < j.pieces.size(); ++i)
    j.segs.push_back(j.merged[i] ? dropFirstShape(j.pieces[i]) : j.pieces[i]);
  return j;
}

OrderTerm glueShape(const OrderTerm& a, const OrderTerm& q);

// Seam flags of a sum of copies-blocks under glue.
std::vector<bool> glueSeams(const OrderTerm& a) {
  std::vector<bool> merged;
  bool prevLast = false;
  bool any = false;
  for (const auto& part : a.parts()) {
    if (part.is(Kind::Empty)) {
      merged.push_back(false);
      continue;
    }
    merged.push_back(any && prevLast && hasFirst(part));
    prevLast = hasLast(part);
    any = true;
  }
  return merged;
}

Joined glueJoin(const OrderTerm& a, const OrderTerm& q) {
  std::vector<OrderTerm> pieces;
  for (const auto& part : a.parts()) pieces.push_back(part.is(Kind::Empty) ? part : glueShape(part, q));
  return join(std::move(pieces), glueSeams(a));
}

OrderTerm glueShapeImpl(const OrderTerm& a, const OrderTerm& q) {
  switch (a.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return OrderTerm::sum({OrderTerm::product(a, dropLastShape(q)), OrderTerm::finite(1)});
    case Kind::Rat:
    case Kind::ULine:
      return OrderTerm::product(a, q);
    case Kind::Nat:
    case Kind::Int:
    case Kind::Omega1:
    case Kind::Omega2:
      return OrderTerm::product(a, dropLastShape(q));
    case Kind::NatRev:
    case Kind::Omega1Rev:
    case Kind::Omega2Rev:
      return OrderTerm::product(a, dropFirstShape(q));
    case Kind::Sum:
      return glueJoin(a, q).shape();
    case Kind::Product: {
      const OrderTerm g = glueShape(a.inner(), q);
      if (hasFirst(a.inner()) && hasLast(a.inner())) return glueShape(a.outer(), g);
      return OrderTerm::product(a.outer(), g);
    }
    default:
      unsupported("cannot glue copies indexed by " + a.toString());
  }
}

detail::MemoCache<OrderTerm>& glueCache() {
  static detail::MemoCache<OrderTerm> cache;
  return cache;
}

OrderTerm glueShape(const OrderTerm& a, const OrderTerm& q) {
  const OrderTerm key = OrderTerm::product(a, q);
  if (auto hit = glueCache().find(key, Level::Countable)) return *hit;
  OrderTerm s = glueShapeImpl(a, q);
  glueCache().insert(key, Level::Countable, s);
  return s;
}

// Class code of (x, c) where x is an index of a and c a class of q.
PointCode glueCode(const OrderTerm& a, const OrderTerm& q, const PointCode& x, const PointCode& c) {
  switch (a.kind()) {
    case Kind::Single:
    case Kind::Fin: {
      if (c != *lastPoint(q)) return PointCode::part(0, PointCode::pair(x, dropLastCode(q, c)));
      if (x.n + 1 == a.size()) return PointCode::part(1, PointCode::nat(0));
      return PointCode::part(0, PointCode::pair(PointCode::nat(x.n + 1), dropLastCode(q, *firstPoint(q))));
    }
    case Kind::Rat:
    case Kind::ULine:
      return PointCode::pair(x, c);
    case Kind::Nat:
    case Kind::Int:
    case Kind::Omega1:
    case Kind::Omega2:
      if (c != *lastPoint(q)) return PointCode::pair(x, dropLastCode(q, c));
      return PointCode::pair(*successor(a, x), dropLastCode(q, *firstPoint(q)));
    case Kind::NatRev:
    case Kind::Omega1Rev:
    case Kind::Omega2Rev:
      if (c != *firstPoint(q)) return PointCode::pair(x, dropFirstCode(q, c));
      return PointCode::pair(*predecessor(a, x), dropFirstCode(q, *lastPoint(q)));
    case Kind::Sum: {
      const OrderTerm& part = a.parts()[x.n];
      return glueJoin(a, q).code(x.n, glueCode(part, q, x.child(), c));
    }
    case Kind::Product: {
      const OrderTerm g = glueShape(a.inner(), q);
      const PointCode inner = glueCode(a.inner(), q, x.inner(), c);
      if (hasFirst(a.inner()) && hasLast(a.inner())) return glueCode(a.outer(), g, x.outer(), inner);
      return PointCode::pair(x.outer(), inner);
    }
    default:
      unsupported("cannot glue copies indexed by " + a.toString());
  }
}

OrderTerm shapeImpl(const OrderTerm& t, Level level);

detail::MemoCache<OrderTerm>& shapeCache() {
  static detail::MemoCache<OrderTerm> cache;
  return cache;
}

OrderTerm shapeOf(const OrderTerm& t, Level level) {
  if (auto hit = shapeCache().find(t, level)) return *hit;
  OrderTerm s = shapeImpl(t, level);
  shapeCache().insert(t, level, s);
  return s;
}

Joined sumJoin(const OrderTerm& t, Level level) {
  std::vector<OrderTerm> pieces;
  std::vector<bool> merged;
  bool prevRight = false;
  bool any = false;
  for (const auto& part : t.parts()) {
    if (part.is(Kind::Empty)) {
      pieces.push_back(part);
      merged.push_back(false);
      continue;
    }
    const CondResult r = cc(part, level);
    pieces.push_back(shapeOf(part, level));
    merged.push_back(any && prevRight && r.mergeLeft);
    prevRight = r.mergeRight;
    any = true;
  }
  return join(std::move(pieces), std::move(merged));
}

enum class ProductRule { SmallInner, IdentityInner, Copies, Glued };

ProductRule productRule(const OrderTerm& t, Level level) {
  const OrderTerm& b = t.inner();
  if (isSmall(b, level)) return ProductRule::SmallInner;
  const CondResult inner = cc(b, level);
  if (inner.quotient.is(Kind::Single)) return ProductRule::IdentityInner;
  return inner.mergeLeft && inner.mergeRight ? ProductRule::Glued : ProductRule::Copies;
}

OrderTerm shapeImpl(const OrderTerm& t, Level level) {
  if (t.is(Kind::Empty)) return t;
  if (isSmall(t, level)) return OrderTerm::finite(1);
  switch (t.kind()) {
    case Kind::Sum:
      return sumJoin(t, level).shape();
    case Kind::Product:
      switch (productRule(t, level)) {
        case ProductRule::SmallInner: return shapeOf(t.outer(), level);
        case ProductRule::IdentityInner: return t.outer();
        case ProductRule::Copies: return OrderTerm::product(t.outer(), shapeOf(t.inner(), level));
        case ProductRule::Glued: return glueShape(t.outer(), shapeOf(t.inner(), level));
      }
      break;
    case Kind::Rev:
      unsupported("class shapes need normal terms");
    default:
      return atomRow(t.kind()).at(level).quotient;
  }
  return t;
}

PointCode atomClass(const OrderTerm& t, const PointCode& p, Level level) {
  if (level == Level::Countable) {
    switch (t.kind()) {
      case Kind::Omega2:
      case Kind::Omega2Rev:
        return PointCode::ordinalPair({}, p.a);  // the w1-block holding p
      default:
        return PointCode::nat(0);
    }
  }
  switch (t.kind()) {
    case Kind::Rat:
    case Kind::ULine:
      return p;  // every class is a single point
    case Kind::Omega1:
    case Kind::Omega1Rev:
      return PointCode::ordinal(p.a.divideByOmega().first);  // the w-block holding p
    case Kind::Omega2:
    case Kind::Omega2Rev:
      return PointCode::ordinalPair(p.a, p.b.divideByOmega().first);
    default:
      return PointCode::nat(0);
  }
}

PointCode codeOf(const OrderTerm& t, const PointCode& p, Level level) {
  if (isSmall(t, level)) return PointCode::nat(0);
  switch (t.kind()) {
    case Kind::Sum:
      return sumJoin(t, level).code(p.n, codeOf(t.parts()[p.n], p.child(), level));
    case Kind::Product:
      switch (productRule(t, level)) {
        case ProductRule::SmallInner: return codeOf(t.outer(), p.outer(), level);
        case ProductRule::IdentityInner: return p.outer();
        case ProductRule::Copies: return PointCode::pair(p.outer(), codeOf(t.inner(), p.inner(), level));
        case ProductRule::Glued:
          return glueCode(t.outer(), shapeOf(t.inner(), level), p.outer(), codeOf(t.inner(), p.inner(), level));
      }
      break;
    case Kind::Rev:
      unsupported("class codes need normal terms");
    default:
      return atomClass(t, p, level);
  }
  return p;
}

}  // namespace

OrderTerm classShape(const OrderTerm& t, Level level) { return shapeOf(t, level); }

ClassIndex classIndex(const OrderTerm& t, const PointCode& p, Level level) {
  validatePoint(t, p);
  return {shapeOf(t, level), codeOf(t, p, level)};
}

}  // namespace ordertype
