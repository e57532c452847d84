// Interval cardinalities read off the term structure. Deliberately shares
// nothing with the condensation rules: it is the oracle they are tested
// against.
#include "ordertype/errors.hpp"
#include "ordertype/points.hpp"

namespace ordertype {

namespace {

using C = Cardinality;

C ordinalCard(const Ordinal& a) { return a.isFinite() ? C::finite(a.finiteValue()) : C::aleph0(); }
C plusOne(const C& c) { return c + C::finite(1); }

C size(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Empty:
    case Kind::Single:
    case Kind::Fin:
      return C::finite(t.size());
    case Kind::Nat:
    case Kind::NatRev:
    case Kind::Int:
    case Kind::Rat:
      return C::aleph0();
    case Kind::Omega1:
    case Kind::Omega1Rev:
    case Kind::ULine:
      return C::aleph1();
    case Kind::Omega2:
    case Kind::Omega2Rev:
      return C::aleph2Plus();
    case Kind::Sum: {
      C total = C::finite(0);
      for (const auto& p : t.parts()) total = total + size(p);
      return total;
    }
    case Kind::Product:
      return size(t.outer()) * size(t.inner());
    case Kind::Rev:
      return size(t.operand());
  }
  return C::finite(0);
}

C head(const OrderTerm& t, const PointCode& p);
C tail(const OrderTerm& t, const PointCode& p);

// |[p, q]| for p <= q.
C span(const OrderTerm& t, const PointCode& p, const PointCode& q) {
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
    case Kind::Nat:
      return C::finite(q.n - p.n + 1);
    case Kind::NatRev:
      return C::finite(p.n - q.n + 1);
    case Kind::Int:
      return C::finite(static_cast<std::uint64_t>(q.z - p.z) + 1);
    case Kind::Rat:
      return p.q == q.q ? C::finite(1) : C::aleph0();
    case Kind::Omega1:
      return plusOne(ordinalCard(q.a.minusLeft(p.a)));
    case Kind::Omega1Rev:
      return plusOne(ordinalCard(p.a.minusLeft(q.a)));
    case Kind::Omega2:
      // A nontrivial stretch across blocks contains the tail of a w1-block.
      if (p.a != q.a) return C::aleph1();
      return plusOne(ordinalCard(q.b.minusLeft(p.b)));
    case Kind::Omega2Rev:
      if (p.a != q.a) return C::aleph1();
      return plusOne(ordinalCard(p.b.minusLeft(q.b)));
    case Kind::ULine:
      return p.u == q.u ? C::finite(1) : C::aleph0();
    case Kind::Sum: {
      const auto parts = t.parts();
      if (p.n == q.n) return span(parts[p.n], p.child(), q.child());
      C total = tail(parts[p.n], p.child()) + head(parts[q.n], q.child());
      for (std::uint64_t i = p.n + 1; i < q.n; ++i) total = total + size(parts[i]);
      return total;
    }
    case Kind::Product: {
      const OrderTerm& a = t.outer();
      const OrderTerm& b = t.inner();
      if (p.outer() == q.outer()) return span(b, p.inner(), q.inner());
      const C between = span(a, p.outer(), q.outer()).minus(2);
      return tail(b, p.inner()) + between * size(b) + head(b, q.inner());
    }
    case Kind::Rev:
      return span(t.operand(), q, p);
    case Kind::Empty:
      break;
  }
  throw OrderError(ErrorKind::InvalidCode, "no points in the empty order");
}

// |{x : x <= p}|
C head(const OrderTerm& t, const PointCode& p) {
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
    case Kind::Nat:
      return C::finite(p.n + 1);
    case Kind::Omega1:
      return plusOne(ordinalCard(p.a));
    case Kind::Omega2:
      return p.a.isZero() ? plusOne(ordinalCard(p.b)) : C::aleph1();
    case Kind::NatRev:
    case Kind::Int:
    case Kind::Rat:
      return C::aleph0();
    case Kind::Omega1Rev:
    case Kind::ULine:
      return C::aleph1();
    case Kind::Omega2Rev:
      return C::aleph2Plus();
    case Kind::Sum: {
      C total = head(t.parts()[p.n], p.child());
      for (std::uint64_t i = 0; i < p.n; ++i) total = total + size(t.parts()[i]);
      return total;
    }
    case Kind::Product:
      return head(t.outer(), p.outer()).minus(1) * size(t.inner()) + head(t.inner(), p.inner());
    case Kind::Rev:
      return tail(t.operand(), p);
    case Kind::Empty:
      break;
  }
  throw OrderError(ErrorKind::InvalidCode, "no points in the empty order");
}

// |{x : x >= p}|
C tail(const OrderTerm& t, const PointCode& p) {
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return C::finite(t.size() - p.n);
    case Kind::NatRev:
      return C::finite(p.n + 1);
    case Kind::Omega1Rev:
      return plusOne(ordinalCard(p.a));
    case Kind::Omega2Rev:
      return p.a.isZero() ? plusOne(ordinalCard(p.b)) : C::aleph1();
    case Kind::Nat:
    case Kind::Int:
    case Kind::Rat:
      return C::aleph0();
    case Kind::Omega1:
    case Kind::ULine:
      return C::aleph1();
    case Kind::Omega2:
      return C::aleph2Plus();
    case Kind::Sum: {
      const auto parts = t.parts();
      C total = tail(parts[p.n], p.child());
      for (std::uint64_t i = p.n + 1; i < parts.size(); ++i) total = total + size(parts[i]);
      return total;
    }
    case Kind::Product:
      return tail(t.outer(), p.outer()).minus(1) * size(t.inner()) + tail(t.inner(), p.inner());
    case Kind::Rev:
      return head(t.operand(), p);
    case Kind::Empty:
      break;
  }
  throw OrderError(ErrorKind::InvalidCode, "no points in the empty order");
}

}  // namespace

Cardinality intervalClass(const OrderTerm& t, const PointCode& p, const PointCode& q) {
  const auto order = comparePoints(t, p, q);  // validates both codes
  return order <= 0 ? span(t, p, q) : span(t, q, p);
}

}  // namespace ordertype
