#include "ordertype/condense.hpp"

#include "memo.hpp"
#include "ordertype/classify.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/ledger.hpp"
#include "ordertype/rewrite.hpp"

namespace ordertype {

Ordinal ccOrdinal(const Ordinal& delta, const Ordinal& rho) {
  return rho.isZero() ? delta : delta + Ordinal::finite(1);
}

namespace {

const OrderTerm kOne = OrderTerm::finite(1);

bool isSmall(const OrderTerm& t, Level level) {
  return structuralProfile(t).card.isSmall(level);
}

// Quotient of an ordinal, plus whether it has a last class.
CondResult ccOrdinalForm(const OrdinalForm& f, Level level, bool mirrored) {
  // Countable: w1*d + r condenses to d + [r > 0]. Finite: the same with w.
  OrdinalForm q{f.omega2Copies, {}};
  bool tailClass = false;
  if (level == Level::Countable) {
    tailClass = !f.tail().isZero();
    for (std::size_t k = f.coeffs.size(); k-- > 1;) q = q + OrdinalForm::omega1Power(k - 1, f.coeffs[k]);
  } else {
    const auto [blocks, rest] = f.tail().divideByOmega();
    tailClass = rest > 0;
    for (std::size_t k = f.coeffs.size(); k-- > 1;) q = q + OrdinalForm::omega1Power(k, f.coeffs[k]);
    q = q + OrdinalForm::countable(blocks);
  }
  if (tailClass) q = q + OrdinalForm::countable(Ordinal::finite(1));
  CondResult r{ordinalTerm(q, mirrored), true, tailClass};
  if (mirrored) std::swap(r.mergeLeft, r.mergeRight);
  return r;
}

// Joins two quotients, identifying the seam classes when asked to.
OrderTerm joinQuotients(const OrderTerm& left, const OrderTerm& right, bool merge) {
  if (!merge) return normalSum({left, right});
  return normalSum({detachLast(left), kOne, detachFirst(right)});
}

CondResult ccSum(const OrderTerm& t, Level level, CondResult (*rec)(const OrderTerm&, Level)) {
  std::optional<CondResult> acc;
  for (const auto& part : t.parts()) {
    if (part.is(Kind::Empty)) continue;
    CondResult r = rec(part, level);
    if (!acc) {
      acc = r;
      continue;
    }
    acc->quotient = joinQuotients(acc->quotient, r.quotient, acc->mergeRight && r.mergeLeft);
    acc->mergeRight = r.mergeRight;
  }
  return acc.value_or(CondResult{});
}

CondResult ccProduct(const OrderTerm& t, Level level, CondResult (*rec)(const OrderTerm&, Level)) {
  const OrderTerm& a = t.outer();
  const OrderTerm& b = t.inner();
  if (a.is(Kind::Empty) || b.is(Kind::Empty)) return {};
  // small inner factor: condense like the outer one
  if (isSmall(b, level)) return rec(a, level);
  const CondResult inner = rec(b, level);
  const bool first = hasFirst(a);
  const bool last = hasLast(a);
  // inner factor condenses to a point
  if (inner.quotient.is(Kind::Single)) {
    const Profile pb = structuralProfile(b);
    return {a, pb.at(level).smallHead && first, pb.at(level).smallTail && last};
  }
  // condense copies separately, gluing across seams
  const bool glued = inner.mergeLeft && inner.mergeRight;
  const OrderTerm q = glued ? glue(a, inner.quotient) : normalProduct(a, inner.quotient);
  return {q, inner.mergeLeft && first, inner.mergeRight && last};
}

CondResult ccAtom(const OrderTerm& t, Level level) {
  const AtomLevelRow& row = atomRow(t.kind()).at(level);
  return {row.quotient, row.mergeLeft, row.mergeRight};
}

CondResult compute(const OrderTerm& t, Level level, bool shortcut,
                   CondResult (*rec)(const OrderTerm&, Level)) {
  if (t.is(Kind::Empty)) return {};
  // small orders are a single class
  if (isSmall(t, level)) return {kOne, true, true};
  if (shortcut) {
    if (auto f = asOrdinal(t)) return ccOrdinalForm(*f, level, false);
    if (auto f = asReverseOrdinal(t)) return ccOrdinalForm(*f, level, true);
  }
  switch (t.kind()) {
    case Kind::Sum:
      return ccSum(t, level, rec);
    case Kind::Product:
      return ccProduct(t, level, rec);
    case Kind::Rev: {
      CondResult r = rec(normalize(t.operand()), level);
      return {reverse(r.quotient), r.mergeRight, r.mergeLeft};
    }
    default:
      return ccAtom(t, level);
  }
}

detail::MemoCache<CondResult>& ccCache() {
  static detail::MemoCache<CondResult> cache;
  return cache;
}

CondResult ccMemo(const OrderTerm& t, Level level) {
  if (auto hit = ccCache().find(t, level)) return *hit;
  CondResult r = compute(t, level, true, &ccMemo);
  ccCache().insert(t, level, r);
  return r;
}

CondResult ccPlain(const OrderTerm& t, Level level) { return compute(t, level, false, &ccPlain); }

OrderTerm glueImpl(const OrderTerm& a, const OrderTerm& q) {
  switch (a.kind()) {
    case Kind::Empty:
      return a;
    case Kind::Single:
    case Kind::Fin:
      return normalSum({normalProduct(a, detachLast(q)), kOne});
    case Kind::Rat:
    case Kind::ULine:
      return normalProduct(a, q);  // no adjacent indices
    case Kind::Int:
      return zetaProduct(detachLast(q));  // rotation-invariant, so pick canonically
    case Kind::Nat:
    case Kind::Omega1:
    case Kind::Omega2:
      return normalProduct(a, detachLast(q));  // every index has a successor
    case Kind::NatRev:
    case Kind::Omega1Rev:
    case Kind::Omega2Rev:
      return normalProduct(a, detachFirst(q));  // every index has a predecessor
    case Kind::Sum: {
      std::optional<OrderTerm> acc;
      bool accLast = false;
      for (const auto& part : a.parts()) {
        if (part.is(Kind::Empty)) continue;
        OrderTerm g = glueImpl(part, q);
        acc = acc ? joinQuotients(*acc, g, accLast && hasFirst(part)) : g;
        accLast = hasLast(part);
      }
      return acc.value_or(OrderTerm());
    }
    case Kind::Product: {
      const OrderTerm& inner = a.inner();
      const OrderTerm g = glueImpl(inner, q);
      if (hasFirst(inner) && hasLast(inner)) return glueImpl(a.outer(), g);
      return normalProduct(a.outer(), g);
    }
    default:
      unsupported("cannot glue copies indexed by " + a.toString());
  }
}

}  // namespace

CondResult cc(const OrderTerm& t, Level level) { return ccMemo(t, level); }

CondResult detail::ccStructural(const OrderTerm& t, Level level) { return ccPlain(t, level); }

OrderTerm glue(const OrderTerm& a, const OrderTerm& q) {
  if (!hasFirst(q) || !hasLast(q))
    throw OrderError(ErrorKind::NoEndpoint, "glue needs a quotient with both end classes");
  return glueImpl(a, q);
}

bool isRightIdentity(const OrderTerm& t, Level level) {
  return !isSmall(t, level) && cc(t, level).quotient.is(Kind::Single);
}

}  // namespace ordertype
