#include "ordertype/classify.hpp"

#include "memo.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/ledger.hpp"
#include "ordertype/normalize.hpp"

namespace ordertype {

const char* cofinalityName(Cofinality c) {
  switch (c) {
    case Cofinality::Zero: return "0";
    case Cofinality::One: return "1";
    case Cofinality::Omega: return "w";
    case Cofinality::Omega1: return "w1";
    case Cofinality::Omega2: return "w2";
  }
  return "?";
}

Cofinality parseCofinality(const std::string& name) {
  for (auto c : {Cofinality::Zero, Cofinality::One, Cofinality::Omega, Cofinality::Omega1, Cofinality::Omega2})
    if (name == cofinalityName(c)) return c;
  throw OrderError(ErrorKind::InvalidArgument, "unknown cofinality '" + name + "'");
}

namespace {

detail::MemoCache<Profile>& structuralCache() {
  static detail::MemoCache<Profile> cache;
  return cache;
}

Profile mirrored(Profile p) {
  std::swap(p.cofin, p.coin);
  std::swap(p.hasFirst, p.hasLast);
  for (Level level : kLevels) std::swap(p.at(level).smallHead, p.at(level).smallTail);
  return p;
}

Profile computeStructural(const OrderTerm& t) {
  Profile p;
  switch (t.kind()) {
    case Kind::Empty:
      return p;
    case Kind::Single:
    case Kind::Fin:
      p.card = Cardinality::finite(t.size());
      p.cofin = p.coin = Cofinality::One;
      p.hasFirst = p.hasLast = true;
      for (Level level : kLevels) p.at(level).smallHead = p.at(level).smallTail = true;
      return p;
    case Kind::Sum: {
      std::vector<Profile> parts;
      for (const auto& part : t.parts())
        if (!part.is(Kind::Empty)) parts.push_back(structuralProfile(part));
      if (parts.empty()) return p;
      for (const auto& q : parts) p.card = p.card + q.card;
      const Profile& first = parts.front();
      const Profile& last = parts.back();
      p.coin = first.coin;
      p.cofin = last.cofin;
      p.hasFirst = first.hasFirst;
      p.hasLast = last.hasLast;
      for (Level level : kLevels) {
        p.at(level).smallHead = first.at(level).smallHead;
        p.at(level).smallTail = last.at(level).smallTail;
      }
      return p;
    }
    case Kind::Product: {
      const Profile a = structuralProfile(t.outer());
      const Profile b = structuralProfile(t.inner());
      if (a.card.isZero() || b.card.isZero()) return p;
      p.card = a.card * b.card;
      p.cofin = a.hasLast ? b.cofin : a.cofin;
      p.coin = a.hasFirst ? b.coin : a.coin;
      p.hasFirst = a.hasFirst && b.hasFirst;
      p.hasLast = a.hasLast && b.hasLast;
      for (Level level : kLevels) {
        const bool innerSmall = b.card.isSmall(level);
        p.at(level).smallHead =
            a.hasFirst ? b.at(level).smallHead : a.at(level).smallHead && innerSmall;
        p.at(level).smallTail =
            a.hasLast ? b.at(level).smallTail : a.at(level).smallTail && innerSmall;
      }
      return p;
    }
    case Kind::Rev:
      return mirrored(structuralProfile(t.operand()));
    default: {
      const AtomRow& row = atomRow(t.kind());
      p.card = row.card;
      p.cofin = row.cofin;
      p.coin = row.coin;
      p.hasFirst = hasFirst(t);
      p.hasLast = hasLast(t);
      for (Level level : kLevels) {
        p.at(level).smallHead = row.at(level).smallHead;
        p.at(level).smallTail = row.at(level).smallTail;
      }
      return p;
    }
  }
}

}  // namespace

Profile structuralProfile(const OrderTerm& t) {
  // Both levels live in one profile; the cache key level is fixed.
  if (auto hit = structuralCache().find(t, Level::Countable)) return *hit;
  Profile p = computeStructural(t);
  structuralCache().insert(t, Level::Countable, p);
  return p;
}

Profile profile(const OrderTerm& t) {
  Profile p = structuralProfile(t);
  for (Level level : kLevels) {
    auto& lp = p.at(level);
    lp.condensesToOne = cc(t, level).quotient.is(Kind::Single);
    lp.rightIdentity = lp.condensesToOne && !p.card.isSmall(level);
  }
  return p;
}

ConsistencyReport checkTFAE(const OrderTerm& t) {
  const Profile p = profile(t);
  const LevelProfile& c = p.countable;
  ConsistencyReport r;
  r.cofinalityForm =
      c.condensesToOne && (p.cofin == Cofinality::Omega1 || p.coin == Cofinality::Omega1);
  r.tailForm = c.condensesToOne && (!c.smallTail || !c.smallHead);
  r.cardinalityForm = c.condensesToOne && !p.card.isSmall(Level::Countable);
  return r;
}

}  // namespace ordertype
