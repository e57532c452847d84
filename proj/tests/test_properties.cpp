// Laws checked over seeded generated terms.
#include "doctest.h"
#include "helpers.hpp"
#include "ordertype/algebra.hpp"
#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/generate.hpp"
#include "ordertype/rewrite.hpp"

using namespace ordertype;

namespace {

const std::vector<OrderTerm>& terms() {
  static const auto t = generateTerms({.depth = 3, .randomCount = 400, .seed = 7});
  return t;
}

}  // namespace

TEST_CASE("generator covers depth one exhaustively and stays normal") {
  CHECK(terms().size() >= 500);
  for (const auto& t : terms()) CHECK(normalize(t) == t);
}

TEST_CASE("normal forms round-trip through the printer") {
  for (const auto& t : terms()) {
    CAPTURE(t);
    CHECK(parse(t.toString()) == t);
  }
}

TEST_CASE("reversal is an involution on generated terms") {
  for (const auto& t : terms()) {
    CAPTURE(t);
    CHECK(reverse(reverse(t)) == t);
    CHECK(normalize(OrderTerm::rev(OrderTerm::rev(t))) == t);
  }
}

TEST_CASE("condensation duality and shortcut agreement") {
  for (const auto& t : terms()) {
    for (Level level : kLevels) {
      CAPTURE(t);
      CAPTURE(std::string(levelName(level)));
      const CondResult r = cc(t, level);
      const CondResult m = cc(reverse(t), level);
      CHECK(canonicalForm(m.quotient) == canonicalForm(reverse(r.quotient)));
      CHECK(m.mergeLeft == r.mergeRight);
      CHECK(m.mergeRight == r.mergeLeft);
      const CondResult s = detail::ccStructural(t, level);
      CHECK(canonicalForm(s.quotient) == canonicalForm(r.quotient));
      CHECK(s.mergeLeft == r.mergeLeft);
      CHECK(s.mergeRight == r.mergeRight);
    }
  }
}

TEST_CASE("profile invariants") {
  for (const auto& t : terms()) {
    CAPTURE(t);
    const Profile p = profile(t);
    const ConsistencyReport r = checkTFAE(t);
    CHECK(r.consistent());
    const auto& c = p.countable;
    if (c.condensesToOne) {
      CHECK(p.card <= Cardinality::aleph1());
      CHECK(p.cofin <= Cofinality::Omega1);
      CHECK(p.coin <= Cofinality::Omega1);
      CHECK((p.cofin == Cofinality::Omega1) == !c.smallTail);
      CHECK((p.coin == Cofinality::Omega1) == !c.smallHead);
    }
    if (p.hasLast) CHECK((p.finite.smallTail && c.smallTail));
    if (p.hasFirst) CHECK((p.finite.smallHead && c.smallHead));
    const Profile m = profile(reverse(t));
    CHECK(m.cofin == p.coin);
    CHECK(m.hasFirst == p.hasLast);
    CHECK(m.countable.smallHead == c.smallTail);
    CHECK(m.finite.smallHead == p.finite.smallTail);
  }
}

TEST_CASE("equality is reflexive, symmetric and respects profiles") {
  const auto& ts = terms();
  for (std::size_t i = 0; i < ts.size(); i += 7) {
    CHECK(eqOrderType(ts[i], ts[i]) == Verdict::Equal);
    for (std::size_t j = 0; j < ts.size(); j += 13) {
      const Verdict v = eqOrderType(ts[i], ts[j]);
      CHECK(v == eqOrderType(ts[j], ts[i]));
      if (profile(ts[i]) != profile(ts[j])) CHECK(v == Verdict::NotEqual);
    }
  }
}

TEST_CASE("quotients are no larger than the order") {
  for (const auto& t : terms()) {
    for (Level level : kLevels) {
      CAPTURE(t);
      CHECK(structuralProfile(cc(t, level).quotient).card <= structuralProfile(t).card);
    }
  }
}
