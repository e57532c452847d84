#include "doctest.h"
#include "helpers.hpp"
#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/ledger.hpp"

#include <fstream>
#include <sstream>

using namespace ordertype;
using ordertype::test::norm;

TEST_CASE("profiles of basic orders") {
  const Profile w1 = profile(norm("w1"));
  CHECK(w1.card == Cardinality::aleph1());
  CHECK(w1.cofin == Cofinality::Omega1);
  CHECK(w1.coin == Cofinality::One);
  CHECK(w1.countable.smallHead);
  CHECK_FALSE(w1.countable.smallTail);
  CHECK(w1.countable.condensesToOne);
  CHECK(w1.countable.rightIdentity);

  const Profile q = profile(norm("q"));
  CHECK(q.card == Cardinality::aleph0());
  CHECK(q.countable.condensesToOne);
  CHECK_FALSE(q.countable.rightIdentity);
  CHECK_FALSE(q.finite.condensesToOne);

  CHECK_FALSE(profile(norm("w1 + 1")).countable.condensesToOne);

  const Profile e = profile(OrderTerm());
  CHECK(e.card == Cardinality::finite(0));
  CHECK(e.cofin == Cofinality::Zero);
  CHECK_FALSE(e.countable.condensesToOne);

  const Profile u = profile(norm("U"));
  CHECK(u.cofin == Cofinality::Omega1);
  CHECK(u.coin == Cofinality::Omega1);
  CHECK(u.card == Cardinality::aleph1());
}

TEST_CASE("product and sum attributes") {
  const Profile p = structuralProfile(norm("q * w1"));
  CHECK(p.cofin == Cofinality::Omega);
  CHECK_FALSE(p.countable.smallTail);
  const Profile s = structuralProfile(norm("w1 * w + q"));
  CHECK(s.cofin == Cofinality::Omega);
  CHECK(s.card == Cardinality::aleph1());
  CHECK(s.countable.smallTail);
  CHECK(structuralProfile(norm("(w + 1) * w1*")).countable.smallTail);
  CHECK(structuralProfile(norm("w * 3")).cofin == Cofinality::Omega);
  CHECK(structuralProfile(norm("w2 * 3")).card == Cardinality::aleph2Plus());
}

TEST_CASE("three characterisations of right identities") {
  const auto report = [](const char* s) { return checkTFAE(norm(s)); };
  auto u = report("U");
  CHECK((u.cofinalityForm && u.tailForm && u.cardinalityForm));
  auto q = report("q");
  CHECK(!(q.cofinalityForm || q.tailForm || q.cardinalityForm));
  auto w1p = report("w1 + 1");
  CHECK(!(w1p.cofinalityForm || w1p.tailForm || w1p.cardinalityForm));
  for (const char* s : {"w1", "w1*", "w1* + w1", "w1* + q", "q + w1", "w * w1", "q * w1", "U * q",
                        "z * w1*", "w1 + w1*", "w2", "w1 * w"}) {
    CAPTURE(std::string(s));
    CHECK(report(s).consistent());
  }
}

TEST_CASE("reversal mirrors the profile") {
  for (const char* s : {"w1 + q", "z * (w + 1)", "U * 2 + w1*", "w2 + w", "(w1 + 1) * w"}) {
    CAPTURE(std::string(s));
    const Profile p = profile(norm(s));
    const Profile r = profile(reverse(norm(s)));
    CHECK(p.card == r.card);
    CHECK(p.cofin == r.coin);
    CHECK(p.hasFirst == r.hasLast);
    for (Level level : kLevels) {
      CHECK(p.at(level).smallHead == r.at(level).smallTail);
      CHECK(p.at(level).condensesToOne == r.at(level).condensesToOne);
    }
  }
}

TEST_CASE("shipped ledger matches the compiled-in copy") {
  std::ifstream in(ORDERTYPE_LEDGER_PATH);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == ledgerText());
  const auto rows = parseLedger(ss.str());
  CHECK(rows.size() == 9);
  for (const auto& row : rows) {
    CAPTURE(OrderTerm::atom(row.kind).toString());
    for (Level level : kLevels) {
      const AtomLevelRow& lr = row.at(level);
      CHECK_FALSE(lr.note.empty());
      // a small order has every end segment small and condenses to one class
      if (row.card.isSmall(level)) {
        CHECK(lr.quotient.is(Kind::Single));
        CHECK((lr.smallHead && lr.smallTail && lr.mergeLeft && lr.mergeRight));
      }
      // flags refer to classes that exist
      if (lr.mergeLeft) CHECK(hasFirst(lr.quotient));
      if (lr.mergeRight) CHECK(hasLast(lr.quotient));
      // a mergeable end class means a small end segment
      if (lr.mergeLeft) CHECK(lr.smallHead);
      if (lr.mergeRight) CHECK(lr.smallTail);
    }
  }
}
