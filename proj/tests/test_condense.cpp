#include "doctest.h"
#include "helpers.hpp"
#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/rewrite.hpp"

using namespace ordertype;
using ordertype::test::norm;

namespace {

std::string ccs(const std::string& s, Level level = Level::Countable) {
  const CondResult r = cc(norm(s), level);
  return r.quotient.toString() + (r.mergeLeft ? " L" : "") + (r.mergeRight ? " R" : "");
}

const char* const kTerms[] = {
    "0", "1", "5", "w", "w*", "z", "q", "w1", "w1*", "w2", "rev(w2)", "U", "w1 + 1", "w1* + w1",
    "w1 + w1*", "w * w1 + 5", "w1 * w", "q * w1", "w1 * q", "z * (w1 + w1*)", "w * (w1 + w1*)",
    "3 * (w1 + w1*)", "q * (w1 + w1*)", "(w1 + 1) * (w1 + w1*)", "w1 * (w1 + 1)", "U + w1",
    "w1* + q + w1", "w1 + q + w1*", "z * (w1 + 3 + w1*)", "w1* * (w1 + w1*)", "w2 * (w1 + w1*)",
    "(z + w1) * (1 + w1*)", "w1 * (q + w1*)", "z * (w + w*)", "w * (w + w*)", "q * (w + w*)",
    "w1 * (w + w*)", "U * (w + w*)", "w1* + w + 2", "(w + 1) * w", "rev(w2) + w1 + U",
};

}  // namespace

TEST_CASE("condensation instances") {
  CHECK(ccs("w1") == "1 L");
  CHECK(ccs("w1 + 1") == "2 L R");
  CHECK(ccs("w2") == "w2 L");
  CHECK(ccs("U") == "1");
  CHECK(ccs("w1* + w1") == "1");
  CHECK(ccs("z", Level::Finite) == "1");
  CHECK(ccs("q", Level::Finite) == "q");
  CHECK(ccs("w + 3", Level::Finite) == "2 L R");
  CHECK(ccs("w * w1 + 5") == "w + 1 L R");
  CHECK(ccs("0") == "0");
  CHECK(ccs("7") == "1 L R");
  CHECK(ccs("q") == "1 L R");
}

TEST_CASE("products condense by the product rules") {
  // small inner factor
  CHECK(ccs("w1 * 3") == "1 L");
  // right-identity inner factor keeps the outer factor
  CHECK(ccs("q * w1") == "q");
  CHECK(ccs("(w1 + 1) * w1") == "w1 + 1 L");
  CHECK(ccs("z * w1*") == "z");
  // two mergeable end classes glue across adjacent copies
  CHECK(ccs("w * (w1 + w1*)") == "w L");
  CHECK(ccs("3 * (w1 + w1*)") == "4 L R");
  CHECK(ccs("q * (w1 + w1*)") == "q * 2");
  CHECK(ccs("z * (w1 + 1 + w1*)") == "z");
  // without mergeable ends copies stay apart
  CHECK(ccs("z * (w1 + 1 + w1)") == "z * 2");
  CHECK(ccs("z * (w1 + w1 + 1)") == "z");
  CHECK(ccs("z * (w1 + q + w1*)") == "z");
  CHECK(ccs("z * (w1 + q * w1 + w1*)") == "z * (1 + q)");
  CHECK(ccs("z * (w1* + 1 + w1)") == "z");
}

TEST_CASE("glue on hand-enumerated cases") {
  CHECK(glue(OrderTerm::finite(3), OrderTerm::finite(2)) == OrderTerm::finite(4));
  CHECK(glue(OrderTerm::atom(Kind::Nat), OrderTerm::finite(2)) == OrderTerm::atom(Kind::Nat));
  CHECK(glue(OrderTerm::atom(Kind::Rat), OrderTerm::finite(2)) ==
        OrderTerm::product(OrderTerm::atom(Kind::Rat), OrderTerm::finite(2)));
  CHECK(glue(OrderTerm::atom(Kind::NatRev), OrderTerm::finite(3)).toString() == "w*");
  CHECK(glue(norm("w + 1"), OrderTerm::finite(2)).toString() == "w + 2");
  CHECK(glue(norm("q + 1 + q"), OrderTerm::finite(2)).toString() == "q * 2 + 2 + q * 2");
  CHECK_THROWS_AS(glue(OrderTerm::atom(Kind::Nat), OrderTerm::atom(Kind::Nat)), OrderError);
}

TEST_CASE("ordinal condensation") {
  CHECK(ccOrdinal(Ordinal::finite(1), Ordinal()) == Ordinal::finite(1));
  CHECK(ccOrdinal(Ordinal::finite(1), Ordinal::finite(1)) == Ordinal::finite(2));
  CHECK(ccOrdinal(Ordinal::omega(), Ordinal::finite(5)) == Ordinal::parse("w + 1"));
}

TEST_CASE("ordinal shortcut agrees with the compositional rules") {
  for (const char* s : {"w1 + 1", "w * w1 + 5", "w1 * w", "(w + 2) * w1 + w * w + 3", "w2 + w1 + 1",
                        "w2 + w2 + w * w1", "rev(w * w1 + 5)", "w* + w1*", "w * (w * w1)",
                        "(w * w + 1) * (w1 + w)"}) {
    for (Level level : kLevels) {
      CAPTURE(std::string(s));
      CAPTURE(std::string(levelName(level)));
      const OrderTerm t = norm(s);
      const CondResult fast = cc(t, level);
      const CondResult slow = detail::ccStructural(t, level);
      CHECK(fast.quotient.toString() == slow.quotient.toString());
      CHECK(fast.mergeLeft == slow.mergeLeft);
      CHECK(fast.mergeRight == slow.mergeRight);
    }
  }
}

TEST_CASE("condensation commutes with reversal") {
  for (const char* s : kTerms) {
    for (Level level : kLevels) {
      CAPTURE(std::string(s));
      CAPTURE(std::string(levelName(level)));
      const OrderTerm t = norm(s);
      const CondResult r = cc(t, level);
      const CondResult m = cc(reverse(t), level);
      // z-products whose block is a rotation of its own reverse have two
      // spellings; the canonical form picks one.
      CHECK(canonicalForm(m.quotient) == canonicalForm(reverse(r.quotient)));
      CHECK(m.mergeLeft == r.mergeRight);
      CHECK(m.mergeRight == r.mergeLeft);
    }
  }
}

TEST_CASE("condensation result invariants") {
  for (const char* s : kTerms) {
    for (Level level : kLevels) {
      CAPTURE(std::string(s));
      CAPTURE(std::string(levelName(level)));
      const OrderTerm t = norm(s);
      const CondResult r = cc(t, level);
      CHECK(r.quotient.is(Kind::Empty) == t.is(Kind::Empty));
      CHECK(normalize(r.quotient) == r.quotient);
      if (!hasFirst(r.quotient)) CHECK_FALSE(r.mergeLeft);
      if (!hasLast(r.quotient)) CHECK_FALSE(r.mergeRight);
      if (r.quotient.is(Kind::Single) && !structuralProfile(t).card.isSmall(level))
        CHECK_FALSE((r.mergeLeft && r.mergeRight));
    }
  }
}
