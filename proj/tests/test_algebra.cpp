#include <functional>

#include "doctest.h"
#include "helpers.hpp"
#include "ordertype/algebra.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/generate.hpp"

using namespace ordertype;
using ordertype::test::norm;

namespace {

std::vector<OrderTerm> terms(std::initializer_list<const char*> texts) {
  std::vector<OrderTerm> out;
  for (const char* t : texts) out.push_back(norm(t));
  return out;
}

ErrorKind kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const OrderError& e) {
    return e.kind();
  }
  FAIL("expected an OrderError");
  return ErrorKind::Syntax;
}

const std::vector<OrderTerm>& corpus() {
  static const auto t = generateTerms({.depth = 3, .randomCount = 400, .seed = 11});
  return t;
}

}  // namespace

TEST_CASE("countable product on named orders") {
  CHECK(mulOmega(norm("w1 + 1"), norm("w1")) == norm("w1 + 1"));
  CHECK(mulOmega(norm("q"), norm("z")) == norm("1"));
  CHECK(mulOmega(norm("U"), norm("q")) == norm("1"));
  CHECK(mulOmega(norm("w1"), norm("w1")) == norm("w1"));
  CHECK(mulOmega(norm("w1*"), norm("w1")) == norm("w1*"));
  CHECK(mulF(norm("w"), norm("w")) == norm("w"));
  CHECK(mulF(norm("w"), norm("3")) == norm("1"));
}

TEST_CASE("membership cases are numbered in the documented order") {
  CHECK(membershipCase(true, true, true) == 1);
  CHECK(membershipCase(true, true, false) == 2);
  CHECK(membershipCase(true, false, true) == 3);
  CHECK(membershipCase(false, true, true) == 4);
  CHECK(membershipCase(true, false, false) == 5);
  CHECK(membershipCase(false, true, false) == 6);
  CHECK(membershipCase(false, false, true) == 7);
  CHECK(membershipCase(false, false, false) == 8);
}

TEST_CASE("left-regular band on right identities") {
  const LawReport r = checkLeftRegularBand(terms({"w1", "w1*", "U"}));
  CHECK(r.passed());
  CHECK(r.structure == "band");
  CHECK(r.laws.size() == 4);
  for (const auto& law : r.laws) CHECK(law.checked > 0);

  const LawReport empty = checkLeftRegularBand({});
  CHECK(empty.passed());

  CHECK(kindOf([] { checkLeftRegularBand(terms({"w1", "q"})); }) == ErrorKind::InvalidSample);
  try {
    checkLeftRegularBand(terms({"w1", "q"}));
  } catch (const OrderError& e) {
    CHECK(std::string(e.what()).find("q") != std::string::npos);
  }
}

TEST_CASE("semigroup of orders condensing to a point") {
  const LawReport mixed = checkSemigroup(terms({"w1", "q", "U"}));
  CHECK(mixed.passed());
  CHECK(mixed.caseHits[membershipCase(true, false, true) - 1] > 0);

  const LawReport small = checkSemigroup(terms({"q", "z", "w"}));
  CHECK(small.passed());
  CHECK(small.caseHits[7] == 27);
  for (std::size_t i = 0; i < 7; ++i) CHECK(small.caseHits[i] == 0);
  CHECK_FALSE(small.allCasesHit());

  CHECK(kindOf([] { checkSemigroup(terms({"w1 + 1"})); }) == ErrorKind::InvalidSample);
}

TEST_CASE("right identities act as right identities on generated terms") {
  std::vector<OrderTerm> ids, points;
  for (const auto& t : corpus()) {
    if (!cc(t, Level::Countable).quotient.is(Kind::Single)) continue;
    points.push_back(t);
    if (isRightIdentity(t, Level::Countable)) ids.push_back(t);
  }
  REQUIRE(ids.size() >= 10);
  const OrderTerm one = OrderTerm::finite(1);
  for (const auto& m : points) {
    for (std::size_t j = 0; j < ids.size(); j += 3) {
      CAPTURE(m);
      CAPTURE(ids[j]);
      CHECK(eqOrderType(mulOmega(m, ids[j]), m) == Verdict::Equal);
    }
    // a small second factor collapses the product to a point
    for (std::size_t j = 0; j < points.size(); j += 5)
      if (!isRightIdentity(points[j], Level::Countable)) CHECK(mulOmega(m, points[j]) == one);
  }
}

TEST_CASE("associativity over a generated sample") {
  std::vector<OrderTerm> xs;
  for (const auto& t : corpus())
    if (cc(t, Level::Countable).quotient.is(Kind::Single)) xs.push_back(t);
  if (xs.size() > 16) xs.resize(16);
  const LawReport r = checkSemigroup(xs, "corpus");
  CHECK(r.passed());
  for (const auto& law : r.laws) CHECK(law.checked > 0);
}

TEST_CASE("closure tables") {
  const ClosureTable t = closureTable(terms({"w1", "q"}), Level::Countable);
  REQUIRE(t.generators.size() == 2);
  CHECK(t.generators[0] == norm("q"));
  CHECK(t.generators[1] == norm("w1"));
  CHECK(t.small == std::vector<bool>{true, false});
  CHECK(t.cells[0][0] == norm("1"));
  CHECK(t.cells[0][1] == norm("q"));
  CHECK(t.cells[1][0] == norm("1"));
  CHECK(t.cells[1][1] == norm("w1"));
  CHECK(t.toCsv() == "mulw,q,w1\r\nq,1,q\r\nw1,1,w1\r\n");

  const ClosureTable e = closureTable({}, Level::Countable);
  CHECK(e.generators.empty());
  CHECK(e.cells.empty());
  CHECK(e.toCsv() == "mulw\r\n");

  const ClosureTable band = closureTable(terms({"w1", "w1*", "U"}), Level::Countable);
  for (std::size_t i = 0; i < band.generators.size(); ++i)
    for (const auto& cell : band.cells[i]) CHECK(cell == band.generators[i]);

  const ClosureTable fin = closureTable(terms({"w", "3"}), Level::Finite);
  CHECK(fin.toCsv().rfind("mulf,", 0) == 0);
  CHECK(fin.generators[0] == norm("3"));

  CHECK(kindOf([] { closureTable(terms({"w1 + 1"}), Level::Countable); }) == ErrorKind::InvalidSample);
}
