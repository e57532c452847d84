#include "doctest.h"
#include "ordertype/errors.hpp"
#include "ordertype/ordinal.hpp"

using ordertype::Ordinal;

namespace {
Ordinal O(const char* s) { return Ordinal::parse(s); }
}  // namespace

TEST_CASE("ordinal addition absorbs smaller leading terms") {
  CHECK(O("1") + O("w") == O("w"));
  CHECK(O("w") + O("1") == O("w + 1"));
  CHECK(O("w*3 + 7") + O("w^2") == O("w^2"));
  CHECK(O("w^2 + w") + O("w*2 + 1") == O("w^2 + w*3 + 1"));
  CHECK(O("w^w") + O("w^w") == O("w^w*2"));
}

TEST_CASE("ordinal multiplication is not commutative") {
  CHECK(O("2") * O("w") == O("w"));
  CHECK(O("w") * O("2") == O("w*2"));
  CHECK(O("w + 1") * O("w") == O("w^2"));
  CHECK(O("w + 1") * O("2") == O("w*2 + 1"));
  CHECK(O("w^2 + 3") * O("w + 2") == O("w^3 + w^2*2 + 3"));
  CHECK(O("0") * O("w") == O("0"));
}

TEST_CASE("ordinal predicates and decomposition") {
  CHECK(O("w + 1").isSuccessor());
  CHECK(O("w^2").isLimit());
  CHECK(O("5").finiteValue() == 5);
  CHECK(O("w*2 + 3").finitePart() == 3);
  CHECK(O("w + 4").predecessor() == O("w + 3"));
  auto [q, r] = O("w^2*2 + w*3 + 5").divideByOmega();
  CHECK(q == O("w*2 + 3"));
  CHECK(r == 5);
  CHECK(O("w*2").minusLeft(O("w + 3")) == O("w"));
  CHECK(O("w + 5").minusLeft(O("w + 2")) == O("3"));
}

TEST_CASE("ordinal comparison follows Cantor normal form") {
  CHECK(O("w") < O("w + 1"));
  CHECK(O("w*5") < O("w^2"));
  CHECK(O("w^w") > O("w^100*9"));
  CHECK(O("0") < O("1"));
}

TEST_CASE("ordinal printing round-trips") {
  for (const char* s : {"0", "7", "w", "w + 1", "w^2*3 + w + 5", "w^(w + 1)", "w^w*2"}) {
    CAPTURE(s);
    CHECK(O(s).toString() == s);
    CHECK(O(O(s).toString().c_str()) == O(s));
  }
}

TEST_CASE("malformed ordinal literals are rejected") {
  CHECK_THROWS_AS(O("w^"), ordertype::ParseError);
  CHECK_THROWS_AS(O("x"), ordertype::ParseError);
}
