// Point-level semantics: comparison, the interval oracle, class indexing.
#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/generate.hpp"
#include "ordertype/points.hpp"

using namespace ordertype;
using ordertype::test::norm;

namespace {

using Side = UPoint::Side;

PointCode u(UPoint p) { return PointCode::upoint(std::move(p)); }
PointCode ord(const char* s) { return PointCode::ordinal(Ordinal::parse(s)); }

const OrderTerm kU = OrderTerm::atom(Kind::ULine);

// Position of a class code among the points of a finite shape.
std::size_t rank(const OrderTerm& shape, const PointCode& c) {
  std::size_t below = 0;
  for (const auto& p : samplePoints(shape, 64, 1))
    if (comparePoints(shape, p, c) < 0) ++below;
  return below;
}

bool contains(const std::vector<PointCode>& v, const PointCode& p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("U orders spine points before their blocks") {
  CHECK(comparePoints(kU, u(UPoint::spinePoint(Side::Pos, {})), u(UPoint::rational(Side::Pos, {}, Rational(1, 2)))) < 0);
  CHECK(comparePoints(kU, u(UPoint::spinePoint(Side::Neg, Ordinal::finite(1))), u(UPoint::spinePoint(Side::Neg, {}))) < 0);
  // -u_0 < Q(mid) < u_0, and Q(-a) sits just below -u_a.
  CHECK(comparePoints(kU, u(UPoint::spinePoint(Side::Neg, {})), u(UPoint::rational(Side::Mid, {}, 1000))) < 0);
  CHECK(comparePoints(kU, u(UPoint::rational(Side::Mid, {}, 1000)), u(UPoint::spinePoint(Side::Pos, {}))) < 0);
  CHECK(comparePoints(kU, u(UPoint::rational(Side::Neg, {}, 5)), u(UPoint::spinePoint(Side::Neg, {}))) < 0);
  CHECK(comparePoints(kU, u(UPoint::spinePoint(Side::Neg, Ordinal::finite(1))), u(UPoint::rational(Side::Neg, {}, -5))) < 0);
}

TEST_CASE("every code equals itself") {
  for (const auto& t : atomSet())
    for (const auto& p : samplePoints(t, 8, 3)) CHECK(comparePoints(t, p, p) == 0);
}

TEST_CASE("invalid codes are rejected") {
  CHECK_THROWS_AS(validatePoint(OrderTerm::finite(2), PointCode::nat(2)), OrderError);
  CHECK_THROWS_AS(validatePoint(norm("w1"), PointCode::nat(0)), OrderError);
  CHECK_THROWS_AS(validatePoint(kU, u(UPoint::spinePoint(Side::Mid, {}))), OrderError);
  CHECK_THROWS_AS(comparePoints(norm("w + 1"), PointCode::part(2, PointCode::nat(0)), PointCode::part(0, PointCode::nat(0))),
                  OrderError);
}

TEST_CASE("interval classes from the structure") {
  const OrderTerm w1 = norm("w1");
  CHECK(intervalClass(w1, ord("0"), ord("w")) == Cardinality::aleph0());
  CHECK(intervalClass(w1, ord("0"), ord("w^w + 3")) == Cardinality::aleph0());
  CHECK(intervalClass(w1, ord("2"), ord("5")) == Cardinality::finite(4));

  const OrderTerm w1p1 = norm("w1 + 1");
  CHECK(intervalClass(w1p1, *firstPoint(w1p1), *lastPoint(w1p1)) == Cardinality::aleph1());

  for (const auto& t : atomSet())
    for (const auto& p : samplePoints(t, 6, 5)) CHECK(intervalClass(t, p, p) == Cardinality::finite(1));

  // Across copies: tail of one fibre, whole middle copies, head of the next.
  const OrderTerm wz = norm("z * w");  // z copies of w
  CHECK(intervalClass(wz, PointCode::pair(PointCode::integer(0), PointCode::nat(5)),
                      PointCode::pair(PointCode::integer(0), PointCode::nat(7))) == Cardinality::finite(3));
  CHECK(intervalClass(wz, PointCode::pair(PointCode::integer(0), PointCode::nat(5)),
                      PointCode::pair(PointCode::integer(1), PointCode::nat(0))) == Cardinality::aleph0());
}

TEST_CASE("class indices of the worked examples") {
  const OrderTerm t = norm("w1 + 1");
  const auto first = classIndex(t, *firstPoint(t), Level::Countable);
  const auto last = classIndex(t, *lastPoint(t), Level::Countable);
  CHECK(normalize(first.shape) == OrderTerm::finite(2));
  CHECK(rank(first.shape, first.code) == 0);
  CHECK(rank(last.shape, last.code) == 1);

  const auto block = classIndex(norm("w2"), PointCode::ordinalPair(Ordinal::finite(3), Ordinal::finite(17)), Level::Countable);
  CHECK(block.code == PointCode::ordinalPair({}, Ordinal::finite(3)));
  CHECK(normalize(block.shape) == norm("w2"));

  for (const auto& p : samplePoints(norm("q"), 10, 9)) CHECK(classIndex(norm("q"), p, Level::Countable).code == PointCode::nat(0));
}

TEST_CASE("the sampler includes the required landmarks") {
  CHECK(samplePoints(OrderTerm::finite(2), 10, 4).size() == 2);
  CHECK(samplePoints(OrderTerm::finite(0), 10, 4).empty());

  const auto w1 = samplePoints(norm("w1"), 4, 4);
  CHECK(w1.size() <= 4);
  CHECK(contains(w1, ord("0")));
  CHECK(contains(w1, ord("w")));

  const auto line = samplePoints(kU, 6, 4);
  CHECK(line.size() <= 6);
  auto has = [&](Side side, bool spine) {
    return std::any_of(line.begin(), line.end(), [&](const PointCode& p) { return p.u.side == side && p.u.spine == spine; });
  };
  CHECK(has(Side::Neg, true));
  CHECK(has(Side::Mid, false));
  CHECK(has(Side::Pos, true));

  CHECK(samplePoints(norm("z * q + w1"), 20, 11) == samplePoints(norm("z * q + w1"), 20, 11));
}

TEST_CASE("class shapes normalize to the condensation quotient on samples") {
  for (const char* text : {"w1 + 1", "w1* + w1", "z", "w * (w1 + 1)", "(w1 + 1) * 3", "w1 * (w1* + 1 + w1)", "(w + 5) * w1",
                           "z * (w1 + 2 + w1*)", "U * 2", "w2 + w1*", "q * (w1* + w1)", "w1* * (w1 + w1*)"}) {
    CAPTURE(text);
    for (Level level : kLevels) {
      CAPTURE(std::string(levelName(level)));
      const OracleReport r = checkOracle(norm(text), level, 1000, 17);
      CHECK(r.shapeAgrees);
      CHECK(r.mismatchCount == 0);
      CHECK(r.monotonicityViolations == 0);
    }
  }
}

namespace {

const std::vector<OrderTerm>& corpus() {
  static const auto t = generateTerms({.depth = 3, .randomCount = 400, .seed = 7});
  return t;
}

}  // namespace

TEST_CASE("oracle agreement on every generated term") {
  std::size_t pairs = 0;
  for (const auto& t : corpus()) {
    CAPTURE(t);
    for (Level level : kLevels) {
      CAPTURE(std::string(levelName(level)));
      const OracleReport r = checkOracle(t, level, 1000, 23);
      pairs += r.pairs;
      CHECK(r.shapeAgrees);
      CHECK(r.mismatchCount == 0);
      CHECK(r.monotonicityViolations == 0);
      if (!r.mismatches.empty()) {
        const auto& m = r.mismatches.front();
        MESSAGE(m.p.toString() << " ~ " << m.q.toString() << " interval " << m.interval.toString());
      }
    }
  }
  CHECK(pairs >= 1000 * corpus().size());
}

TEST_CASE("the induced point relation is an equivalence with convex classes") {
  Rng rng(31);
  for (const auto& t : corpus()) {
    CAPTURE(t);
    auto pts = samplePoints(t, 12, 41);
    std::sort(pts.begin(), pts.end(), [&](const PointCode& a, const PointCode& b) { return comparePoints(t, a, b) < 0; });
    for (Level level : kLevels) {
      auto small = [&](std::size_t i, std::size_t j) { return intervalClass(t, pts[i], pts[j]).isSmall(level); };
      for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(intervalClass(t, pts[i], pts[i]) == Cardinality::finite(1));
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          CHECK(intervalClass(t, pts[i], pts[j]) == intervalClass(t, pts[j], pts[i]));
          // Sorted, so every x strictly between lies inside [i, j].
          if (small(i, j))
            for (std::size_t x = i + 1; x < j; ++x) CHECK(small(i, x));
        }
      }
      // Transitivity over random triples in every relative order.
      for (int k = 0; k < 30 && !pts.empty(); ++k) {
        const std::size_t a = rng.below(pts.size()), b = rng.below(pts.size()), c = rng.below(pts.size());
        if (small(a, b) && small(b, c)) CHECK(small(a, c));
      }
    }
  }
}
