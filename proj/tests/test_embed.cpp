#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/embed.hpp"
#include "ordertype/errors.hpp"
#include "ordertype/generate.hpp"

using namespace ordertype;
using ordertype::test::norm;

TEST_CASE("cantor embedding preserves order") {
  const auto lt = [](int a, int b) { return a < b; };
  CHECK(cantorEmbed(std::vector<int>{}, lt).empty());

  const auto three = cantorEmbed(std::vector<int>{0, 1, 2}, lt);
  CHECK(three[0] < three[1]);
  CHECK(three[1] < three[2]);

  for (std::size_t n : {100u, 1000u, 10000u}) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), -static_cast<int>(n) / 2);
    Rng rng(n);
    for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    const auto r = cantorEmbed(v, lt);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    for (std::size_t i = 1; i < n; ++i) REQUIRE(r[idx[i - 1]] < r[idx[i]]);
  }
}

TEST_CASE("integers embed in order") {
  const OrderTerm z = norm("z");
  std::vector<PointCode> pts;
  for (int i = -50; i < 50; ++i) pts.push_back(PointCode::integer(i * 37 % 101));
  const auto r = cantorEmbed(pts, [&](const PointCode& a, const PointCode& b) { return comparePoints(z, a, b) < 0; });
  CHECK(r.size() == 100);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (pts[i].z < pts[j].z) REQUIRE(r[i] < r[j]);
}

TEST_CASE("w1 embeds along the positive spine") {
  const auto res = embedIntoU(norm("w1"), 500, 1);
  REQUIRE(res.embeddable);
  const auto& cert = *res.certificate;
  CHECK(cert.target == "U");
  CHECK(cert.construction == "increasing-spine");
  CHECK(cert.verifiedPairs == 500);
  CHECK(cert.gaps.empty());
  for (const auto& s : cert.spine) {
    REQUIRE(s.source);
    CHECK(s.target == UPoint::spinePoint(UPoint::Side::Pos, s.source->a));
  }
}

TEST_CASE("w1 + 1 does not embed") {
  const auto res = embedIntoU(norm("w1 + 1"), 500, 1);
  CHECK_FALSE(res.embeddable);
  CHECK_FALSE(res.certificate);
  CHECK_FALSE(res.reason.empty());
}

TEST_CASE("countable orders map into the middle block") {
  const auto res = embedIntoU(norm("q"), 500, 1);
  REQUIRE(res.embeddable);
  const auto& cert = *res.certificate;
  CHECK(cert.target == "Q");
  CHECK(cert.spine.empty());
  REQUIRE(cert.gaps.size() == 1);
  CHECK(cert.gaps[0].side == UPoint::Side::Mid);
  CHECK(cert.gaps[0].gapOrder == norm("q"));
}

TEST_CASE("new spine points where blocks lack an end") {
  // w1 copies of z: no block has a first point.
  const auto res = embedIntoU(norm("w1 * z"), 500, 3);
  REQUIRE(res.embeddable);
  for (const auto& s : res.certificate->spine) CHECK_FALSE(s.source);
  for (const auto& g : res.certificate->gaps) CHECK(g.gapOrder == norm("z"));

  const auto two = embedIntoU(norm("w1* * (w + 1) + q + w1 * (1 + w*)"), 500, 3);
  REQUIRE(two.embeddable);
  CHECK(two.certificate->construction == "two-sided");
  for (const auto& s : two.certificate->spine) CHECK(s.source);

  const auto line = embedIntoU(norm("U * (1 + q)"), 500, 5);
  REQUIRE(line.embeddable);
  CHECK(line.certificate->construction == "two-sided");
}

TEST_CASE("embeddable exactly when the countable condensation is a point") {
  const auto terms = generateTerms({.depth = 3, .randomCount = 400, .seed = 7});
  std::size_t embedded = 0;
  for (const auto& t : terms) {
    CAPTURE(t);
    const bool one = cc(t, Level::Countable).quotient.is(Kind::Single);
    const auto res = embedIntoU(t, 500, 13);
    CHECK(res.embeddable == one);
    if (res.embeddable) {
      ++embedded;
      CHECK(res.certificate->verifiedPairs == 500);
    }
  }
  CHECK(embedded > 20);
}
