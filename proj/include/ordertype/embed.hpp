#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordertype/points.hpp"

namespace ordertype {

/// Order-preserving rationals for a list of pairwise distinct, comparable
/// points. Points are placed one at a time: the midpoint of the gap between
/// the already-placed neighbours, or one step beyond an unbounded side.
template <class T, class Less>
std::vector<Rational> cantorEmbed(const std::vector<T>& points, Less less) {
  std::vector<Rational> out(points.size());
  std::vector<std::size_t> placed;  // indices, sorted by the input order
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto pos = std::lower_bound(placed.begin(), placed.end(), i,
                                      [&](std::size_t a, std::size_t b) { return less(points[a], points[b]); });
    const bool hasLeft = pos != placed.begin();
    const bool hasRight = pos != placed.end();
    if (hasLeft && hasRight)
      out[i] = (out[*(pos - 1)] + out[*pos]) / 2;
    else if (hasLeft)
      out[i] = out[*(pos - 1)] + 1;
    else if (hasRight)
      out[i] = out[*pos] - 1;
    else
      out[i] = 0;
    placed.insert(pos, i);
  }
  return out;
}

/// One spine point of the embedding: either the image of a source point or
/// a new point added where the source lacks an end of the block.
struct SpineEntry {
  std::optional<PointCode> source;  // nullopt: NEW marker
  UPoint target;
};

/// A countable block of the source sent into one rational block of U.
struct GapMap {
  UPoint::Side side = UPoint::Side::Mid;
  Ordinal index;
  OrderTerm gapOrder;  // order type of the block minus its spine point
  std::vector<std::pair<PointCode, Rational>> points;  // sampled images
};

struct EmbedCertificate {
  std::string target;  // "Q" for countable sources, "U" otherwise
  std::string construction;  // countable | increasing-spine | decreasing-spine | two-sided
  std::vector<SpineEntry> spine;  // in the order of U
  std::vector<GapMap> gaps;       // in the order of U
  std::size_t verifiedPairs = 0;

  /// Image of a sampled source point.
  std::optional<UPoint> image(const PointCode& p) const;
};

struct EmbedResult {
  bool embeddable = false;
  std::optional<EmbedCertificate> certificate;
  std::string reason;  // why not, when not embeddable
};

/// Embeds t into U when t condenses to a point at the countable level, and
/// verifies the map on `budget` sampled pairs (throws VerificationFailed on
/// any violation). Returns a non-embeddable result otherwise.
EmbedResult embedIntoU(const OrderTerm& t, std::size_t budget, std::uint64_t seed);

}  // namespace ordertype
