#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordertype/level.hpp"
#include "ordertype/ordinal.hpp"
#include "ordertype/term.hpp"

namespace ordertype {

using Rational = boost::multiprecision::cpp_rational;

/// Element of U: spine points u_a / -u_a and rationals of the blocks Q(a),
/// Q(-a) and Q(mid).
struct UPoint {
  enum class Side { Neg, Mid, Pos };
  Side side = Side::Mid;
  Ordinal index;  // 0 on the Mid side
  bool spine = false;
  Rational value;  // unused for spine points

  static UPoint spinePoint(Side side, Ordinal index) { return {side, std::move(index), true, 0}; }
  static UPoint rational(Side side, Ordinal index, Rational q) { return {side, std::move(index), false, std::move(q)}; }

  bool valid() const { return side != Side::Mid || (!spine && index.isZero()); }
  friend bool operator==(const UPoint&, const UPoint&) = default;
  std::string toString() const;
};

/// u_a < Q(a) < u_(a+1) on the positive side, mirrored on the negative side,
/// with Q(mid) between -u_0 and u_0.
std::strong_ordering compareU(const UPoint& a, const UPoint& b);

/// Coded element of a term's order, shaped like the term.
///   Nat     finite chains, w, and w* (w* counts down from the top)
///   Int     z;  Rat  q;  U  the line U
///   Ord     w1, w1* (from the top)
///   Ord2    w2 and rev(w2): the point w1*a + b (from the top when reversed)
///   Part    element of a sum: part index and code inside the part
///   Pair    element of a product: outer code then inner code
struct PointCode {
  enum class Tag { Nat, Int, Rat, Ord, Ord2, U, Part, Pair };
  Tag tag = Tag::Nat;
  std::uint64_t n = 0;  // Nat value or Part index
  std::int64_t z = 0;
  Rational q;
  Ordinal a, b;
  UPoint u;
  std::vector<PointCode> children;  // Part: {child}; Pair: {outer, inner}

  static PointCode nat(std::uint64_t n);
  static PointCode integer(std::int64_t z);
  static PointCode rational(Rational q);
  static PointCode ordinal(Ordinal a);
  static PointCode ordinalPair(Ordinal blocks, Ordinal offset);
  static PointCode upoint(UPoint u);
  static PointCode part(std::uint64_t index, PointCode child);
  static PointCode pair(PointCode outer, PointCode inner);

  const PointCode& child() const { return children[0]; }
  const PointCode& outer() const { return children[0]; }
  const PointCode& inner() const { return children[1]; }

  friend bool operator==(const PointCode&, const PointCode&) = default;
  std::string toString() const;
};

/// Order of two codes in the term's order. Throws InvalidCode for codes that
/// do not denote elements of t.
std::strong_ordering comparePoints(const OrderTerm& t, const PointCode& p, const PointCode& q);
/// Throws InvalidCode unless the code denotes an element of t.
void validatePoint(const OrderTerm& t, const PointCode& p);

std::optional<PointCode> firstPoint(const OrderTerm& t);
std::optional<PointCode> lastPoint(const OrderTerm& t);
/// Immediate successor / predecessor, if any.
std::optional<PointCode> successor(const OrderTerm& t, const PointCode& p);
std::optional<PointCode> predecessor(const OrderTerm& t, const PointCode& p);

/// Cardinality of the closed interval between p and q (either order).
/// Computed from the term structure alone, independently of condensation.
Cardinality intervalClass(const OrderTerm& t, const PointCode& p, const PointCode& q);

/// Condensation class of p: a code into `shape`, an unnormalized term whose
/// normal form is (an isomorphic spelling of) cc(t, level).quotient.
struct ClassIndex {
  OrderTerm shape;
  PointCode code;
};
ClassIndex classIndex(const OrderTerm& t, const PointCode& p, Level level);
/// Just the quotient shape used by classIndex.
OrderTerm classShape(const OrderTerm& t, Level level);

/// Seeded sample of distinct points: end points, a successor pair and a limit
/// point where they exist, then random points; at most budget many.
std::vector<PointCode> samplePoints(const OrderTerm& t, std::size_t budget, std::uint64_t seed);

/// Agreement of classIndex with the interval oracle on sampled pairs: two
/// points share a class exactly when the interval between them is small.
/// Also checks that class codes are monotone and that the class shape
/// normalizes to cc's quotient.
struct OracleReport {
  struct Mismatch {
    PointCode p, q;
    Cardinality interval;
    bool sameClass = false;
  };
  std::size_t pairs = 0;
  std::size_t points = 0;
  std::vector<Mismatch> mismatches;  // first few only
  std::size_t mismatchCount = 0;
  std::size_t monotonicityViolations = 0;
  bool shapeAgrees = true;
  OrderTerm shape;  // normalized class shape

  bool passed() const { return mismatchCount == 0 && monotonicityViolations == 0 && shapeAgrees; }
};
OracleReport checkOracle(const OrderTerm& t, Level level, std::size_t pairs, std::uint64_t seed);

}  // namespace ordertype
