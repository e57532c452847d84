#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ordertype {

/// Which sets count as "small": finite sets (the finite condensation) or
/// countable sets (the countable condensation).
enum class Level { Finite, Countable };

inline constexpr Level kLevels[] = {Level::Finite, Level::Countable};

const char* levelName(Level level);
Level parseLevel(const std::string& name);  // "fc"/"finite", "cc"/"countable"

/// Cardinality class of an order: exact finite size or one of the infinite
/// alephs the term language can reach.
class Cardinality {
 public:
  enum class Kind { Finite, Aleph0, Aleph1, Aleph2Plus };

  constexpr Cardinality() = default;
  static constexpr Cardinality finite(std::uint64_t n) { return Cardinality(Kind::Finite, n); }
  static constexpr Cardinality aleph0() { return Cardinality(Kind::Aleph0, 0); }
  static constexpr Cardinality aleph1() { return Cardinality(Kind::Aleph1, 0); }
  static constexpr Cardinality aleph2Plus() { return Cardinality(Kind::Aleph2Plus, 0); }

  Kind kind() const { return kind_; }
  bool isFinite() const { return kind_ == Kind::Finite; }
  std::uint64_t count() const { return n_; }
  bool isZero() const { return isFinite() && n_ == 0; }

  /// Small at the level: finite for Finite, at most countable for Countable.
  bool isSmall(Level level) const {
    return level == Level::Finite ? isFinite() : kind_ <= Kind::Aleph0;
  }

  Cardinality operator+(Cardinality other) const;
  Cardinality operator*(Cardinality other) const;
  /// Removes k points; infinite classes are unchanged.
  Cardinality minus(std::uint64_t k) const;

  friend bool operator==(const Cardinality&, const Cardinality&) = default;
  friend std::strong_ordering operator<=>(const Cardinality& a, const Cardinality& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.n_ <=> b.n_;
  }

  std::string toString() const;

 private:
  constexpr Cardinality(Kind kind, std::uint64_t n) : kind_(kind), n_(n) {}

  Kind kind_ = Kind::Finite;
  std::uint64_t n_ = 0;
};

}  // namespace ordertype
