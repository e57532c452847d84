#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ordertype/term.hpp"

namespace ordertype {

/// Seeded source of small integers. Uses the engine's raw output rather than
/// std distributions, whose results differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// 1, 2, 3, w, w*, z, q, w1, w1*, w2, rev(w2), U
const std::vector<OrderTerm>& atomSet();

struct GeneratorOptions {
  int depth = 2;                // operator nesting depth
  std::size_t randomCount = 0;  // extra random terms at depths >= 2
  std::uint64_t seed = kDefaultSeed;
  bool omega2InProducts = false;  // w2 factors leave the supported fragment
};

/// Normal, pairwise distinct terms: every atom, every single sum or product
/// of two atoms (depth >= 1), then seeded random terms of depth 2..depth.
std::vector<OrderTerm> generateTerms(const GeneratorOptions& options);

/// One random term of exactly the given depth (normalized).
OrderTerm randomTerm(Rng& rng, int depth, bool omega2InProducts = false);

/// Random ordinal in the supported fragment, as a term.
OrderTerm randomOrdinalTerm(Rng& rng);

}  // namespace ordertype
