#pragma once

#include <array>
#include <string>
#include <vector>

#include "ordertype/equality.hpp"
#include "ordertype/level.hpp"
#include "ordertype/term.hpp"

namespace ordertype {

/// Product modulo the level's condensation: (M copies of L) / ~.
OrderTerm multiply(const OrderTerm& m, const OrderTerm& l, Level level);
inline OrderTerm mulOmega(const OrderTerm& m, const OrderTerm& l) { return multiply(m, l, Level::Countable); }
inline OrderTerm mulF(const OrderTerm& m, const OrderTerm& l) { return multiply(m, l, Level::Finite); }

struct Counterexample {
  std::vector<OrderTerm> inputs;
  OrderTerm lhs;
  OrderTerm rhs;  // for closure laws, rhs repeats lhs
  Verdict verdict = Verdict::NotEqual;
};

struct LawResult {
  std::string law;
  std::size_t checked = 0;
  std::vector<Counterexample> refuted;     // definitely violated
  std::vector<Counterexample> unverified;  // equality undecided
  bool passed() const { return refuted.empty() && unverified.empty(); }
};

/// Membership pattern of a triple: S = right identity, X = condenses to a
/// point but is not a right identity. Case numbers 1..8 are
/// SSS, SSX, SXS, XSS, SXX, XSX, XXS, XXX.
int membershipCase(bool firstS, bool secondS, bool thirdS);

struct LawReport {
  std::string structure;  // "band" or "semigroup"
  std::string sample;     // how the sample was obtained
  std::vector<OrderTerm> terms;
  std::vector<LawResult> laws;
  std::array<std::size_t, 8> caseHits{};  // semigroup only; index = case - 1
  bool passed() const;
  bool allCasesHit() const;
};

/// Right identities under the countable product form a left-regular band.
/// Throws InvalidSample naming the first term that is not a right identity.
LawReport checkLeftRegularBand(const std::vector<OrderTerm>& sample, std::string description = "given");

/// Orders condensing to a point form a semigroup. Throws InvalidSample.
LawReport checkSemigroup(const std::vector<OrderTerm>& sample, std::string description = "given");

struct ClosureTable {
  Level level = Level::Countable;
  std::vector<OrderTerm> generators;        // small generators first
  std::vector<bool> small;                  // per generator
  std::vector<std::vector<OrderTerm>> cells;  // cells[row][col] = row * col
  std::string toCsv() const;
  std::string toJson() const;
};

/// Product table of the generators (each must condense to a point).
ClosureTable closureTable(const std::vector<OrderTerm>& generators, Level level);

}  // namespace ordertype
