#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ordertype/classify.hpp"

namespace ordertype {

struct AtomLevelRow {
  bool smallHead = false;
  bool smallTail = false;
  OrderTerm quotient;
  bool mergeLeft = false;
  bool mergeRight = false;
  std::string note;
};

/// Attributes of one infinite atom, read from the rule ledger.
struct AtomRow {
  Kind kind;
  Cardinality card;
  Cofinality cofin;
  Cofinality coin;
  AtomLevelRow finite;
  AtomLevelRow countable;

  const AtomLevelRow& at(Level level) const { return level == Level::Finite ? finite : countable; }
};

/// The ledger JSON compiled into the library.
std::string_view ledgerText();

/// Rows parsed from ledgerText(); throws if the atom is not an infinite atom.
const AtomRow& atomRow(Kind kind);

/// Parses ledger JSON text; exposed so tests can check the shipped file.
std::vector<AtomRow> parseLedger(std::string_view json);

}  // namespace ordertype
