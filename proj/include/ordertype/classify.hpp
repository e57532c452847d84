#pragma once

#include <string>

#include "ordertype/level.hpp"
#include "ordertype/term.hpp"

namespace ordertype {

/// Cofinality / coinitiality values reachable in the term fragment.
enum class Cofinality { Zero, One, Omega, Omega1, Omega2 };

const char* cofinalityName(Cofinality c);  // "0", "1", "w", "w1", "w2"
Cofinality parseCofinality(const std::string& name);

struct LevelProfile {
  bool smallHead = false;  // some nonempty initial segment is small
  bool smallTail = false;
  bool condensesToOne = false;
  bool rightIdentity = false;

  friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

struct Profile {
  Cardinality card;
  Cofinality cofin = Cofinality::Zero;
  Cofinality coin = Cofinality::Zero;
  bool hasFirst = false;
  bool hasLast = false;
  LevelProfile finite;
  LevelProfile countable;

  const LevelProfile& at(Level level) const { return level == Level::Finite ? finite : countable; }
  LevelProfile& at(Level level) { return level == Level::Finite ? finite : countable; }

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Profile without the condensation-dependent fields (condensesToOne and
/// rightIdentity stay false). Needs no condensation, so the condensation
/// rules may consult it.
Profile structuralProfile(const OrderTerm& t);

/// Full profile; t must be normal.
Profile profile(const OrderTerm& t);

/// The three characterisations of right identities, evaluated separately.
struct ConsistencyReport {
  bool cofinalityForm = false;  // condenses to one and cofin or coin is w1
  bool tailForm = false;        // condenses to one and lacks a countable head or tail
  bool cardinalityForm = false; // condenses to one and is uncountable
  bool consistent() const {
    return cofinalityForm == tailForm && tailForm == cardinalityForm;
  }
};

ConsistencyReport checkTFAE(const OrderTerm& t);

}  // namespace ordertype
