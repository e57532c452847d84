#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ordertype/ordinal.hpp"
#include "ordertype/term.hpp"

namespace ordertype {

/// An ordinal w2*copies + w1^k*b_k + ... + w1*b_1 + b_0 (standard notation)
/// with countable coefficients b_k. Every ordinal the term language denotes
/// in the supported fragment has this shape.
struct OrdinalForm {
  std::uint64_t omega2Copies = 0;
  std::vector<Ordinal> coeffs;  // coeffs[k] = b_k; no trailing zeros

  static OrdinalForm countable(Ordinal b);
  static OrdinalForm omega1Power(std::size_t k, Ordinal b = Ordinal::finite(1));

  const Ordinal& coeff(std::size_t k) const;
  const Ordinal& tail() const { return coeff(0); }
  /// Highest k with b_k nonzero (0 when there is none).
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool isZero() const { return omega2Copies == 0 && coeffs.empty(); }
  bool isCountable() const { return omega2Copies == 0 && coeffs.size() <= 1; }

  OrdinalForm operator+(const OrdinalForm& rhs) const;
  /// Standard ordinal product this * rhs (rhs copies of this); nullopt when
  /// the result leaves the fragment (e.g. w2 * w).
  std::optional<OrdinalForm> times(const OrdinalForm& rhs) const;

  friend bool operator==(const OrdinalForm&, const OrdinalForm&) = default;
  friend std::strong_ordering operator<=>(const OrdinalForm& a, const OrdinalForm& b);

  std::string toString() const;

 private:
  void trim();
};

/// The ordinal a term denotes, if it is built from finite chains, w, w1 and
/// w2 with + and lexicographic products inside the fragment.
std::optional<OrdinalForm> asOrdinal(const OrderTerm& t);
/// The ordinal whose reverse the term denotes.
std::optional<OrdinalForm> asReverseOrdinal(const OrderTerm& t);
/// Canonical term for an ordinal (or for its reverse when mirrored).
OrderTerm ordinalTerm(const OrdinalForm& form, bool mirrored = false);

/// Rewrites to normal form: flattened sums without 0, no unit factors,
/// products distributed over sums and finite outer factors, products nested
/// to the right, reversals pushed into atoms, ordinal and reverse-ordinal
/// runs in canonical form. Idempotent.
OrderTerm normalize(const OrderTerm& t);

/// Reverse of a normal term, in normal form.
OrderTerm reverse(const OrderTerm& t);

bool hasFirst(const OrderTerm& t);
bool hasLast(const OrderTerm& t);

/// The order type with its first (last) element removed. Throws NoEndpoint
/// when there is no such element.
OrderTerm detachFirst(const OrderTerm& t);
OrderTerm detachLast(const OrderTerm& t);

/// Normal-form constructors for already-normal operands.
OrderTerm normalSum(const std::vector<OrderTerm>& parts);
OrderTerm normalProduct(const OrderTerm& outer, const OrderTerm& inner);

}  // namespace ordertype
