#include "ordertype/equality.hpp"

#include "ordertype/classify.hpp"
#include "ordertype/condense.hpp"
#include "ordertype/rewrite.hpp"

namespace ordertype {

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::NotEqual: return "NotEqual";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool invariantsDiffer(const OrderTerm& a, const OrderTerm& b, int depth) {
  if (profile(a) != profile(b)) return true;
  if (isDense(a) != isDense(b)) return true;
  if (depth == 0) return false;
  for (Level level : kLevels) {
    const CondResult ca = cc(a, level);
    const CondResult cb = cc(b, level);
    if (ca.mergeLeft != cb.mergeLeft || ca.mergeRight != cb.mergeRight) return true;
    // Quotients of isomorphic orders are isomorphic; recurse only when the
    // condensation actually shrank something.
    if (ca.quotient == a && cb.quotient == b) continue;
    if (canonicalForm(ca.quotient) == canonicalForm(cb.quotient)) continue;
    if (invariantsDiffer(ca.quotient, cb.quotient, depth - 1)) return true;
  }
  return false;
}

}  // namespace

Verdict eqOrderType(const OrderTerm& a, const OrderTerm& b) {
  const OrderTerm na = canonicalForm(a);
  const OrderTerm nb = canonicalForm(b);
  if (na == nb) return Verdict::Equal;
  return invariantsDiffer(na, nb, 3) ? Verdict::NotEqual : Verdict::Unknown;
}

}  // namespace ordertype
