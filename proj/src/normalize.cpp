#include "ordertype/normalize.hpp"

#include <algorithm>

#include "ordertype/errors.hpp"

namespace ordertype {

OrdinalForm OrdinalForm::countable(Ordinal b) {
  OrdinalForm f;
  f.coeffs.push_back(std::move(b));
  f.trim();
  return f;
}

OrdinalForm OrdinalForm::omega1Power(std::size_t k, Ordinal b) {
  OrdinalForm f;
  f.coeffs.resize(k + 1);
  f.coeffs[k] = std::move(b);
  f.trim();
  return f;
}

const Ordinal& OrdinalForm::coeff(std::size_t k) const {
  static const Ordinal zero;
  return k < coeffs.size() ? coeffs[k] : zero;
}

void OrdinalForm::trim() {
  while (!coeffs.empty() && coeffs.back().isZero()) coeffs.pop_back();
}

std::strong_ordering operator<=>(const OrdinalForm& a, const OrdinalForm& b) {
  if (auto c = a.omega2Copies <=> b.omega2Copies; c != 0) return c;
  if (auto c = a.coeffs.size() <=> b.coeffs.size(); c != 0) return c;
  for (std::size_t k = a.coeffs.size(); k-- > 0;)
    if (auto c = a.coeffs[k] <=> b.coeffs[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

OrdinalForm OrdinalForm::operator+(const OrdinalForm& rhs) const {
  if (rhs.isZero()) return *this;
  if (rhs.omega2Copies > 0) return {omega2Copies + rhs.omega2Copies, rhs.coeffs};
  // Terms of *this below rhs's leading power are absorbed.
  const std::size_t m = rhs.degree();
  OrdinalForm r{omega2Copies, rhs.coeffs};
  for (std::size_t k = m + 1; k < coeffs.size(); ++k) r.coeffs.push_back(Ordinal());
  for (std::size_t k = m + 1; k < coeffs.size(); ++k) r.coeffs[k] = coeffs[k];
  r.coeffs[m] = coeff(m) + rhs.coeffs[m];
  return r;
}

std::optional<OrdinalForm> OrdinalForm::times(const OrdinalForm& rhs) const {
  if (isZero() || rhs.isZero()) return OrdinalForm{};
  OrdinalForm r;
  if (rhs.omega2Copies > 0) {
    if (omega2Copies > 0) return std::nullopt;  // w2 * w2
    r.omega2Copies = rhs.omega2Copies;          // a * w2 = w2 for 0 < a < w2
  }
  const std::size_t lead = degree();
  OrdinalForm lower = *this;  // *this without its leading term
  if (omega2Copies > 0) {
    lower.omega2Copies = 0;
  } else {
    lower.coeffs[lead] = Ordinal();
    lower.trim();
  }
  for (std::size_t m = rhs.coeffs.size(); m-- > 0;) {
    const Ordinal& b = rhs.coeffs[m];
    if (b.isZero()) continue;
    if (omega2Copies > 0) {
      if (m > 0 || !b.isFinite()) return std::nullopt;  // w2 * w and beyond
      r = r + OrdinalForm{omega2Copies * b.finiteValue(), {}} + lower;
    } else if (m > 0) {
      r = r + omega1Power(lead + m, b);
    } else {
      r = r + omega1Power(lead, coeffs[lead] * b);
      if (b.isSuccessor()) r = r + lower;
    }
  }
  return r;
}

std::string OrdinalForm::toString() const {
  std::string s;
  const auto add = [&](const std::string& piece) {
    if (!s.empty()) s += " + ";
    s += piece;
  };
  if (omega2Copies > 0) add("w2*" + std::to_string(omega2Copies));
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    if (coeffs[k].isZero()) continue;
    add((k == 1 ? std::string("w1") : "w1^" + std::to_string(k)) + "*(" + coeffs[k].toString() + ")");
  }
  if (!tail().isZero() || s.empty()) add(tail().toString());
  return s;
}

namespace {

std::optional<OrdinalForm> ordinalOf(const OrderTerm& t, bool mirrored);

std::optional<OrdinalForm> ordinalOfAtom(Kind k, bool mirrored) {
  const Kind nat = mirrored ? Kind::NatRev : Kind::Nat;
  const Kind w1 = mirrored ? Kind::Omega1Rev : Kind::Omega1;
  const Kind w2 = mirrored ? Kind::Omega2Rev : Kind::Omega2;
  if (k == nat) return OrdinalForm::countable(Ordinal::omega());
  if (k == w1) return OrdinalForm::omega1Power(1);
  if (k == w2) return OrdinalForm{1, {}};
  return std::nullopt;
}

std::optional<OrdinalForm> ordinalOf(const OrderTerm& t, bool mirrored) {
  switch (t.kind()) {
    case Kind::Empty:
    case Kind::Single:
    case Kind::Fin:
      return OrdinalForm::countable(Ordinal::finite(t.size()));
    case Kind::Sum: {
      OrdinalForm acc;
      const auto parts = t.parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = mirrored ? parts[parts.size() - 1 - i] : parts[i];
        auto f = ordinalOf(p, mirrored);
        if (!f) return std::nullopt;
        acc = acc + *f;
      }
      return acc;
    }
    case Kind::Product: {
      auto outer = ordinalOf(t.outer(), mirrored);
      if (!outer) return std::nullopt;
      auto inner = ordinalOf(t.inner(), mirrored);
      if (!inner) return std::nullopt;
      return inner->times(*outer);
    }
    case Kind::Rev:
      return ordinalOf(t.operand(), !mirrored);
    default:
      return ordinalOfAtom(t.kind(), mirrored);
  }
}

std::uint64_t finiteExponent(const Ordinal& e) {
  if (!e.isFinite()) unsupported("ordinal w^(" + e.toString() + ") has no term representation");
  return e.finiteValue();
}

}  // namespace

std::optional<OrdinalForm> asOrdinal(const OrderTerm& t) { return ordinalOf(t, false); }
std::optional<OrdinalForm> asReverseOrdinal(const OrderTerm& t) { return ordinalOf(t, true); }

OrderTerm ordinalTerm(const OrdinalForm& form, bool mirrored) {
  const OrderTerm nat = OrderTerm::atom(mirrored ? Kind::NatRev : Kind::Nat);
  const OrderTerm w1 = OrderTerm::atom(mirrored ? Kind::Omega1Rev : Kind::Omega1);
  const OrderTerm w2 = OrderTerm::atom(mirrored ? Kind::Omega2Rev : Kind::Omega2);
  // w^e copies of base, nested to the right.
  const auto power = [&](std::uint64_t e, OrderTerm base) {
    for (std::uint64_t i = 0; i < e; ++i) base = OrderTerm::product(nat, base);
    return base;
  };
  std::vector<OrderTerm> parts;
  for (std::uint64_t i = 0; i < form.omega2Copies; ++i) parts.push_back(w2);
  for (std::size_t k = form.coeffs.size(); k-- > 0;) {
    const Ordinal& b = form.coeffs[k];
    // w1^k as a right-nested product; for k = 0 the pieces are w^(e-1) copies of w.
    OrderTerm base = k == 0 ? nat : w1;
    for (std::size_t j = 1; j < k; ++j) base = OrderTerm::product(w1, base);
    for (std::size_t i = 0; i < b.termCount(); ++i) {
      const std::uint64_t e = finiteExponent(b.exponent(i));
      if (k == 0 && e == 0) {
        parts.push_back(OrderTerm::finite(b.coefficient(i)));
        continue;
      }
      const OrderTerm piece = power(k == 0 ? e - 1 : e, base);
      for (std::uint64_t c = 0; c < b.coefficient(i); ++c) parts.push_back(piece);
    }
  }
  if (mirrored) std::reverse(parts.begin(), parts.end());
  if (parts.empty()) return OrderTerm();
  if (parts.size() == 1) return parts[0];
  return OrderTerm::sum(std::move(parts));
}

namespace {

void flattenInto(const OrderTerm& t, std::vector<OrderTerm>& out) {
  if (t.is(Kind::Sum)) {
    for (const auto& p : t.parts()) flattenInto(p, out);
  } else if (!t.is(Kind::Empty)) {
    out.push_back(t);
  }
}

// Replaces maximal runs of (reverse-)ordinal parts by their canonical terms.
bool canonicalizeRuns(std::vector<OrderTerm>& parts, bool mirrored) {
  std::vector<OrderTerm> out;
  bool changed = false;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::optional<OrdinalForm> acc;
    std::size_t j = i;
    for (; j < parts.size(); ++j) {
      auto f = ordinalOf(parts[j], mirrored);
      if (!f) break;
      // Mirrored runs accumulate right to left.
      acc = !acc ? *f : (mirrored ? *f + *acc : *acc + *f);
    }
    if (j == i) {
      out.push_back(parts[i++]);
      continue;
    }
    std::vector<OrderTerm> run;
    flattenInto(ordinalTerm(*acc, mirrored), run);
    if (!std::equal(run.begin(), run.end(), parts.begin() + static_cast<std::ptrdiff_t>(i),
                    parts.begin() + static_cast<std::ptrdiff_t>(j)) ||
        run.size() != j - i)
      changed = true;
    out.insert(out.end(), run.begin(), run.end());
    i = j;
  }
  parts = std::move(out);
  return changed;
}

OrderTerm reverseAtom(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Nat: return OrderTerm::atom(Kind::NatRev);
    case Kind::NatRev: return OrderTerm::atom(Kind::Nat);
    case Kind::Omega1: return OrderTerm::atom(Kind::Omega1Rev);
    case Kind::Omega1Rev: return OrderTerm::atom(Kind::Omega1);
    case Kind::Omega2: return OrderTerm::atom(Kind::Omega2Rev);
    case Kind::Omega2Rev: return OrderTerm::atom(Kind::Omega2);
    default: return t;
  }
}

}  // namespace

OrderTerm normalSum(const std::vector<OrderTerm>& input) {
  std::vector<OrderTerm> parts;
  for (const auto& p : input) flattenInto(p, parts);
  for (bool changed = true; changed;) {
    changed = canonicalizeRuns(parts, false);
    changed = canonicalizeRuns(parts, true) || changed;
  }
  if (parts.empty()) return OrderTerm();
  if (parts.size() == 1) return parts[0];
  return OrderTerm::sum(std::move(parts));
}

OrderTerm normalProduct(const OrderTerm& outer, const OrderTerm& inner) {
  if (outer.is(Kind::Empty) || inner.is(Kind::Empty)) return OrderTerm();
  if (outer.is(Kind::Single)) return inner;
  if (inner.is(Kind::Single)) return outer;
  if (outer.is(Kind::Fin)) return normalSum(std::vector<OrderTerm>(outer.size(), inner));
  if (outer.is(Kind::Sum)) {
    std::vector<OrderTerm> parts;
    for (const auto& p : outer.parts()) parts.push_back(normalProduct(p, inner));
    return normalSum(parts);
  }
  if (outer.is(Kind::Product)) return normalProduct(outer.outer(), normalProduct(outer.inner(), inner));
  OrderTerm t = OrderTerm::product(outer, inner);
  if (auto f = asOrdinal(t)) return ordinalTerm(*f, false);
  if (auto f = asReverseOrdinal(t)) return ordinalTerm(*f, true);
  return t;
}

OrderTerm reverse(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Sum: {
      std::vector<OrderTerm> parts;
      for (auto it = t.parts().rbegin(); it != t.parts().rend(); ++it) parts.push_back(reverse(*it));
      return normalSum(parts);
    }
    case Kind::Product:
      return normalProduct(reverse(t.outer()), reverse(t.inner()));
    case Kind::Rev:
      return normalize(t.operand());
    default:
      return reverseAtom(t);
  }
}

OrderTerm normalize(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Sum: {
      std::vector<OrderTerm> parts;
      for (const auto& p : t.parts()) parts.push_back(normalize(p));
      return normalSum(parts);
    }
    case Kind::Product:
      return normalProduct(normalize(t.outer()), normalize(t.inner()));
    case Kind::Rev:
      return reverse(normalize(t.operand()));
    default:
      return t;
  }
}

bool hasFirst(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
    case Kind::Nat:
    case Kind::Omega1:
    case Kind::Omega2:
      return true;
    case Kind::Sum:
      for (const auto& p : t.parts())
        if (!p.is(Kind::Empty)) return hasFirst(p);
      return false;
    case Kind::Product:
      return hasFirst(t.outer()) && hasFirst(t.inner());
    case Kind::Rev:
      return hasLast(t.operand());
    default:
      return false;
  }
}

bool hasLast(const OrderTerm& t) {
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
    case Kind::NatRev:
    case Kind::Omega1Rev:
    case Kind::Omega2Rev:
      return true;
    case Kind::Sum:
      for (auto it = t.parts().rbegin(); it != t.parts().rend(); ++it)
        if (!it->is(Kind::Empty)) return hasLast(*it);
      return false;
    case Kind::Product:
      return hasLast(t.outer()) && hasLast(t.inner());
    case Kind::Rev:
      return hasFirst(t.operand());
    default:
      return false;
  }
}

OrderTerm detachFirst(const OrderTerm& t) {
  if (!hasFirst(t))
    throw OrderError(ErrorKind::NoEndpoint, "no first element in " + t.toString());
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return OrderTerm::finite(t.size() - 1);
    case Kind::Nat:
    case Kind::Omega1:
    case Kind::Omega2:
      return t;
    case Kind::Sum: {
      std::vector<OrderTerm> parts(t.parts().begin(), t.parts().end());
      auto first = std::find_if(parts.begin(), parts.end(), [](const OrderTerm& p) { return !p.is(Kind::Empty); });
      *first = detachFirst(*first);
      return normalSum(parts);
    }
    case Kind::Product:
      return normalSum({detachFirst(t.inner()), normalProduct(detachFirst(t.outer()), t.inner())});
    case Kind::Rev:
      return reverse(detachLast(normalize(t.operand())));
    default:
      throw OrderError(ErrorKind::NoEndpoint, "no first element in " + t.toString());
  }
}

OrderTerm detachLast(const OrderTerm& t) {
  if (!hasLast(t))
    throw OrderError(ErrorKind::NoEndpoint, "no last element in " + t.toString());
  switch (t.kind()) {
    case Kind::Single:
    case Kind::Fin:
      return OrderTerm::finite(t.size() - 1);
    case Kind::NatRev:
    case Kind::Omega1Rev:
    case Kind::Omega2Rev:
      return t;
    case Kind::Sum: {
      std::vector<OrderTerm> parts(t.parts().begin(), t.parts().end());
      auto last = std::find_if(parts.rbegin(), parts.rend(), [](const OrderTerm& p) { return !p.is(Kind::Empty); });
      *last = detachLast(*last);
      return normalSum(parts);
    }
    case Kind::Product:
      return normalSum({normalProduct(detachLast(t.outer()), t.inner()), detachLast(t.inner())});
    case Kind::Rev:
      return reverse(detachFirst(normalize(t.operand())));
    default:
      throw OrderError(ErrorKind::NoEndpoint, "no last element in " + t.toString());
  }
}

}  // namespace ordertype
