#pragma once

#include "ordertype/term.hpp"

namespace ordertype {

enum class Verdict { Equal, NotEqual, Unknown };

const char* verdictName(Verdict v);

/// Three-valued isomorphism test. Equal when the canonical forms coincide;
/// NotEqual when an isomorphism invariant differs (profile, density, or a
/// condensation); Unknown otherwise.
Verdict eqOrderType(const OrderTerm& a, const OrderTerm& b);

}  // namespace ordertype
