#pragma once

#include <string>

#include "doctest.h"

#include "ordertype/normalize.hpp"
#include "ordertype/parse.hpp"

namespace ordertype::test {

// Structural term straight from the surface syntax, without normalization.
inline OrderTerm raw(const std::string& text) { return toTerm(parseExpr(text)); }
inline OrderTerm norm(const std::string& text) { return normalize(raw(text)); }
inline std::string show(const std::string& text) { return norm(text).toString(); }

}  // namespace ordertype::test

namespace doctest {
template <>
struct StringMaker<ordertype::OrderTerm> {
  static String convert(const ordertype::OrderTerm& t) { return t.toString().c_str(); }
};
}  // namespace doctest
