#include "ordertype/level.hpp"

#include "ordertype/errors.hpp"

namespace ordertype {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::UnsupportedFragment: return "UnsupportedFragment";
    case ErrorKind::NoEndpoint: return "NoEndpoint";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::InvalidSample: return "InvalidSample";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

const char* levelName(Level level) { return level == Level::Finite ? "fc" : "cc"; }

Level parseLevel(const std::string& name) {
  if (name == "fc" || name == "finite" || name == "FINITE") return Level::Finite;
  if (name == "cc" || name == "countable" || name == "COUNTABLE") return Level::Countable;
  throw OrderError(ErrorKind::InvalidArgument, "unknown level '" + name + "' (expected cc or fc)");
}

Cardinality Cardinality::operator+(Cardinality other) const {
  if (isFinite() && other.isFinite()) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(n_, other.n_, &r)) return aleph0();
    return finite(r);
  }
  return kind_ >= other.kind_ ? Cardinality(kind_, 0) : Cardinality(other.kind_, 0);
}

Cardinality Cardinality::operator*(Cardinality other) const {
  if (isZero() || other.isZero()) return finite(0);
  if (isFinite() && other.isFinite()) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(n_, other.n_, &r)) return aleph0();
    return finite(r);
  }
  return kind_ >= other.kind_ ? Cardinality(kind_, 0) : Cardinality(other.kind_, 0);
}

Cardinality Cardinality::minus(std::uint64_t k) const {
  if (!isFinite()) return *this;
  return finite(n_ >= k ? n_ - k : 0);
}

std::string Cardinality::toString() const {
  switch (kind_) {
    case Kind::Finite: return "FIN(" + std::to_string(n_) + ")";
    case Kind::Aleph0: return "ALEPH0";
    case Kind::Aleph1: return "ALEPH1";
    case Kind::Aleph2Plus: return "ALEPH2PLUS";
  }
  return "?";
}

}  // namespace ordertype
