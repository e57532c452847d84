#include "ordertype/ordinal.hpp"

#include <cctype>
#include <sstream>

#include "ordertype/errors.hpp"

namespace ordertype {

namespace {

std::uint64_t checkedAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) unsupported("ordinal coefficient overflow");
  return r;
}

std::uint64_t checkedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) unsupported("ordinal coefficient overflow");
  return r;
}

}  // namespace

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.push(Ordinal(), n);
  return r;
}

Ordinal Ordinal::omega() { return omegaPower(finite(1)); }

Ordinal Ordinal::omegaPower(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal r;
  if (coefficient > 0) r.push(exponent, coefficient);
  return r;
}

void Ordinal::push(Ordinal exponent, std::uint64_t coefficient) {
  exponents_.push_back(std::move(exponent));
  coefficients_.push_back(coefficient);
}

bool Ordinal::isFinite() const {
  return isZero() || (exponents_.size() == 1 && exponents_[0].isZero());
}

std::uint64_t Ordinal::finiteValue() const {
  if (!isFinite()) throw OrderError(ErrorKind::InvalidArgument, "ordinal is infinite: " + toString());
  return isZero() ? 0 : coefficients_[0];
}

bool Ordinal::isSuccessor() const { return !isZero() && exponents_.back().isZero(); }

std::uint64_t Ordinal::finitePart() const { return isSuccessor() ? coefficients_.back() : 0; }

bool Ordinal::hasFiniteExponents() const {
  for (const auto& e : exponents_)
    if (!e.isFinite()) return false;
  return true;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.coefficients_ == b.coefficients_ && a.exponents_ == b.exponents_;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.termCount(), b.termCount());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.exponents_[i] <=> b.exponents_[i]; c != 0) return c;
    if (auto c = a.coefficients_[i] <=> b.coefficients_[i]; c != 0) return c;
  }
  return a.termCount() <=> b.termCount();
}

Ordinal Ordinal::operator+(const Ordinal& rhs) const {
  if (rhs.isZero()) return *this;
  const Ordinal& lead = rhs.exponents_[0];
  Ordinal r;
  std::size_t i = 0;
  for (; i < termCount() && exponents_[i] > lead; ++i) r.push(exponents_[i], coefficients_[i]);
  std::size_t j = 0;
  if (i < termCount() && exponents_[i] == lead) {
    r.push(lead, checkedAdd(coefficients_[i], rhs.coefficients_[0]));
    j = 1;
  }
  for (; j < rhs.termCount(); ++j) r.push(rhs.exponents_[j], rhs.coefficients_[j]);
  return r;
}

Ordinal Ordinal::operator*(const Ordinal& rhs) const {
  if (isZero() || rhs.isZero()) return Ordinal();
  Ordinal r;
  for (std::size_t j = 0; j < rhs.termCount(); ++j) {
    Ordinal piece;
    if (rhs.exponents_[j].isZero()) {
      piece.push(exponents_[0], checkedMul(coefficients_[0], rhs.coefficients_[j]));
      for (std::size_t i = 1; i < termCount(); ++i) piece.push(exponents_[i], coefficients_[i]);
    } else {
      piece.push(exponents_[0] + rhs.exponents_[j], rhs.coefficients_[j]);
    }
    r = r + piece;
  }
  return r;
}

Ordinal Ordinal::minusLeft(const Ordinal& below) const {
  if (below > *this) throw OrderError(ErrorKind::InvalidArgument, "minusLeft: argument exceeds ordinal");
  std::size_t i = 0;
  while (i < below.termCount() && i < termCount() && below.exponents_[i] == exponents_[i] &&
         below.coefficients_[i] == coefficients_[i])
    ++i;
  Ordinal r;
  if (i == below.termCount()) {
    for (std::size_t k = i; k < termCount(); ++k) r.push(exponents_[k], coefficients_[k]);
    return r;
  }
  // below and *this first differ at term i, with below smaller there.
  if (below.exponents_[i] == exponents_[i]) {
    r.push(exponents_[i], coefficients_[i] - below.coefficients_[i]);
    for (std::size_t k = i + 1; k < termCount(); ++k) r.push(exponents_[k], coefficients_[k]);
  } else {
    for (std::size_t k = i; k < termCount(); ++k) r.push(exponents_[k], coefficients_[k]);
  }
  return r;
}

std::pair<Ordinal, std::uint64_t> Ordinal::divideByOmega() const {
  Ordinal q;
  std::uint64_t rem = 0;
  const Ordinal one = finite(1);
  for (std::size_t i = 0; i < termCount(); ++i) {
    const Ordinal& e = exponents_[i];
    if (e.isZero()) {
      rem = coefficients_[i];
    } else if (e.isFinite()) {
      q.push(finite(e.finiteValue() - 1), coefficients_[i]);
    } else {
      q.push(e, coefficients_[i]);  // 1 + e == e
    }
  }
  return {q, rem};
}

Ordinal Ordinal::predecessor() const {
  if (!isSuccessor()) throw OrderError(ErrorKind::InvalidArgument, "not a successor: " + toString());
  Ordinal r = *this;
  if (--r.coefficients_.back() == 0) {
    r.coefficients_.pop_back();
    r.exponents_.pop_back();
  }
  return r;
}

std::string Ordinal::toString() const {
  if (isZero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < termCount(); ++i) {
    if (i > 0) out << " + ";
    const Ordinal& e = exponents_[i];
    const std::uint64_t c = coefficients_[i];
    if (e.isZero()) {
      out << c;
      continue;
    }
    out << 'w';
    if (!(e.isFinite() && e.finiteValue() == 1)) {
      if (e.termCount() == 1 && (e.isFinite() || e == omega()))
        out << '^' << e.toString();
      else
        out << "^(" << e.toString() << ')';
    }
    if (c != 1) out << '*' << c;
  }
  return out.str();
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(const std::string& s) : s_(s) {}

  Ordinal parseAll() {
    Ordinal r = sum();
    skip();
    if (pos_ != s_.size()) fail();
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail() {
    throw ParseError(ErrorKind::Syntax, "bad ordinal literal '" + s_ + "'", pos_);
  }
  std::uint64_t number() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail();
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = checkedAdd(checkedMul(v, 10), static_cast<std::uint64_t>(s_[pos_++] - '0'));
    return v;
  }
  Ordinal sum() {
    Ordinal r = term();
    while (eat('+')) r = r + term();
    return r;
  }
  Ordinal term() {
    if (eat('w')) {
      Ordinal e = Ordinal::finite(1);
      if (eat('^')) {
        if (eat('(')) {
          e = sum();
          if (!eat(')')) fail();
        } else if (eat('w')) {
          e = Ordinal::omega();
        } else {
          e = Ordinal::finite(number());
        }
      }
      std::uint64_t c = 1;
      if (eat('*')) c = number();
      return Ordinal::omegaPower(e, c);
    }
    return Ordinal::finite(number());
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(const std::string& text) { return OrdinalParser(text).parseAll(); }

}  // namespace ordertype
