#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordertype {

/// An ordinal below epsilon_0 in Cantor normal form base omega:
///   w^e1 * c1 + w^e2 * c2 + ... with e1 > e2 > ... and every c_i > 0.
/// The empty form is 0. Exponents are themselves ordinals in this form.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omegaPower(const Ordinal& exponent, std::uint64_t coefficient = 1);

  bool isZero() const { return exponents_.empty(); }
  bool isFinite() const;
  /// Value of a finite ordinal; throws for infinite ones.
  std::uint64_t finiteValue() const;
  bool isSuccessor() const;
  bool isLimit() const { return !isZero() && !isSuccessor(); }

  std::size_t termCount() const { return exponents_.size(); }
  const Ordinal& exponent(std::size_t i) const { return exponents_[i]; }
  std::uint64_t coefficient(std::size_t i) const { return coefficients_[i]; }
  /// Coefficient of w^0.
  std::uint64_t finitePart() const;

  Ordinal operator+(const Ordinal& rhs) const;
  Ordinal operator*(const Ordinal& rhs) const;

  /// The unique g with below + g == *this; requires below <= *this.
  Ordinal minusLeft(const Ordinal& below) const;
  /// Writes *this = w * quotient + remainder with remainder finite.
  std::pair<Ordinal, std::uint64_t> divideByOmega() const;
  /// Predecessor of a successor ordinal.
  Ordinal predecessor() const;

  /// The exponents are all finite (the ordinal is below w^w).
  bool hasFiniteExponents() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

  /// e.g. "w^2*3 + w + 5"; "0" for zero.
  std::string toString() const;
  /// Parses the toString() syntax (also accepts "w^(w+1)").
  static Ordinal parse(const std::string& text);

 private:
  void push(Ordinal exponent, std::uint64_t coefficient);

  std::vector<Ordinal> exponents_;
  std::vector<std::uint64_t> coefficients_;
};

}  // namespace ordertype
