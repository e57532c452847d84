#pragma once

#include <stdexcept>
#include <string>

namespace ordertype {

enum class ErrorKind {
  Syntax,
  Arity,
  UnsupportedFragment,
  NoEndpoint,
  InvalidCode,
  InvalidSample,
  VerificationFailed,
  InvalidArgument,
};

const char* errorKindName(ErrorKind kind);

class OrderError : public std::runtime_error {
 public:
  OrderError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the byte offset of the offending token.
class ParseError : public OrderError {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t position)
      : OrderError(kind, message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void unsupported(const std::string& what) {
  throw OrderError(ErrorKind::UnsupportedFragment, what);
}

}  // namespace ordertype
