#pragma once

#include <stdexcept>
#include <string>

namespace coltri {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error { using Error::Error; };
class NotABijection : public Error { using Error::Error; };
class InvalidColourSet : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class NotAComponent : public Error { using Error::Error; };
class NotBipartite : public Error { using Error::Error; };
class InvalidMove : public Error { using Error::Error; };
class Disconnected : public Error { using Error::Error; };
class OddDimension : public Error { using Error::Error; };
class BadParams : public Error { using Error::Error; };
class NotAConstructionGraph : public Error { using Error::Error; };
class OddN : public Error { using Error::Error; };
class BudgetExceeded : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

/// CGF parse failure; carries the 1-based line and the offending token.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::string token, const std::string& what)
      : Error("line " + std::to_string(line) + ", token '" + token + "': " + what),
        line_(line), token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

private:
  std::size_t line_;
  std::string token_;
};

}  // namespace coltri
