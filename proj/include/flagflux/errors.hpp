#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flagflux {

/// Input text could not be read as a Malcev tuple, a form, or a config.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, index_out_of_range };

  ParseError(Kind kind, std::size_t position, const std::string& message)
      : std::runtime_error(describe(kind, position, message)),
        kind_(kind),
        position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  static std::string describe(Kind kind, std::size_t position,
                              const std::string& message) {
    const char* tag =
        kind == Kind::syntax ? "syntax error" : "index out of range";
    return std::string(tag) + " at position " + std::to_string(position) +
           ": " + message;
  }

  Kind kind_;
  std::size_t position_;
};

/// Well-formed input that violates a mathematical precondition
/// (non-admissible triple, unsupported series, bad block parameters, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flagflux
