#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace menger {

enum class error_code {
  missing_entry,
  duplicate_entry,
  unknown_element,
  invalid_name,
  not_superassociative,
  capacity_exceeded,
  syntax_error,
  arity_mismatch,
  multiple_variables,
  no_variable,
  invalid_argument,
  not_a_block,
  unknown_property,
  malformed_file,
};

inline char const* to_string(error_code code) noexcept {
  switch (code) {
    case error_code::missing_entry: return "missing entry";
    case error_code::duplicate_entry: return "duplicate entry";
    case error_code::unknown_element: return "unknown element";
    case error_code::invalid_name: return "invalid name";
    case error_code::not_superassociative: return "not superassociative";
    case error_code::capacity_exceeded: return "capacity exceeded";
    case error_code::syntax_error: return "syntax error";
    case error_code::arity_mismatch: return "arity mismatch";
    case error_code::multiple_variables: return "multiple variables";
    case error_code::no_variable: return "no variable";
    case error_code::invalid_argument: return "invalid argument";
    case error_code::not_a_block: return "not a block";
    case error_code::unknown_property: return "unknown property";
    case error_code::malformed_file: return "malformed file";
  }
  return "error";
}

// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(error_code code, std::string const& message)
      : std::runtime_error(message), code_(code) {}

  error_code code() const noexcept { return code_; }

 private:
  error_code code_;
};

// Raised by the algebra-file reader; line is 1-based, 0 when the problem is
// not tied to a single line (e.g. an entry that never appears).
class file_error : public error {
 public:
  file_error(error_code code, std::size_t line, std::string const& message)
      : error(code, line == 0 ? message
                              : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace menger
