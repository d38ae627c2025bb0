#ifndef KOSZUL_ERRORS_HPP
#define KOSZUL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

/// Caller handed us data violating a precondition (dimension mismatch,
/// non-closed twist, unknown suite name, ...).
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Input is well-formed but outside what the engine supports
/// (e.g. a gauge series whose adjoint action is not nilpotent).
struct UnsupportedInput : std::runtime_error {
  explicit UnsupportedInput(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax error in the expression / scenario language, with byte position.
struct ParseError : InvalidInput {
  ParseError(const std::string& msg, std::size_t position)
      : InvalidInput(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

}  // namespace koszul

#endif
