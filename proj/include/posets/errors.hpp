#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posets {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& label)
      : Error("unknown element '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class DuplicateLabel : public Error {
 public:
  explicit DuplicateLabel(const std::string& label)
      : Error("duplicate element label '" + label + "'") {}
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class EmptyPoset : public Error {
 public:
  EmptyPoset() : Error("operation requires a nonempty poset") {}
};

class LabelClash : public Error {
 public:
  explicit LabelClash(const std::string& label)
      : Error("label '" + label + "' is already present") {}
};

class NoBottom : public Error {
 public:
  NoBottom() : Error("poset has no unique minimal element") {}
};

class VariableMismatch : public Error {
 public:
  using Error::Error;
};

class NotInLattice : public Error {
 public:
  explicit NotInLattice(const std::string& what)
      : Error("'" + what + "' is not an element of the lcm-lattice") {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class VoidComplex : public Error {
 public:
  VoidComplex() : Error("the void complex has no chain complex") {}
};

class DuplicateHyperplane : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Bad argument to an otherwise total operation (e.g. a Betti index of 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return "parse error: " + message;
    return "parse error at line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// An internal consistency check failed. Indicates a library bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline void ensure(bool condition, const char* what) {
  if (!condition) throw InvariantViolation(what);
}
}  // namespace detail

}  // namespace posets
