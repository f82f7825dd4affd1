#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dioquad {

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Parameters or inputs for which a construction is undefined: a vanishing
/// factor, a singular curve, coinciding tuple elements.
class DegenerateError : public std::domain_error {
  public:
    explicit DegenerateError(const std::string& factor)
        : std::domain_error("degenerate input: " + factor + " vanishes"), factor_(factor) {}
    DegenerateError(const std::string& factor, const std::string& what)
        : std::domain_error(what), factor_(factor) {}

    const std::string& factor() const { return factor_; }

  private:
    std::string factor_;
};

/// A tuple that was required to be Diophantine is not.
class NotDiophantineError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dioquad
