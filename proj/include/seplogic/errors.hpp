#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seplogic {

/// Malformed or out-of-range input: bad vertex ids, invalid structures,
/// unbound variables, unknown builder names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Formula text that does not match the grammar. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(message + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A search whose estimated cost exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double estimate, double budget)
      : std::runtime_error("estimated cost " + format(estimate) + " exceeds budget " +
                           format(budget)),
        estimate_(estimate),
        budget_(budget) {}

  double estimate() const { return estimate_; }
  double budget() const { return budget_; }

 private:
  static std::string format(double value);
  double estimate_;
  double budget_;
};

/// Budget from SEPLOGIC_BUDGET when set and parseable, otherwise `fallback`.
double budget_from_environment(double fallback = 1e8);

}  // namespace seplogic
