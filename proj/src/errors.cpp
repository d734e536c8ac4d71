#include "seplogic/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace seplogic {

std::string BudgetExceeded::format(double value) {
  std::ostringstream out;
  out.precision(3);
  out << value;
  return out.str();
}

double budget_from_environment(double fallback) {
  const char* raw = std::getenv("SEPLOGIC_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0)) return fallback;
  return value;
}

}  // namespace seplogic
