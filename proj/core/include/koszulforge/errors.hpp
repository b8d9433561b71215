#pragma once

#include <stdexcept>
#include <string>

namespace kf {

/// Malformed or inconsistent input (bad modulus, degree, index, schema...).
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation refused to finish within its degree/size budget.
/// Not fatal for callers that can emit partial reports; the CLI maps it to
/// exit code 3.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kf
