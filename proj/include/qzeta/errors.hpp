#pragma once
// Exception taxonomy: genuine poles of local factors, failed cross-checks
// between independently computed objects, and malformed algebraic input.

#include <stdexcept>
#include <string>

namespace qzeta {

struct pole_error : std::domain_error {
  explicit pole_error(const std::string& m) : std::domain_error(m) {}
};

// Two routes that must agree did not.
struct consistency_error : std::logic_error {
  explicit consistency_error(const std::string& m) : std::logic_error(m) {}
};

struct structural_error : std::invalid_argument {
  explicit structural_error(const std::string& m) : std::invalid_argument(m) {}
};

}  // namespace qzeta
