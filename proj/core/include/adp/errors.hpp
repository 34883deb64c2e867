#pragma once

#include <stdexcept>
#include <string>

namespace adp {

// Resource limits (table too large, series cannot reach tolerance, ...).
class CapacityError : public std::runtime_error {
public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations map to std::invalid_argument; this alias keeps the
// call sites descriptive.
using DomainError = std::invalid_argument;

}  // namespace adp
