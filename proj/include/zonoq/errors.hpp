#pragma once

#include <stdexcept>
#include <string>

namespace zonoq {

// Argument violates a documented precondition.
struct validation_error : std::invalid_argument {
  explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Enumeration would exceed its budget.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual or JSON input.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zonoq
