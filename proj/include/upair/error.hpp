#pragma once

#include <stdexcept>
#include <string>

namespace upair {

/// Raised for malformed or incompatible input (bad JSON, boundary mismatch,
/// unknown prime names, ...). The CLI maps it to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace upair
