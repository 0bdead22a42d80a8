#pragma once

#include <stdexcept>
#include <string>

namespace gibbs {

// Requested dense dimension exceeds the configured limit.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A parameter/result file is missing, unreadable or fails validation.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gibbs
