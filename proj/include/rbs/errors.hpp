#pragma once

#include <stdexcept>
#include <string>

namespace rbs {

// Malformed or inconsistent user data: unparsable literals, shape
// mismatches, unknown JSON fields, mixed prime-field moduli.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A stated hypothesis of an operation does not hold.  Deliberately distinct
// from a checked identity failing, which is an ordinary report result.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rbs
