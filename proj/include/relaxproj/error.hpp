#pragma once

#include <stdexcept>
#include <string>

namespace relaxproj {

/// Raised for malformed arguments: dimension mismatches, parameters outside
/// their admissible set, schedules queried past their horizon.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace relaxproj
