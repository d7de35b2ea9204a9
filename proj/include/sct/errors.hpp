#pragma once

#include <stdexcept>
#include <string>

namespace sct {

// Malformed input: unknown symbols, bad descriptors, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request outside the configured enumeration/search bounds.
class BoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A tabulated family asked about a profile beyond its horizon.
class HorizonError : public BoundError {
 public:
  using BoundError::BoundError;
};

}  // namespace sct
