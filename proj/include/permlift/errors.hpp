#pragma once

#include <stdexcept>
#include <string>

namespace permlift {

// Base for every error the library reports on purpose. Internal invariant
// breaks are std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. CLI exit code 1.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured search or enumeration cap was hit. CLI exit code 2.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace permlift
