#pragma once

#include <stdexcept>
#include <string>

namespace primdyn {

inline constexpr const char* kVersion = "0.1.0";

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedWordError : Error {
  using Error::Error;
};

struct UnsupportedRankError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// A verifier found its own internal identity violated.  Must never fire.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace primdyn
