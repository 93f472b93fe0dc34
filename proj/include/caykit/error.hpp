#pragma once

#include <stdexcept>
#include <string>

namespace caykit {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed the configured size cap.
struct CapExceeded : Error {
  CapExceeded(const std::string& what, long long estimate)
      : Error(what), estimate(estimate) {}
  long long estimate;
};

// Thrown when a query needs more of an infinite object than was materialized.
struct WindowExhausted : Error {
  using Error::Error;
};

}  // namespace caykit
