#pragma once

#include <stdexcept>
#include <string>

namespace metricgeo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that violates a schema or a documented precondition.
struct InvalidInput : Error {
  using Error::Error;
};

// Generation refused because it would exceed a configured resource cap.
struct ResourceLimit : Error {
  using Error::Error;
};

}  // namespace metricgeo
