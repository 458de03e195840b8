#pragma once

#include <stdexcept>
#include <string>

namespace pursuit {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateGeometry : Error {
  using Error::Error;
};

struct InvalidSpeeds : Error {
  using Error::Error;
};

struct InvalidTimestep : Error {
  using Error::Error;
};

struct UnknownId : Error {
  using Error::Error;
};

struct EmptyEvaderSet : Error {
  using Error::Error;
};

struct IterationLimitExceeded : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct InvalidConfig : Error {
  using Error::Error;
};

struct MaxTimeExceeded : Error {
  using Error::Error;
};

struct NoCapture : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace pursuit
