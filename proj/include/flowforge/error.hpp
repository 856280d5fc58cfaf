#pragma once

#include <stdexcept>

namespace flowforge {

// Error taxonomy shared by all modules. The CLI maps IoError to exit code 2
// and everything else to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct ConsistencyError : Error {
  using Error::Error;
};
struct ContractError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace flowforge
