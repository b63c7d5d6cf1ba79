#pragma once

#include <stdexcept>
#include <string>

namespace wenonn {

/// Invalid user-supplied configuration: bad grid, unknown scheme, malformed config file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (shape mismatch, index out of range).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical breakdown: non-finite values, non-physical states, inadmissible averages.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wenonn
