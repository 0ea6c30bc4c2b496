#pragma once

#include <stdexcept>
#include <string>

namespace dqc1 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Domain-validation failure (odd split height, bad level count, non-boolean
/// oracle mask, negative weight, ...). CLI exit code 4.
struct ValidationError : Error {
  using Error::Error;
};

/// Panel/profile dimension or cell-tiling mismatch. CLI exit code 3.
struct DimsError : Error {
  using Error::Error;
};

/// File access or parse failure. CLI exit code 1.
struct IoError : Error {
  using Error::Error;
};

}  // namespace dqc1
