#pragma once

#include <stdexcept>
#include <string>

namespace pclab {

// Malformed specs, bad parameters, unusable inputs. CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A numerical consistency contract failed (non-Hermitian residue, tolerance
// violation, failed mathematical check). CLI maps this to exit code 1.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Point is outside the collar: the closest-point iteration did not converge.
class CollarError : public NumericError {
public:
  using NumericError::NumericError;
};

}  // namespace pclab
