#pragma once

#include <stdexcept>

namespace qbalance {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid construction or query parameters. The command line maps these
// to exit code 2.
struct ParameterError : Error {
  using Error::Error;
};
struct UnknownScheme : ParameterError {
  using ParameterError::ParameterError;
};
struct UnsupportedRange : ParameterError {
  using ParameterError::ParameterError;
};
struct SizeGuardExceeded : ParameterError {
  using ParameterError::ParameterError;
};

// Malformed or mismatched data. The command line maps these to exit code 3.
struct DataError : Error {
  using Error::Error;
};
struct LengthMismatch : DataError {
  using DataError::DataError;
};
struct AlphabetMismatch : DataError {
  using DataError::DataError;
};
struct IndexOutOfRange : DataError {
  using DataError::DataError;
};
struct EncodingFailure : DataError {
  using DataError::DataError;
};
struct PrefixOutOfSubset : DataError {
  using DataError::DataError;
};
struct NotBalanced : DataError {
  using DataError::DataError;
};

// Window selection found no admissible window. Indicates a broken invariant,
// not bad input.
struct SubsetNotFound : Error {
  using Error::Error;
};

}  // namespace qbalance
