#pragma once

#include <stdexcept>

namespace rsaed {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Curve / group arithmetic
struct UnknownCurveError : Error { using Error::Error; };
struct OffCurveError : Error { using Error::Error; };
struct NoSquareRootError : Error { using Error::Error; };

// Plaintext handling
struct RangeError : Error { using Error::Error; };      // plaintext exceeds bound
struct NotFoundError : Error { using Error::Error; };   // reverse mapping failed in range

// Wire codec
struct CodecError : Error { using Error::Error; };
struct FieldOverflowError : CodecError { using CodecError::CodecError; };
struct LengthMismatchError : CodecError { using CodecError::CodecError; };
struct MalformedError : CodecError { using CodecError::CodecError; };
struct MissingFragmentError : CodecError { using CodecError::CodecError; };

// Protocol / simulator
struct ProtocolError : Error { using Error::Error; };   // precondition violations (roles, keys, cluster size)
struct ConfigError : Error { using Error::Error; };     // bad scenario / CLI configuration

}  // namespace rsaed
