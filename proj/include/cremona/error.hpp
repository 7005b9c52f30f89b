#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Failure categories. The numeric values are part of the C ABI
/// (see cremona.h) and must not be reordered.
enum class ErrorCode : int {
  kLatticeMismatch = 1,
  kDimension = 2,
  kAdjunctionParity = 3,
  kConfiguration = 4,
  kModel = 5,
  kNotPlanar = 6,
  kContradiction = 7,
  kRank = 8,
  kPredicate = 9,
  kOutOfRange = 10,
  kParse = 11,
  kOverflow = 12,
  kIo = 13,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cremona
