#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcvs {

enum class ErrorCode {
  InvalidArgument,
  InvalidBitString,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  NonTriangularLength,
  PaddingMismatch,
  LengthMismatch,
  NonBinaryStructureDigit,
  ColorOutOfRange,
  GraphTooLarge,
  TooLargeForOracle,
  ExtensionPatternMismatch,
  Malformed,
  PayloadTooShort,
  SamplingExhausted,
  ModulusMismatch,
  ExcludedSecret,
  ShapeMismatch,
  DealerExhausted,
  InvalidSecret,
  InvalidRecovery,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the C
// layer maps them one-to-one onto gcvs_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gcvs
