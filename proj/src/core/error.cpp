#include "gcvs/error.hpp"

namespace gcvs {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidBitString: return "InvalidBitString";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NonTriangularLength: return "NonTriangularLength";
    case ErrorCode::PaddingMismatch: return "PaddingMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonBinaryStructureDigit: return "NonBinaryStructureDigit";
    case ErrorCode::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::TooLargeForOracle: return "TooLargeForOracle";
    case ErrorCode::ExtensionPatternMismatch: return "ExtensionPatternMismatch";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::PayloadTooShort: return "PayloadTooShort";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ExcludedSecret: return "ExcludedSecret";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DealerExhausted: return "DealerExhausted";
    case ErrorCode::InvalidSecret: return "InvalidSecret";
    case ErrorCode::InvalidRecovery: return "InvalidRecovery";
  }
  return "Unknown";
}

}  // namespace gcvs
