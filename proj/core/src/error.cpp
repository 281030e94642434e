#include "kofn/error.hpp"

namespace kofn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::EntryAboveOne: return "EntryAboveOne";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::RowSumViolation: return "RowSumViolation";
    case ErrorCode::ZeroLength: return "ZeroLength";
    case ErrorCode::GapInCoverage: return "GapInCoverage";
    case ErrorCode::OverlappingSegments: return "OverlappingSegments";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidThreshold: return "InvalidThreshold";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::WrongStructure: return "WrongStructure";
    case ErrorCode::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroSamples: return "ZeroSamples";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

}  // namespace kofn
