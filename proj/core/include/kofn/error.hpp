#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kofn {

enum class ErrorCode {
  // Transition matrix validation.
  NegativeEntry,
  EntryAboveOne,
  NonFiniteEntry,
  RowSumViolation,
  // Chain construction.
  ZeroLength,
  GapInCoverage,
  OverlappingSegments,
  IndexOutOfRange,
  // System specification and computation preconditions.
  InvalidThreshold,
  SizeMismatch,
  WrongStructure,
  ThresholdOutOfRange,
  TooLarge,
  ZeroSamples,
  // Input documents and fixtures.
  MalformedDocument,
  UnknownFixture,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kofn
