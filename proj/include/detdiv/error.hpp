#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace detdiv {

enum class ErrorCode {
  InvalidArgument,
  RingMismatch,
  DimensionMismatch,
  DimensionCap,
  ZeroIdeal,
  InvalidChain,
  Unsupported,
  SearchExhausted,
  ScanTooLarge,
  MalformedInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::DimensionCap: return "dimension_cap";
    case ErrorCode::ZeroIdeal: return "zero_ideal";
    case ErrorCode::InvalidChain: return "invalid_chain";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::SearchExhausted: return "search_exhausted";
    case ErrorCode::ScanTooLarge: return "scan_too_large";
    case ErrorCode::MalformedInput: return "malformed_input";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace detdiv
