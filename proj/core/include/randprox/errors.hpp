#pragma once

#include <stdexcept>
#include <string>

namespace randprox {

enum class ErrorCode {
  MalformedGraph,
  MalformedCover,
  EmptyGraph,
  NonpositiveRho,
  ShapeMismatch,
  IndexOutOfRange,
  InvalidDistribution,
  InvalidQ,
  NotAnEdge,
  NonsmoothAtPoint,
  UnsupportedMix,
  ConfigInvalid,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph: return "MALFORMED_GRAPH";
    case ErrorCode::MalformedCover: return "MALFORMED_COVER";
    case ErrorCode::EmptyGraph: return "EMPTY_GRAPH";
    case ErrorCode::NonpositiveRho: return "NONPOSITIVE_RHO";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::InvalidDistribution: return "INVALID_DISTRIBUTION";
    case ErrorCode::InvalidQ: return "INVALID_Q";
    case ErrorCode::NotAnEdge: return "NOT_AN_EDGE";
    case ErrorCode::NonsmoothAtPoint: return "NONSMOOTH_AT_POINT";
    case ErrorCode::UnsupportedMix: return "UNSUPPORTED_MIX";
    case ErrorCode::ConfigInvalid: return "CONFIG_INVALID";
  }
  return "UNKNOWN";
}

/// Exception carrying one of the library's named error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace randprox
