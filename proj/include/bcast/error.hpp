#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcast {

enum class ErrorCode {
  InvalidDimensions,
  DisconnectedTree,
  UnknownVertex,
  DuplicateTower,
  TowerOutsideGraph,
  HypothesisViolated,
  UnsupportedShapeForR,
  UnsupportedTRPair,
  UnsupportedR,
  NotAPathDecomposition,
  WindowTooSmall,
  TooLarge,
  Infeasible,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimensions: return "InvalidDimensions";
    case ErrorCode::DisconnectedTree: return "DisconnectedTree";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateTower: return "DuplicateTower";
    case ErrorCode::TowerOutsideGraph: return "TowerOutsideGraph";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::UnsupportedShapeForR: return "UnsupportedShapeForR";
    case ErrorCode::UnsupportedTRPair: return "UnsupportedTRPair";
    case ErrorCode::UnsupportedR: return "UnsupportedR";
    case ErrorCode::NotAPathDecomposition: return "NotAPathDecomposition";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `code()` lets callers
/// branch without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& detail) {
  if (!condition) throw Error(code, detail);
}

}  // namespace bcast
