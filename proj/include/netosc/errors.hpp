#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netosc {

enum class ErrorCode {
  // graph
  ParseError,
  InvalidEdge,
  DuplicateEdge,
  DisconnectedGraph,
  UnknownDataset,
  UndefinedDensity,
  // spectral
  NotSymmetric,
  NoConvergence,
  DomainError,
  // dynamics
  InvalidMode,
  MomentumInconsistency,
  InvalidArgument,
  // synchronization
  DominantModeUnexcited,
  Unsettled,
  GridError,
  // resonance
  ResonantKickSingularity,
  // swing
  UnbalancedPower,
  SolveFailure,
  NotSettled,
  NoPeak,
  // oracle
  NumericalBlowup,
  GridMismatch,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace netosc
