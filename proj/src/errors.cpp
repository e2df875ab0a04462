#include "netosc/errors.hpp"

namespace netosc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::UndefinedDensity: return "UndefinedDensity";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidMode: return "InvalidMode";
    case ErrorCode::MomentumInconsistency: return "MomentumInconsistency";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DominantModeUnexcited: return "DominantModeUnexcited";
    case ErrorCode::Unsettled: return "Unsettled";
    case ErrorCode::GridError: return "GridError";
    case ErrorCode::ResonantKickSingularity: return "ResonantKickSingularity";
    case ErrorCode::UnbalancedPower: return "UnbalancedPower";
    case ErrorCode::SolveFailure: return "SolveFailure";
    case ErrorCode::NotSettled: return "NotSettled";
    case ErrorCode::NoPeak: return "NoPeak";
    case ErrorCode::NumericalBlowup: return "NumericalBlowup";
    case ErrorCode::GridMismatch: return "GridMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace netosc
