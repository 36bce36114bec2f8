// errors.hpp — error codes and the exception type shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace ergophase {

enum class ErrorCode {
    NotHermitian,
    ConvergenceFailure,
    DimensionMismatch,
    SingularCondition,
    ZeroProbability,
    GridMismatch,
    GridTooCoarse,
    KernelTruncated,
    DegenerateUpdate,
    GridTooNarrow,
    ZeroNorm,
    NoCrossing,
    DegenerateEnergies,
    UnmatchedPairs,
    NonpositiveTime,
    InvalidGeometry,
    NotTunneling,
    WindowCrossesZero,
    WidthTooLarge,
    TailNotConverged,
    ParseError,
    ValidationError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotHermitian:       return "NotHermitian";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::DimensionMismatch:  return "DimensionMismatch";
        case ErrorCode::SingularCondition:  return "SingularCondition";
        case ErrorCode::ZeroProbability:    return "ZeroProbability";
        case ErrorCode::GridMismatch:       return "GridMismatch";
        case ErrorCode::GridTooCoarse:      return "GridTooCoarse";
        case ErrorCode::KernelTruncated:    return "KernelTruncated";
        case ErrorCode::DegenerateUpdate:   return "DegenerateUpdate";
        case ErrorCode::GridTooNarrow:      return "GridTooNarrow";
        case ErrorCode::ZeroNorm:           return "ZeroNorm";
        case ErrorCode::NoCrossing:         return "NoCrossing";
        case ErrorCode::DegenerateEnergies: return "DegenerateEnergies";
        case ErrorCode::UnmatchedPairs:     return "UnmatchedPairs";
        case ErrorCode::NonpositiveTime:    return "NonpositiveTime";
        case ErrorCode::InvalidGeometry:    return "InvalidGeometry";
        case ErrorCode::NotTunneling:       return "NotTunneling";
        case ErrorCode::WindowCrossesZero:  return "WindowCrossesZero";
        case ErrorCode::WidthTooLarge:      return "WidthTooLarge";
        case ErrorCode::TailNotConverged:   return "TailNotConverged";
        case ErrorCode::ParseError:         return "ParseError";
        case ErrorCode::ValidationError:    return "ValidationError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace ergophase
