/*
hypdel

Copyright 2026 The hypdel authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace hypdel {

/** Failure categories. The CLI maps these onto process exit codes. */
enum class ErrorCode {
    // combinatorial input
    UnpairedSide,
    SideReusedInTwoPairs,
    NonOrientable,
    BoundaryDetected,
    Disconnected,
    // numerical preconditions
    DimensionMismatch,
    NotDelaunay,
    TooLarge,
    NotRealizable,
    OutsideDomain,
    // solving
    Infeasible,
    MaxIterExceeded,
    NumericalBreakdown,
    SimplexCycleGuardTripped,
    // realization / I/O
    NotCertified,
    DegenerateCircle,
    IoError,
};

inline const char* error_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::UnpairedSide: return "UnpairedSide";
        case ErrorCode::SideReusedInTwoPairs: return "SideReusedInTwoPairs";
        case ErrorCode::NonOrientable: return "NonOrientable";
        case ErrorCode::BoundaryDetected: return "BoundaryDetected";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotDelaunay: return "NotDelaunay";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotRealizable: return "NotRealizable";
        case ErrorCode::OutsideDomain: return "OutsideDomain";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::MaxIterExceeded: return "MaxIterExceeded";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
        case ErrorCode::SimplexCycleGuardTripped: return "SimplexCycleGuardTripped";
        case ErrorCode::NotCertified: return "NotCertified";
        case ErrorCode::DegenerateCircle: return "DegenerateCircle";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/** Exception carrying an ErrorCode alongside the human-readable message. */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code)
    {
    }
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, ErrorCode code, const std::string& msg)
{
    if (!cond) fail(code, msg);
}

}  // namespace hypdel
