// Copyright 2026 The colombeau-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colombeau
{

enum class ErrorCode
{
    InvalidArgument,
    InvalidOrder,
    SingularMomentSystem,
    PoleInDomain,
    NonConvergent,
    DerivativeOrderExceeded,
    EngineLimit,
    DivergentTail,
    UnreducibleTerm,
    SingularCoefficient,
    IllConditionedFit,
    NotInTable,
    InfeasibleG,
    RoundTripFailure,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code)
    {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidOrder: return "InvalidOrder";
        case ErrorCode::SingularMomentSystem: return "SingularMomentSystem";
        case ErrorCode::PoleInDomain: return "PoleInDomain";
        case ErrorCode::NonConvergent: return "NonConvergent";
        case ErrorCode::DerivativeOrderExceeded: return "DerivativeOrderExceeded";
        case ErrorCode::EngineLimit: return "EngineLimit";
        case ErrorCode::DivergentTail: return "DivergentTail";
        case ErrorCode::UnreducibleTerm: return "UnreducibleTerm";
        case ErrorCode::SingularCoefficient: return "SingularCoefficient";
        case ErrorCode::IllConditionedFit: return "IllConditionedFit";
        case ErrorCode::NotInTable: return "NotInTable";
        case ErrorCode::InfeasibleG: return "InfeasibleG";
        case ErrorCode::RoundTripFailure: return "RoundTripFailure";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI output stays greppable.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace colombeau
