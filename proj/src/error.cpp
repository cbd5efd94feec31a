/*
   Copyright 2026 The compcond Authors

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

#include "compcond/error.hpp"

namespace compcond {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
        case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidStructure: return "InvalidStructure";
        case ErrorCode::InvalidPermutation: return "InvalidPermutation";
        case ErrorCode::InvalidTuple: return "InvalidTuple";
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::BadEll: return "BadEll";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::NotFiedler: return "NotFiedler";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::NoFeasibleFamily: return "NoFeasibleFamily";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace compcond
