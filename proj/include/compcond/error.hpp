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

#ifndef COMPCOND_ERROR_HPP
#define COMPCOND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace compcond {

enum class ErrorCode {
    Singular,
    ZeroConstantTerm,
    NonUnitConstantTerm,
    DimensionTooLarge,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidStructure,
    InvalidPermutation,
    InvalidTuple,
    BadShape,
    BadEll,
    HypothesisNotMet,
    NotFiedler,
    ParseError,
    DegreeTooSmall,
    NoFeasibleFamily,
    IoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` identifies the violated
/// precondition; `what()` carries a human-readable description.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace compcond

#endif  // COMPCOND_ERROR_HPP
