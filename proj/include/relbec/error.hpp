/* Copyright 2026 The relbec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/** @file error.hpp
 *  Error type shared by all relbec modules.
 */

#ifndef RELBEC_ERROR_HPP
#define RELBEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace relbec {

enum class ErrorCode {
    InvalidArgument,
    NonPositiveTemperature,
    UnphysicalMu,
    GaplessMode,
    NonConvergence,
    BelowCritical,
    AboveCritical,
    UnsupportedDimension,
    BelowMassGap,
    AsymptoteOutOfRange,
    TailTooLarge,
    DivergentCondensateMode
};

std::string_view to_string(ErrorCode code) noexcept;

/** Thrown by every operation that rejects its input or fails to converge.
 *  operation() names the public operation that raised it, so front ends
 *  can report which step of a pipeline failed. */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string operation, const std::string &message);

    ErrorCode code() const noexcept { return code_; }
    const std::string &operation() const noexcept { return operation_; }

private:
    ErrorCode code_;
    std::string operation_;
};

}  // namespace relbec

#endif
