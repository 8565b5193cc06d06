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

#include "relbec/error.hpp"
#include "relbec/types.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace relbec {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonPositiveTemperature: return "NonPositiveTemperature";
    case ErrorCode::UnphysicalMu: return "UnphysicalMu";
    case ErrorCode::GaplessMode: return "GaplessMode";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::BelowCritical: return "BelowCritical";
    case ErrorCode::AboveCritical: return "AboveCritical";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::BelowMassGap: return "BelowMassGap";
    case ErrorCode::AsymptoteOutOfRange: return "AsymptoteOutOfRange";
    case ErrorCode::TailTooLarge: return "TailTooLarge";
    case ErrorCode::DivergentCondensateMode: return "DivergentCondensateMode";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string operation, const std::string &message)
    : std::runtime_error(operation + ": " + message), code_(code), operation_(std::move(operation))
{
}

PhasePoint make_phase_point(double t, double mu)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << "temperature must be positive and finite, got t = " << t;
        throw Error(ErrorCode::NonPositiveTemperature, "make_phase_point", msg.str());
    }
    if (!(std::abs(mu) <= 1.0)) {
        std::ostringstream msg;
        msg << "chemical potential must satisfy |mu| <= 1, got mu = " << mu;
        throw Error(ErrorCode::UnphysicalMu, "make_phase_point", msg.str());
    }
    return PhasePoint(t, mu);
}

ChargeDensities ChargeDensities::from_components(double n1, double n2)
{
    if (!(n1 >= 0.0) || !(n2 >= 0.0) || !std::isfinite(n1) || !std::isfinite(n2)) {
        std::ostringstream msg;
        msg << "densities must be finite and non-negative, got n1 = " << n1 << ", n2 = " << n2;
        throw Error(ErrorCode::InvalidArgument, "ChargeDensities", msg.str());
    }
    return ChargeDensities(n1, n2);
}

ChargeDensities ChargeDensities::from_expansion(double n1, double n2)
{
    if (!std::isfinite(n1) || !std::isfinite(n2)) {
        std::ostringstream msg;
        msg << "densities must be finite, got n1 = " << n1 << ", n2 = " << n2;
        throw Error(ErrorCode::InvalidArgument, "ChargeDensities", msg.str());
    }
    return ChargeDensities(n1, n2);
}

double ChargeDensities::antiparticle_ratio() const noexcept
{
    if (n1_ == 0.0)
        return 0.0;
    return n2_ / n1_;
}

double BoxSpec::mode_spacing() const noexcept
{
    return 2.0 * std::numbers::pi / box_length_;
}

}  // namespace relbec
