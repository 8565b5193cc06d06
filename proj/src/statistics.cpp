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

#include "relbec/statistics.hpp"

#include "relbec/error.hpp"

#include <cmath>
#include <sstream>

namespace relbec {

namespace {

constexpr double kLaurentThreshold = 1e-8;
constexpr double kOverflowThreshold = 700.0;

// k^2 * n(gap) where gap -> 0 as k -> 0 (only at |mu| = 1). Near that
// point gap ~ k^2 / 2 and the product tends to 2t.
double weighted_occupation(double k, double gap, double t)
{
    if (gap == 0.0)
        return 2.0 * t;
    return k * k * occupation(gap, t);
}

}  // namespace

DispersionPair dispersions(double k, double mu)
{
    const double energy = std::sqrt(k * k + 1.0);
    const double gap_product = k * k + (1.0 - mu) * (1.0 + mu);
    if (mu > 0.0)
        return {gap_product / (energy + mu), energy + mu};
    if (mu < 0.0)
        return {energy - mu, gap_product / (energy - mu)};
    return {energy, energy};
}

double occupation(double energy, double t)
{
    if (!(t > 0.0)) {
        std::ostringstream msg;
        msg << "temperature must be positive, got t = " << t;
        throw Error(ErrorCode::InvalidArgument, "occupation", msg.str());
    }
    if (energy == 0.0)
        throw Error(ErrorCode::GaplessMode, "occupation",
                    "zero-energy mode has divergent occupation; treat it as the condensate");
    if (!(energy > 0.0)) {
        std::ostringstream msg;
        msg << "energy must be non-negative, got " << energy;
        throw Error(ErrorCode::InvalidArgument, "occupation", msg.str());
    }

    const double x = energy / t;
    if (x < kLaurentThreshold)
        return 1.0 / x - 0.5 + x / 12.0;
    if (x > kOverflowThreshold)
        return std::exp(-x);
    return 1.0 / std::expm1(x);
}

double particle_integrand(double k, const PhasePoint &phase)
{
    return weighted_occupation(k, dispersions(k, phase.mu()).omega, phase.t());
}

double antiparticle_integrand(double k, const PhasePoint &phase)
{
    return weighted_occupation(k, dispersions(k, phase.mu()).omega_bar, phase.t());
}

double charge_integrand(double k, const PhasePoint &phase)
{
    const DispersionPair d = dispersions(k, phase.mu());
    return weighted_occupation(k, d.omega, phase.t()) - weighted_occupation(k, d.omega_bar, phase.t());
}

MomentumProfile momentum_profile(const PhasePoint &phase, double k_max, std::size_t samples)
{
    if (!(k_max > 0.0) || !std::isfinite(k_max))
        throw Error(ErrorCode::InvalidArgument, "momentum_profile", "k_max must be positive");
    if (samples < 2)
        throw Error(ErrorCode::InvalidArgument, "momentum_profile", "need at least two samples");

    MomentumProfile profile;
    profile.k_grid.resize(samples);
    profile.n1_of_k.resize(samples);
    profile.n2_of_k.resize(samples);
    const double step = k_max / static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const double k = (i + 1 == samples) ? k_max : step * static_cast<double>(i);
        profile.k_grid[i] = k;
        profile.n1_of_k[i] = particle_integrand(k, phase);
        profile.n2_of_k[i] = antiparticle_integrand(k, phase);
    }
    return profile;
}

}  // namespace relbec
