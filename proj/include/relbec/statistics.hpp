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

/** @file statistics.hpp
 *  Pointwise kernels: dispersions, Bose-Einstein occupations and the
 *  k^2-weighted charge-density integrand at a single momentum.
 */

#ifndef RELBEC_STATISTICS_HPP
#define RELBEC_STATISTICS_HPP

#include "relbec/types.hpp"

#include <cstddef>

namespace relbec {

/// Particle and antiparticle energies sqrt(k^2 + 1) -/+ mu.
struct DispersionPair {
    double omega;
    double omega_bar;
};

/** Energies of the thermal particle and antiparticle with momentum k.
 *
 *  The gap that closes as |mu| -> 1 is evaluated as
 *  (k^2 + (1 - mu)(1 + mu)) / (sqrt(k^2 + 1) + |mu|), so omega stays
 *  relatively accurate near k = 0, mu = 1 and dispersions(k, -mu) is
 *  bitwise the swapped pair of dispersions(k, mu).
 */
DispersionPair dispersions(double k, double mu);

/** Bose-Einstein occupation 1 / (exp(energy / t) - 1).
 *
 *  Uses a Laurent expansion for energy / t < 1e-8 and exp(-energy / t)
 *  above 700. Throws GaplessMode for energy == 0 and InvalidArgument for
 *  negative energy or non-positive t.
 */
double occupation(double energy, double t);

/// k^2 * occupation(omega, t) with the finite k -> 0 limit 2t at a gapless mode.
double particle_integrand(double k, const PhasePoint &phase);

/// k^2 * occupation(omega_bar, t); equals particle_integrand at the conjugate phase.
double antiparticle_integrand(double k, const PhasePoint &phase);

/** k^2 [n(omega) - n(omega_bar)], the integrand of the net thermal charge.
 *  At k = 0 and mu = +-1 this returns the analytic limit +-2t. */
double charge_integrand(double k, const PhasePoint &phase);

/** k^2-weighted particle and antiparticle occupations on a uniform grid
 *  over [0, k_max]. No 1/(2 pi^2) prefactor is applied; the difference of
 *  the two curves integrates to 2 pi^2 q_tilde. */
MomentumProfile momentum_profile(const PhasePoint &phase, double k_max, std::size_t samples);

}  // namespace relbec

#endif
