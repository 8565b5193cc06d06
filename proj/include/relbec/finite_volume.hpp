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

/** @file finite_volume.hpp
 *  Brute-force mode sums in a periodic cubic box, used to check the
 *  thermodynamic-limit integrals independently of the quadrature.
 *
 *  Modes are k = (2 pi / L) n for n in Z^3, n != 0, |n| <= mode_cutoff.
 *  The zero mode is the condensate and is handled by condensate_mode().
 */

#ifndef RELBEC_FINITE_VOLUME_HPP
#define RELBEC_FINITE_VOLUME_HPP

#include "relbec/types.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace relbec {

struct ModeSumResult {
    /// Thermal net charge density, n1_fv - n2_fv.
    double q_tilde_fv;
    double n1_fv;
    double n2_fv;
    std::uint64_t modes_used;
    /// Upper bound on the density carried by the excluded modes |n| > cutoff.
    double tail_bound;
};

/** Bound on the per-volume occupation of all modes with |n| > mode_cutoff.
 *  Each excluded lattice point is dominated by the exponential envelope
 *  over its cell, shifted inward by the half-diagonal sqrt(3) pi / L. */
double mode_sum_tail_bound(const PhasePoint &phase, double box_length, std::int64_t mode_cutoff);

/// Validated box; throws TailTooLarge if the tail bound at `phase` is not below tail_tolerance.
BoxSpec make_box_spec(double box_length, std::int64_t mode_cutoff, const PhasePoint &phase,
                      double tail_tolerance);

/// Smallest cutoff whose tail bound at `phase` is below tail_tolerance.
std::int64_t minimal_mode_cutoff(const PhasePoint &phase, double box_length, double tail_tolerance);

/** Mode sum grouped by shells of equal |n|^2, summed in ascending |n|^2.
 *  Throws TailTooLarge if the box's cutoff is inadequate at `phase`. */
ModeSumResult mode_sum(const PhasePoint &phase, const BoxSpec &box);

/** Same sum evaluated mode by mode (one exponential per lattice point).
 *  Cost grows as mode_cutoff^3; meant for small boxes and for checking
 *  the grouped path. */
ModeSumResult mode_sum_ungrouped(const PhasePoint &phase, const BoxSpec &box);

/** r_3(s) = #{n in Z^3 : |n|^2 = s} for 0 <= s <= max_norm_sq, computed as
 *  the cube of the 1-d theta series by FFT. The largest table requested
 *  so far is cached and shared; callers index only up to max_norm_sq. */
std::shared_ptr<const std::vector<std::uint32_t>> shell_multiplicities(std::int64_t max_norm_sq);

/// Occupations of the zero mode: n1_0 = 1/(e^{(1-mu)/t} - 1), n2_0 = 1/(e^{(1+mu)/t} - 1).
struct CondensateMode {
    double n1_0;
    double n2_0;
    double q0_occ;
};

/// Throws DivergentCondensateMode at |mu| = 1 and UnphysicalMu for |mu| > 1.
CondensateMode condensate_mode(double mu, double t);

/** mu/m at which the zero mode holds q0_occ net quanta, i.e. the exact
 *  inverse of condensate_mode(mu, t).q0_occ. Solved in (1 - mu)/t so the
 *  result keeps full precision as mu -> 1. */
double solve_condensate_mu(double q0_occ, double t);

}  // namespace relbec

#endif
