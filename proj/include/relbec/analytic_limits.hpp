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

/** @file analytic_limits.hpp
 *  Closed-form ultra-relativistic, d-dimensional and low-temperature
 *  results, plus the zeta and gamma values they need.
 */

#ifndef RELBEC_ANALYTIC_LIMITS_HPP
#define RELBEC_ANALYTIC_LIMITS_HPP

#include "relbec/types.hpp"

namespace relbec {

/// Spatial dimension d >= 3. Smaller d throws UnsupportedDimension
/// (zeta(d - 1) diverges at d = 2; there is no homogeneous condensate).
class Dimension {
public:
    explicit Dimension(int d);
    int d() const noexcept { return d_; }

private:
    int d_;
};

/** Leading high-temperature densities:
 *  n1,2 = zeta(3) t^3 / pi^2 +/- mu t^2 / 6, q_tilde = mu t^2 / 3.
 *  Returned verbatim for any t > 0: at small t the antiparticle term goes
 *  negative, the same breakdown that drives ur_density_ratio to -1. */
ChargeDensities ur_densities(double t, double mu);

/// sqrt(3 q/m^3): T_c/m in the ultra-relativistic limit.
double ur_critical_temperature(double q_over_m);

/// n2/n1 from the high-temperature expansion. Tends to -1 as t_c -> 0,
/// where the expansion is invalid; returned as is.
double ur_density_ratio(double t_c, double mu = 1.0);

/// Relativistic density of states 2 pi^{d/2} / ((2 pi)^d Gamma(d/2)) eps (eps^2 - 1)^{(d-2)/2}.
/// eps < 1 throws BelowMassGap.
double density_of_states(double eps, Dimension dim);

/// Ultra-relativistic T_c/m in d dimensions; reduces to sqrt(3 q) at d = 3.
double ddim_critical_temperature(double q_over_m, Dimension dim);

/// 1 - (t / t_c)^{d-1}. t > t_c throws AboveCritical.
double ur_condensed_fraction(double t, double t_c, Dimension dim);

/// mu/m ~ 1 - t ln((q0 + 1) / q0) for a condensate mode holding q0_occ net quanta.
double low_t_mu_asymptote(double q0_occ, double t);

/** Antiparticle occupation of the condensate mode at low t,
 *  (q0 + 1) / (q0 (e^{2/t} - 1) - 1). Throws AsymptoteOutOfRange if the
 *  denominator is not positive. */
double low_t_condensate_antiparticles(double q0_occ, double t);

/// Riemann zeta at integer n >= 2 (alternating-series acceleration of eta).
double zeta_int(int n);

/// Gamma at a positive integer or half-integer, by recursion from 1 and sqrt(pi).
double gamma_half(double x);

}  // namespace relbec

#endif
