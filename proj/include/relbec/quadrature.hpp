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

/** @file quadrature.hpp
 *  Semi-infinite integration of the charge-density integrands.
 */

#ifndef RELBEC_QUADRATURE_HPP
#define RELBEC_QUADRATURE_HPP

#include "relbec/types.hpp"

#include <functional>

namespace relbec {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    /// Maximum bisection depth of any panel.
    int max_subdivisions = 60;

    /// Throws InvalidArgument unless all fields are positive.
    void validate() const;
};

struct QuadratureResult {
    double value;
    double error_estimate;
};

/** Envelope |f(k)| <= exp(log_amplitude) * k^2 * exp(-k / decay_length),
 *  valid for k >= max(10 decay_length, 10). The amplitude is carried as a
 *  logarithm because low-temperature envelopes overflow a double. */
struct ExponentialTail {
    double log_amplitude;
    double decay_length;
};

/// Closed-form bound on the envelope integrated over [k_cut, infinity).
double exponential_tail_bound(const ExponentialTail &tail, double k_cut);

/** Integral of f over [0, infinity).
 *
 *  [0, k_cut] is covered by Gauss-Kronrod 7/15 panels refined by bisecting
 *  the panel with the largest |K15 - G7| until the summed error (plus the
 *  tail bound) is below rel_tol |value| + abs_tol. k_cut starts at
 *  max(10 decay_length, 10) and doubles until the envelope tail drops
 *  below abs_tol. length_scale sets the initial geometric partition and
 *  should be the width of the integrand's main structure.
 *
 *  Throws NonConvergence if a panel would exceed max_subdivisions.
 */
QuadratureResult integrate_semi_infinite(const std::function<double(double)> &f,
                                         const ExponentialTail &tail,
                                         const QuadratureConfig &config,
                                         double length_scale = 1.0);

/** n1, n2 (each integrated separately, times 1/2pi^2) at a phase point.
 *  The net charge is also integrated directly from charge_integrand and
 *  must agree with n1 - n2 within 10 rel_tol of n1 + n2, otherwise
 *  NonConvergence is thrown. */
ChargeDensities thermal_charge_density(const PhasePoint &phase, const QuadratureConfig &config = {});

}  // namespace relbec

#endif
