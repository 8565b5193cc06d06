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

/** @file eos_solver.hpp
 *  Inversion of the equation of state: chemical potential from the net
 *  charge, the critical temperature from the |mu| = 1 condition, and the
 *  condensate below it.
 *
 *  Negative charge densities are handled by charge conjugation:
 *  mu(-q, t) = -mu(q, t) and T_c(-q) = T_c(q).
 */

#ifndef RELBEC_EOS_SOLVER_HPP
#define RELBEC_EOS_SOLVER_HPP

#include "relbec/quadrature.hpp"
#include "relbec/types.hpp"

#include <cstddef>
#include <vector>

namespace relbec {

struct SolverConfig {
    /// Absolute tolerance on mu/m.
    double mu_tol = 1e-10;
    /// Relative tolerance on T_c/m.
    double t_tol = 1e-8;
    int max_iters = 200;

    void validate() const;
};

/// State of the gas at fixed total charge q: thermal part plus condensate.
struct GasSolution {
    PhasePoint phase;
    ChargeDensities densities;
    /// Total net charge density q.
    double q;
    /// Condensed charge density, q - q_tilde clamped at zero.
    double q0;
    /// |Phi|^2 / m^2 = q0 / 2.
    double order_param_sq;

    double condensed_fraction() const noexcept { return q > 0.0 ? q0 / q : 0.0; }
};

/** mu/m such that the thermal net charge at (t, mu) equals q.
 *  Throws BelowCritical when |q| >= q_tilde(t, mu = 1), i.e. when the state
 *  is condensed and condensed_solution() applies. */
double solve_mu(double q, double t, const SolverConfig &config = {},
                const QuadratureConfig &quad = {});

/** T_c/m for net charge q >= 0 (q = 0 gives 0). The bracket starts from
 *  the non-relativistic estimate 2 pi (q / zeta(3/2))^(2/3) and the
 *  ultra-relativistic one sqrt(3 q), widened by halving/doubling. */
double critical_temperature(double q, const SolverConfig &config = {},
                            const QuadratureConfig &quad = {});

/** Condensed state at 0 < t <= T_c(q) with mu = 1.
 *  Throws AboveCritical if t exceeds T_c(q) by more than t_tol. */
GasSolution condensed_solution(double q, double t, const SolverConfig &config = {},
                               const QuadratureConfig &quad = {});

/// Same as above with a precomputed T_c(q), for sweeps at fixed q.
GasSolution condensed_solution(double q, double t, double t_c, const SolverConfig &config = {},
                               const QuadratureConfig &quad = {});

/** Thermal n2/n1 at charge q >= 0 and temperature t. Above T_c the
 *  chemical potential is solved for; at or below T_c the thermal cloud sits
 *  at mu = 1 and its ratio is returned. */
double density_ratio(double q, double t, const SolverConfig &config = {},
                     const QuadratureConfig &quad = {});

/** T_c and n2/n1 at T_c on a log-spaced grid of q in [q_min, q_max].
 *  Points are computed on `threads` workers (0 = all cores); output order
 *  and values do not depend on the thread count. */
std::vector<CriticalPoint> universal_curves(double q_min, double q_max, std::size_t points,
                                            const SolverConfig &config = {},
                                            const QuadratureConfig &quad = {},
                                            unsigned threads = 1);

/// Log-spaced grid with exact endpoints.
std::vector<double> log_grid(double lo, double hi, std::size_t points);

/// Linear grid with exact endpoints.
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

}  // namespace relbec

#endif
