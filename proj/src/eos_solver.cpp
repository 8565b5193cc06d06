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

#include "relbec/eos_solver.hpp"

#include "relbec/error.hpp"
#include "relbec/parallel.hpp"
#include "root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace relbec {

namespace {

constexpr double kZeta3Over2 = 2.612375348685488343348567567924;
constexpr int kMaxBracketSteps = 200;

double thermal_charge(double t, double mu, const QuadratureConfig &quad)
{
    return thermal_charge_density(make_phase_point(t, mu), quad).q_tilde();
}

void require_temperature(double t, const char *operation)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        std::ostringstream msg;
        msg << "temperature must be positive and finite, got t = " << t;
        throw Error(ErrorCode::NonPositiveTemperature, operation, msg.str());
    }
}

void require_charge(double q, const char *operation)
{
    if (!std::isfinite(q) || q < 0.0) {
        std::ostringstream msg;
        msg << "charge density must be finite and non-negative, got q = " << q;
        throw Error(ErrorCode::InvalidArgument, operation, msg.str());
    }
}

// Root of q_tilde(t, mu) = q for 0 < q < q_at_condensation.
double solve_mu_in_bracket(double q, double t, double q_at_condensation, const SolverConfig &config,
                           const QuadratureConfig &quad)
{
    auto residual = [&](double mu) { return thermal_charge(t, mu, quad) - q; };
    const double mu = detail::brent_root(residual, 0.0, 1.0, -q, q_at_condensation - q,
                                         0.5 * config.mu_tol, config.max_iters, "solve_mu");
    return std::clamp(mu, 0.0, 1.0);
}

}  // namespace

void SolverConfig::validate() const
{
    if (!(mu_tol > 0.0) || !(t_tol > 0.0) || max_iters < 10)
        throw Error(ErrorCode::InvalidArgument, "SolverConfig",
                    "tolerances must be positive and max_iters >= 10");
}

double solve_mu(double q, double t, const SolverConfig &config, const QuadratureConfig &quad)
{
    config.validate();
    require_temperature(t, "solve_mu");
    if (!std::isfinite(q))
        throw Error(ErrorCode::InvalidArgument, "solve_mu", "charge density must be finite");
    if (q == 0.0)
        return 0.0;
    if (q < 0.0)
        return -solve_mu(-q, t, config, quad);

    const double q_at_condensation = thermal_charge(t, 1.0, quad);
    if (q >= q_at_condensation) {
        std::ostringstream msg;
        msg << "q = " << q << " reaches the condensation bound " << q_at_condensation
            << " at t = " << t << "; the state is Bose condensed";
        throw Error(ErrorCode::BelowCritical, "solve_mu", msg.str());
    }
    return solve_mu_in_bracket(q, t, q_at_condensation, config, quad);
}

double critical_temperature(double q, const SolverConfig &config, const QuadratureConfig &quad)
{
    config.validate();
    require_charge(q, "critical_temperature");
    if (q == 0.0)
        return 0.0;

    auto residual = [&](double t) { return thermal_charge(t, 1.0, quad) - q; };

    const double non_relativistic = 2.0 * std::numbers::pi * std::pow(q / kZeta3Over2, 2.0 / 3.0);
    const double ultra_relativistic = std::sqrt(3.0 * q);
    double lo = std::min(non_relativistic, ultra_relativistic);
    double hi = 2.0 * ultra_relativistic;
    double f_lo = residual(lo);
    for (int i = 0; f_lo > 0.0; ++i) {
        if (i == kMaxBracketSteps)
            throw Error(ErrorCode::NonConvergence, "critical_temperature", "no lower bracket");
        hi = lo;
        lo *= 0.5;
        f_lo = residual(lo);
    }
    double f_hi = residual(hi);
    for (int i = 0; f_hi < 0.0; ++i) {
        if (i == kMaxBracketSteps)
            throw Error(ErrorCode::NonConvergence, "critical_temperature", "no upper bracket");
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
        f_hi = residual(hi);
    }
    return detail::brent_root(residual, lo, hi, f_lo, f_hi, 0.5 * config.t_tol * lo, config.max_iters,
                              "critical_temperature");
}

GasSolution condensed_solution(double q, double t, double t_c, const SolverConfig &config,
                               const QuadratureConfig &quad)
{
    config.validate();
    require_temperature(t, "condensed_solution");
    if (!(q > 0.0) || !std::isfinite(q))
        throw Error(ErrorCode::InvalidArgument, "condensed_solution", "charge density must be positive");
    if (t > t_c * (1.0 + config.t_tol)) {
        std::ostringstream msg;
        msg << "t = " << t << " is above T_c = " << t_c << " for q = " << q;
        throw Error(ErrorCode::AboveCritical, "condensed_solution", msg.str());
    }

    const PhasePoint phase = make_phase_point(t, 1.0);
    const ChargeDensities densities = thermal_charge_density(phase, quad);
    // At T_c the condensate is empty by definition; q - q_tilde(T_c) is only
    // the root-finding residual there, so it is not reported as condensate.
    const double q0 = t >= t_c ? 0.0 : std::max(0.0, q - densities.q_tilde());
    return GasSolution{phase, densities, q, q0, 0.5 * q0};
}

GasSolution condensed_solution(double q, double t, const SolverConfig &config, const QuadratureConfig &quad)
{
    if (!(q > 0.0) || !std::isfinite(q))
        throw Error(ErrorCode::InvalidArgument, "condensed_solution", "charge density must be positive");
    return condensed_solution(q, t, critical_temperature(q, config, quad), config, quad);
}

double density_ratio(double q, double t, const SolverConfig &config, const QuadratureConfig &quad)
{
    config.validate();
    require_temperature(t, "density_ratio");
    require_charge(q, "density_ratio");

    const ChargeDensities at_condensation = thermal_charge_density(make_phase_point(t, 1.0), quad);
    if (q >= at_condensation.q_tilde())
        return at_condensation.antiparticle_ratio();
    const double mu = q == 0.0 ? 0.0 : solve_mu_in_bracket(q, t, at_condensation.q_tilde(), config, quad);
    return thermal_charge_density(make_phase_point(t, mu), quad).antiparticle_ratio();
}

std::vector<double> log_grid(double lo, double hi, std::size_t points)
{
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw Error(ErrorCode::InvalidArgument, "log_grid", "need 0 < lo < hi and at least two points");
    std::vector<double> grid(points);
    const double ratio = std::log(hi / lo);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = lo * std::exp(ratio * static_cast<double>(i) / static_cast<double>(points - 1));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points)
{
    if (!(hi > lo) || points < 2)
        throw Error(ErrorCode::InvalidArgument, "linear_grid", "need lo < hi and at least two points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    grid.back() = hi;
    return grid;
}

std::vector<CriticalPoint> universal_curves(double q_min, double q_max, std::size_t points,
                                            const SolverConfig &config, const QuadratureConfig &quad,
                                            unsigned threads)
{
    config.validate();
    quad.validate();
    const std::vector<double> charges = log_grid(q_min, q_max, points);
    return parallel_map(charges.size(), threads, [&](std::size_t i) {
        const double q = charges[i];
        const double t_c = critical_temperature(q, config, quad);
        const double ratio = thermal_charge_density(make_phase_point(t_c, 1.0), quad).antiparticle_ratio();
        return CriticalPoint{q, t_c, ratio};
    });
}

}  // namespace relbec
