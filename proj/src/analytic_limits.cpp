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

#include "relbec/analytic_limits.hpp"

#include "relbec/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace relbec {

namespace {

constexpr double kPi = std::numbers::pi;

// Terms of Borwein's algorithm 2; error ~ 3 / (3 + sqrt 8)^n.
constexpr int kEtaTerms = 30;

void require_positive(double value, const char *name, const char *operation)
{
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream msg;
        msg << name << " must be positive and finite, got " << value;
        throw Error(ErrorCode::InvalidArgument, operation, msg.str());
    }
}

double ur_prefactor(int d)
{
    return 2.0 * std::pow(kPi, 0.5 * d) / (std::pow(2.0 * kPi, d) * gamma_half(0.5 * d));
}

}  // namespace

Dimension::Dimension(int d) : d_(d)
{
    if (d < 3) {
        std::ostringstream msg;
        msg << "no homogeneous condensation for d = " << d << " (need d >= 3)";
        throw Error(ErrorCode::UnsupportedDimension, "Dimension", msg.str());
    }
}

ChargeDensities ur_densities(double t, double mu)
{
    require_positive(t, "temperature", "ur_densities");
    const double thermal = zeta_int(3) * t * t * t / (kPi * kPi);
    const double shift = mu * t * t / 6.0;
    return ChargeDensities::from_expansion(thermal + shift, thermal - shift);
}

double ur_critical_temperature(double q_over_m)
{
    require_positive(q_over_m, "q/m", "ur_critical_temperature");
    return std::sqrt(3.0 * q_over_m);
}

double ur_density_ratio(double t_c, double mu)
{
    require_positive(t_c, "t_c", "ur_density_ratio");
    const double thermal = zeta_int(3) * t_c / (kPi * kPi);  // both terms divided by t_c^2
    const double shift = mu / 6.0;
    return (thermal - shift) / (thermal + shift);
}

double density_of_states(double eps, Dimension dim)
{
    if (!(eps >= 1.0)) {
        std::ostringstream msg;
        msg << "energy " << eps << " is below the mass gap";
        throw Error(ErrorCode::BelowMassGap, "density_of_states", msg.str());
    }
    const int d = dim.d();
    return ur_prefactor(d) * eps * std::pow(eps * eps - 1.0, 0.5 * (d - 2));
}

double ddim_critical_temperature(double q_over_m, Dimension dim)
{
    require_positive(q_over_m, "q/m", "ddim_critical_temperature");
    const int d = dim.d();
    const double coefficient = std::pow(2.0 * kPi, d) * gamma_half(0.5 * d)
        / (4.0 * std::pow(kPi, 0.5 * d) * gamma_half(d) * zeta_int(d - 1));
    return std::pow(coefficient * q_over_m, 1.0 / (d - 1));
}

double ur_condensed_fraction(double t, double t_c, Dimension dim)
{
    require_positive(t_c, "t_c", "ur_condensed_fraction");
    if (!(t >= 0.0))
        throw Error(ErrorCode::InvalidArgument, "ur_condensed_fraction", "temperature must be non-negative");
    if (t > t_c) {
        std::ostringstream msg;
        msg << "t = " << t << " exceeds t_c = " << t_c;
        throw Error(ErrorCode::AboveCritical, "ur_condensed_fraction", msg.str());
    }
    return 1.0 - std::pow(t / t_c, dim.d() - 1);
}

double low_t_mu_asymptote(double q0_occ, double t)
{
    require_positive(q0_occ, "q0_occ", "low_t_mu_asymptote");
    require_positive(t, "temperature", "low_t_mu_asymptote");
    return 1.0 - t * std::log1p(1.0 / q0_occ);
}

double low_t_condensate_antiparticles(double q0_occ, double t)
{
    require_positive(q0_occ, "q0_occ", "low_t_condensate_antiparticles");
    require_positive(t, "temperature", "low_t_condensate_antiparticles");
    const double denominator = q0_occ * std::expm1(2.0 / t) - 1.0;
    if (!(denominator > 0.0)) {
        std::ostringstream msg;
        msg << "denominator " << denominator << " is not positive at q0 = " << q0_occ << ", t = " << t;
        throw Error(ErrorCode::AsymptoteOutOfRange, "low_t_condensate_antiparticles", msg.str());
    }
    return (q0_occ + 1.0) / denominator;
}

double zeta_int(int n)
{
    if (n < 2) {
        std::ostringstream msg;
        msg << "zeta(" << n << ") is not finite";
        throw Error(ErrorCode::InvalidArgument, "zeta_int", msg.str());
    }

    // d_k = N sum_{i<=k} (N+i-1)! 4^i / ((N-i)! (2i)!)
    double d[kEtaTerms + 1];
    double term = 1.0 / kEtaTerms;
    double partial = term;
    d[0] = kEtaTerms * partial;
    for (int i = 1; i <= kEtaTerms; ++i) {
        term *= 4.0 * (kEtaTerms + i - 1.0) * (kEtaTerms - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
        partial += term;
        d[i] = kEtaTerms * partial;
    }

    double sum = 0.0;
    for (int k = kEtaTerms - 1; k >= 0; --k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * (d[k] - d[kEtaTerms]) / std::pow(k + 1.0, n);
    }
    const double eta = -sum / d[kEtaTerms];
    return eta / (1.0 - std::ldexp(1.0, 1 - n));
}

double gamma_half(double x)
{
    const double twice = 2.0 * x;
    if (!(x > 0.0) || twice != std::round(twice) || x > 170.0) {
        std::ostringstream msg;
        msg << "argument must be a positive integer or half-integer up to 170, got " << x;
        throw Error(ErrorCode::InvalidArgument, "gamma_half", msg.str());
    }
    const bool half_integer = static_cast<long>(twice) % 2 == 1;
    double value = half_integer ? std::sqrt(kPi) : 1.0;
    for (double a = half_integer ? 0.5 : 1.0; a < x; a += 1.0)
        value *= a;
    return value;
}

}  // namespace relbec
