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

/** @file types.hpp
 *  Scaled-unit value types shared by every module.
 *
 *  All quantities are dimensionless ratios against the boson mass m:
 *  temperatures and chemical potentials as T/m and mu/m, momenta as k/m,
 *  densities as n/m^3. The mass itself never appears at runtime.
 */

#ifndef RELBEC_TYPES_HPP
#define RELBEC_TYPES_HPP

#include <cstdint>
#include <vector>

namespace relbec {

/// Thermodynamic state (T/m, mu/m) with t > 0 and |mu| <= 1.
class PhasePoint {
public:
    double t() const noexcept { return t_; }
    double mu() const noexcept { return mu_; }

    /// Same temperature, opposite chemical potential (particles <-> antiparticles).
    PhasePoint conjugate() const noexcept { return PhasePoint(t_, -mu_); }

    /// |mu| == 1: the lowest mode is gapless and condensation is possible.
    bool at_condensation() const noexcept { return mu_ == 1.0 || mu_ == -1.0; }

    friend PhasePoint make_phase_point(double t, double mu);
    friend bool operator==(const PhasePoint &, const PhasePoint &) = default;

private:
    PhasePoint(double t, double mu) noexcept : t_(t), mu_(mu) {}

    double t_;
    double mu_;
};

/// Throws NonPositiveTemperature for t <= 0 and UnphysicalMu for |mu| > 1.
/// |mu| == 1 is accepted.
PhasePoint make_phase_point(double t, double mu);

/// Particle, antiparticle and net thermal charge densities in units of m^3.
/// q_tilde() is n1 - n2 by construction.
class ChargeDensities {
public:
    /// Throws InvalidArgument if either density is negative or not finite.
    static ChargeDensities from_components(double n1, double n2);

    /// Values of an asymptotic expansion, taken verbatim: only finiteness is
    /// checked. Outside the expansion's range n2 can come out negative,
    /// which is how the expansion signals its own breakdown.
    static ChargeDensities from_expansion(double n1, double n2);

    double n1() const noexcept { return n1_; }
    double n2() const noexcept { return n2_; }
    double q_tilde() const noexcept { return n1_ - n2_; }

    /// n2 / n1; zero when both vanish.
    double antiparticle_ratio() const noexcept;

private:
    ChargeDensities(double n1, double n2) noexcept : n1_(n1), n2_(n2) {}

    double n1_;
    double n2_;
};

/// A point on the transition line: charge density, T_c/m and n2/n1 at T_c.
struct CriticalPoint {
    double q;
    double t_c;
    double ratio;
};

/// k^2-weighted occupation curves on a uniform momentum grid.
struct MomentumProfile {
    std::vector<double> k_grid;
    std::vector<double> n1_of_k;
    std::vector<double> n2_of_k;
};

/// Periodic cubic box of side L (in units of 1/m) with modes n in Z^3
/// restricted to |n| <= mode_cutoff. See finite_volume.hpp for the factory
/// that checks the cutoff against a tail tolerance.
class BoxSpec {
public:
    double box_length() const noexcept { return box_length_; }
    std::int64_t mode_cutoff() const noexcept { return mode_cutoff_; }
    double tail_tolerance() const noexcept { return tail_tolerance_; }

    /// Mode spacing 2 pi / L.
    double mode_spacing() const noexcept;

    friend BoxSpec make_box_spec(double box_length, std::int64_t mode_cutoff,
                                 const PhasePoint &phase, double tail_tolerance);

private:
    BoxSpec(double box_length, std::int64_t mode_cutoff, double tail_tolerance) noexcept
        : box_length_(box_length), mode_cutoff_(mode_cutoff), tail_tolerance_(tail_tolerance) {}

    double box_length_;
    std::int64_t mode_cutoff_;
    double tail_tolerance_;
};

}  // namespace relbec

#endif
