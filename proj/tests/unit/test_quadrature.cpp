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

#include "bessel_series.hpp"
#include "property.hpp"
#include "simpson.hpp"

#include "relbec/error.hpp"
#include "relbec/quadrature.hpp"
#include "relbec/statistics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace relbec;
using doctest::Approx;

namespace {

constexpr double kTwoPiSq = 2.0 * std::numbers::pi * std::numbers::pi;

// Bessel-series densities: n2(t, mu) = n1(t, -mu).
double series_q_tilde(double t, double mu)
{
    return oracle::n1_bessel_series(t, mu) - oracle::n1_bessel_series(t, -mu);
}

}  // namespace

TEST_CASE("gamma-function integral")
{
    const QuadratureResult r =
        integrate_semi_infinite([](double k) { return k * k * std::exp(-k); }, {0.0, 1.0}, {});
    CHECK(r.value == Approx(2.0).epsilon(1e-13));
    CHECK(r.error_estimate <= 1e-10 * 2.0 + 1e-14);
}

TEST_CASE("Gaussian half-integral")
{
    const QuadratureResult r = integrate_semi_infinite([](double k) { return std::exp(-k * k); }, {0.0, 1.0}, {});
    CHECK(r.value == Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-13));
}

TEST_CASE("closed-form tail of the exponential envelope")
{
    // int_10^inf k^2 e^{-k} dk = e^{-10} (100 + 20 + 2)
    CHECK(exponential_tail_bound({0.0, 1.0}, 10.0) >= 122.0 * std::exp(-10.0) * (1 - 1e-14));
    CHECK(exponential_tail_bound({0.0, 1.0}, 10.0) == Approx(122.0 * std::exp(-10.0)).epsilon(1e-12));
    // A huge amplitude is handled in log space.
    CHECK(std::isfinite(exponential_tail_bound({800.0, 0.01}, 2000.0)));
}

TEST_CASE("charge integrand integral at t = 1, mu = 1/2")
{
    // Oracle: composite Simpson on a hand-written integrand; the integrand
    // is below 1e-20 beyond k = 60.
    const double simpson = oracle::simpson(
        [](double k) { return oracle::naive_charge_integrand(k, 1.0, 0.5); }, 0.0, 60.0, 200000);
    CHECK(simpson == Approx(2.134).epsilon(1e-3));

    const PhasePoint p = make_phase_point(1.0, 0.5);
    const QuadratureResult r = integrate_semi_infinite([&](double k) { return charge_integrand(k, p); },
                                                       {0.5, 1.0}, {}, 1.0);
    CHECK(r.value == Approx(simpson).epsilon(1e-11));
    CHECK(r.value == Approx(2.1341659659870140).epsilon(1e-12));
}

TEST_CASE("thermal densities at mu = 0 are symmetric")
{
    const ChargeDensities d = thermal_charge_density(make_phase_point(1.0, 0.0));
    CHECK(d.q_tilde() == 0.0);
    CHECK(d.n1() > 0.0);
    CHECK(d.n1() == d.n2());
}

TEST_CASE("thermal densities at t = 1, mu = 1/2 match the Bessel series")
{
    const ChargeDensities d = thermal_charge_density(make_phase_point(1.0, 0.5));
    CHECK(d.n1() == Approx(oracle::n1_bessel_series(1.0, 0.5)).epsilon(1e-12));
    CHECK(d.n2() == Approx(oracle::n1_bessel_series(1.0, -0.5)).epsilon(1e-12));
    CHECK(d.q_tilde() == Approx(series_q_tilde(1.0, 0.5)).epsilon(1e-11));
    CHECK(d.q_tilde() == Approx(0.1081181108814987).epsilon(1e-12));
    CHECK(d.q_tilde() == Approx(2.134 / kTwoPiSq).epsilon(1e-3));
}

TEST_CASE("deep ultra-relativistic net charge")
{
    // mu t^2 / 3 is only the leading term; the next one, -mu t sqrt(1 - mu^2) / (2 pi),
    // brings the expansion to within 3e-5 of the integral here.
    const double t = 50.0, mu = 0.3;
    const double q = thermal_charge_density(make_phase_point(t, mu)).q_tilde();
    const double leading = mu * t * t / 3.0;
    const double next = -mu * t * std::sqrt(1.0 - mu * mu) / (2.0 * std::numbers::pi);
    CHECK(q == Approx(247.72978100744513).epsilon(1e-10));
    CHECK(q == Approx(leading + next).epsilon(1e-4));
    CHECK(std::abs(q / leading - 1.0) < 0.01);
}

TEST_CASE("densities stay finite in the non-relativistic corner")
{
    const ChargeDensities d = thermal_charge_density(make_phase_point(0.02, 1.0));
    CHECK(d.n1() > 0.0);
    CHECK(d.n2() >= 0.0);
    CHECK(d.n2() < 1e-40 * d.n1());
    // NR Bose gas at mu = m: n = zeta(3/2) (t / 2 pi)^{3/2}, up to O(t) corrections.
    const double nr = 2.6123753486854883 * std::pow(0.02 / (2.0 * std::numbers::pi), 1.5);
    CHECK(d.n1() == Approx(nr).epsilon(0.05));
}

TEST_CASE("configuration is validated")
{
    CHECK_THROWS_AS(thermal_charge_density(make_phase_point(1.0, 0.0), {0.0, 1e-14, 60}), Error);
    CHECK_THROWS_AS(thermal_charge_density(make_phase_point(1.0, 0.0), {1e-10, -1.0, 60}), Error);
    CHECK_THROWS_AS(thermal_charge_density(make_phase_point(1.0, 0.0), {1e-10, 1e-14, 0}), Error);
}

TEST_CASE("refinement cap reports non-convergence")
{
    const auto rough = [](double k) { return std::sin(200.0 * k) * std::exp(-k); };
    try {
        integrate_semi_infinite(rough, {0.0, 1.0}, {1e-14, 1e-300, 2});
        FAIL("no throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NonConvergence);
    }
}

TEST_CASE("repeated evaluation is bit-identical")
{
    const PhasePoint p = make_phase_point(0.37, 0.91);
    const ChargeDensities a = thermal_charge_density(p);
    const ChargeDensities b = thermal_charge_density(p);
    CHECK(a.n1() == b.n1());
    CHECK(a.n2() == b.n2());
}

TEST_CASE("property: Bessel-series equivalence for t <= 2")
{
    testing::for_all(60, 31, [](testing::Sampler &s) {
        const double t = s.uniform(0.1, 2.0);
        const double mu = s.uniform(-0.95, 0.95);
        const ChargeDensities d = thermal_charge_density(make_phase_point(t, mu));
        CHECK(d.n1() == Approx(oracle::n1_bessel_series(t, mu)).epsilon(1e-8));
        CHECK(d.n2() == Approx(oracle::n1_bessel_series(t, -mu)).epsilon(1e-8));
    });
}

TEST_CASE("property: antisymmetry, monotonicity and the ratio bound")
{
    testing::for_all(60, 32, [](testing::Sampler &s) {
        const double t = s.log_uniform(0.05, 30.0);
        const double mu = s.uniform(-0.99, 0.99);
        const PhasePoint p = make_phase_point(t, mu);
        const ChargeDensities d = thermal_charge_density(p);
        const ChargeDensities c = thermal_charge_density(p.conjugate());
        CHECK(c.q_tilde() == Approx(-d.q_tilde()).epsilon(1e-9));
        CHECK(std::abs(c.q_tilde() + d.q_tilde()) <= 10 * 1e-10 * (d.n1() + d.n2()) + 1e-14);

        const double mu_up = std::min(1.0, mu + s.uniform(1e-3, 0.1));
        CHECK(thermal_charge_density(make_phase_point(t, mu_up)).q_tilde() > d.q_tilde());

        if (mu > 0.0) {
            const double t_up = t * s.uniform(1.01, 1.5);
            CHECK(thermal_charge_density(make_phase_point(t_up, mu)).q_tilde() > d.q_tilde());
            CHECK(d.antiparticle_ratio() <= std::exp(-2.0 * mu / t));
        }
    });
}
