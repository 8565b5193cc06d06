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

/** @file acceptance.cpp
 *  Acceptance gate: one PASS/FAIL line per criterion, at the stated
 *  tolerances. Exit status is the number of failed criteria. */

#include "bessel_series.hpp"
#include "property.hpp"

#include "relbec/analytic_limits.hpp"
#include "relbec/eos_solver.hpp"
#include "relbec/finite_volume.hpp"
#include "relbec/quadrature.hpp"

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace relbec;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string &what)
    {
        pass = pass && ok;
        if (detail.tellp() > 0)
            detail << "; ";
        detail << what << (ok ? "" : " [violated]");
    }
};

std::string fmt(double x, int digits = 6)
{
    std::ostringstream s;
    s << std::setprecision(digits) << x;
    return s.str();
}

std::string percent(double x) { return fmt(100.0 * x, 4) + "%"; }

struct Run {
    int status;
    std::string out;
};

Run run_tool(const std::string &args)
{
    const std::string command = std::string(RELBEC_TOOL_PATH) + " " + args + " 2>&1";
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buffer;
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe))
        out.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Second field of the single data row of a two-column CSV.
double single_value(const std::string &csv)
{
    const std::string row = csv.substr(csv.find('\n') + 1);
    return std::stod(row.substr(row.find(',') + 1));
}

std::vector<std::pair<double, double>> read_golden(const std::string &name)
{
    std::ifstream in(std::string(RELBEC_GOLDEN_DIR) + "/" + name);
    std::string line;
    std::getline(in, line);
    std::vector<std::pair<double, double>> rows;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    }
    return rows;
}

double q_tilde(double t, double mu) { return thermal_charge_density(make_phase_point(t, mu)).q_tilde(); }

Verdict ur_critical_temperature_ladder()
{
    Verdict v;
    const std::vector<std::pair<double, double>> golden = read_golden("tc_reference.csv");
    v.check(golden.size() == 3, "golden file has 3 rows");
    for (const auto &[q, t_golden] : golden) {
        const Run r = run_tool("tc --q " + fmt(q, 17));
        if (r.status != 0) {
            v.check(false, "tc --q " + fmt(q) + " exited " + std::to_string(r.status));
            continue;
        }
        const double t_c = single_value(r.out);
        const double tolerance = q >= 100 ? 0.01 : q >= 1 ? 0.05 : 0.15;
        const double deviation = std::abs(t_c / std::sqrt(3.0 * q) - 1.0);
        v.check(deviation < tolerance,
                "q=" + fmt(q) + ": T_c=" + fmt(t_c, 9) + " vs sqrt(3q) off " + percent(deviation) + " (< " +
                    percent(tolerance) + ")");
        v.check(std::abs(t_c / t_golden - 1.0) < 1e-8, "q=" + fmt(q) + " golden within 1e-8");
    }
    return v;
}

Verdict d3_reduction()
{
    Verdict v;
    double worst = 0.0;
    testing::for_all(100, 1201, [&](testing::Sampler &s) {
        const double q = s.log_uniform(1e-6, 1e6);
        const double ur = ur_critical_temperature(q);
        worst = std::max(worst, std::abs(ddim_critical_temperature(q, Dimension(3)) - ur) / ur);
    });
    v.check(worst < 1e-12, "max rel diff " + fmt(worst, 3) + " over 100 q (< 1e-12)");
    return v;
}

Verdict ur_densities_agreement()
{
    Verdict v;
    const double q = q_tilde(50.0, 0.3);
    const double deviation = std::abs(q / 250.0 - 1.0);
    v.check(deviation < 0.005, "t=50 mu=0.3: q=" + fmt(q, 9) + " vs 250 off " + percent(deviation) + " (< 0.5%)");
    double previous = 1.0;
    std::string trail;
    bool monotone = true;
    for (double t : {10.0, 30.0, 100.0}) {
        const double exact = q_tilde(t, 0.3);
        const double d = std::abs(ur_densities(t, 0.3).q_tilde() / exact - 1.0);
        monotone = monotone && d < previous;
        previous = d;
        trail += (trail.empty() ? "" : ", ") + percent(d);
    }
    v.check(monotone, "monotone over t=10,30,100: " + trail);
    return v;
}

Verdict condensed_fraction_parabola()
{
    Verdict v;
    const double t_c = critical_temperature(100.0);
    const double half = condensed_solution(100.0, 0.5 * t_c, t_c).condensed_fraction();
    v.check(std::abs(half / 0.75 - 1.0) < 0.02, "fraction(T_c/2)=" + fmt(half, 7) + " vs 0.75 (2%)");

    const std::size_t points = 100;
    std::vector<double> fraction(points);
    for (std::size_t i = 1; i <= points; ++i) {
        const double t = i == points ? t_c : t_c * static_cast<double>(i) / points;
        fraction[i - 1] = condensed_solution(100.0, t, t_c).condensed_fraction();
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < points; ++i)
        decreasing = decreasing && fraction[i] < fraction[i - 1];
    v.check(decreasing, "strictly decreasing on 100 points");
    const double cold = condensed_solution(100.0, 1e-3 * t_c, t_c).condensed_fraction();
    v.check(std::abs(cold - 1.0) < 1e-3, "fraction(1e-3 T_c)=" + fmt(cold, 9) + " (1 within 1e-3)");
    v.check(std::abs(fraction.back()) < 1e-6, "fraction(T_c)=" + fmt(fraction.back(), 3) + " (0 within 1e-6)");
    return v;
}

Verdict charge_conservation()
{
    Verdict v;
    for (double q : {0.1, 10.0}) {
        const double t_c = critical_temperature(q);
        double worst = 0.0;
        for (int i = 1; i <= 20; ++i) {
            const GasSolution g = condensed_solution(q, t_c * i / 20.0, t_c);
            worst = std::max(worst, std::abs(g.q0 + g.densities.q_tilde() - q) / q);
        }
        v.check(worst < 1e-8, "q=" + fmt(q) + ": max |q0+q~-q|/q = " + fmt(worst, 3) + " (< 1e-8)");
    }
    return v;
}

Verdict round_trip_inversion()
{
    Verdict v;
    double worst = 0.0;
    testing::for_all(200, 1206, [&](testing::Sampler &s) {
        const double t = s.log_uniform(0.1, 10.0);
        const double mu = s.uniform(-1.0, 1.0);
        worst = std::max(worst, std::abs(solve_mu(q_tilde(t, mu), t) - mu));
    });
    v.check(worst <= 1e-10, "max |mu' - mu| = " + fmt(worst, 3) + " over 200 samples (<= 1e-10)");
    return v;
}

Verdict oracle_equivalence()
{
    Verdict v;
    const std::array<double, 4> lengths{50.0, 100.0, 200.0, 400.0};
    for (double t : {0.5, 1.0, 5.0})
        for (double mu : {-0.9, 0.0, 0.9}) {
            const PhasePoint p = make_phase_point(t, mu);
            const ChargeDensities exact = thermal_charge_density(p);
            const double tol = 1e-6 * exact.n1();
            const std::int64_t base = minimal_mode_cutoff(p, lengths[0], tol);
            std::array<double, 4> deviation{};
            for (std::size_t i = 0; i < lengths.size(); ++i) {
                const auto cutoff = base * static_cast<std::int64_t>(lengths[i] / lengths[0]);
                const ModeSumResult r = mode_sum(p, make_box_spec(lengths[i], cutoff, p, tol));
                // q~ vanishes identically at mu = 0; compare the particle density there.
                deviation[i] = mu == 0.0 ? std::abs(r.n1_fv / exact.n1() - 1.0) + std::abs(r.q_tilde_fv)
                                         : std::abs(r.q_tilde_fv / exact.q_tilde() - 1.0);
            }
            const bool monotone = deviation[1] < deviation[0] && deviation[2] < deviation[1] &&
                                  deviation[3] < deviation[2];
            v.check(deviation[3] < 1e-3 && monotone,
                    "t=" + fmt(t) + " mu=" + fmt(mu) + ": " + fmt(deviation[0], 2) + " > " + fmt(deviation[1], 2) +
                        " > " + fmt(deviation[2], 2) + " > " + fmt(deviation[3], 2));
        }
    return v;
}

Verdict bessel_series_oracle()
{
    Verdict v;
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0})
        for (double mu : {-0.5, 0.0, 0.9}) {
            const double n1 = thermal_charge_density(make_phase_point(t, mu)).n1();
            worst = std::max(worst, std::abs(n1 / oracle::n1_bessel_series(t, mu) - 1.0));
        }
    v.check(worst < 1e-8, "max rel diff " + fmt(worst, 3) + " over 9 points (< 1e-8)");
    return v;
}

Verdict antiparticle_suppression()
{
    Verdict v;
    // t = 0.2 lies below T_c(0.1), so mu sits at 1 and the bound is e^{-2/t}.
    const double t_c = critical_temperature(0.1);
    const double mu = 0.2 >= t_c ? solve_mu(0.1, 0.2) : 1.0;
    const double cold = density_ratio(0.1, 0.2);
    v.check(cold < std::exp(-2.0 * mu / 0.2), "n2/n1(t=0.2)=" + fmt(cold, 4) + " < e^{-2mu/t}=" +
                                                  fmt(std::exp(-2.0 * mu / 0.2), 4));
    v.check(cold < 1.2e-4, "below 1.2e-4");
    const double hot = density_ratio(0.1, 50.0);
    v.check(hot > 0.9, "n2/n1(t=50)=" + fmt(hot, 7) + " > 0.9");
    return v;
}

Verdict low_temperature_asymptotics()
{
    Verdict v;
    for (double t : {0.1, 0.05}) {
        const double exact = solve_condensate_mu(1.0, t);
        const double gap = std::abs(exact - low_t_mu_asymptote(1.0, t));
        const double scale = t * std::exp(-2.0 / t);
        v.check(gap <= 2.0 * scale + 4e-16,
                "t=" + fmt(t) + ": |mu - asymptote| = " + fmt(gap, 3) + " vs t e^{-2/t} = " + fmt(scale, 3));
    }
    double previous = 1.0;
    bool vanishing = true;
    std::string trail;
    for (double t : {0.2, 0.1, 0.05, 0.02, 0.01}) {
        const double n2 = condensate_mode(solve_condensate_mu(1.0, t), t).n2_0;
        vanishing = vanishing && n2 < previous;
        previous = n2;
        trail += (trail.empty() ? "" : ", ") + fmt(n2, 2);
    }
    v.check(vanishing && previous < 1e-80, "n2(0) -> 0: " + trail);
    return v;
}

Verdict failure_mode_fidelity()
{
    Verdict v;
    const double analytic = ur_density_ratio(1e-6);
    v.check(std::abs(analytic + 1.0) < 1e-5, "ur_density_ratio(1e-6) = " + fmt(analytic, 8) + " -> -1");
    bool inside = true;
    std::string trail;
    for (const CriticalPoint &p : universal_curves(1e-4, 1.0, 5)) {
        inside = inside && p.ratio > 0.0 && p.ratio < 1.0;
        trail += (trail.empty() ? "" : ", ") + fmt(p.t_c, 3) + ":" + fmt(p.ratio, 3);
    }
    v.check(inside, "numerical ratio in (0,1) at T_c = " + trail);
    return v;
}

Verdict cli_determinism()
{
    Verdict v;
    const std::vector<std::string> commands = {
        "mu --q 0.3 --t 1.2",
        "tc --q 2 --format json",
        "ratio-sweep --q 0.1,1 --t-min 0.2 --t-max 3 --points 15",
        "profile --q 0.1 --t 1.5 --samples 64",
        "fraction-sweep --q 1,100 --points 20",
        "universal --q-min 0.01 --q-max 100 --points 9 --format json",
        "ddim-tc --q-over-m 1 --dim 5",
        "oracle-check --q 0.1 --t 1 --box-lengths 25,50",
    };
    int identical = 0;
    for (const std::string &command : commands) {
        const Run a = run_tool(command + " --threads 1");
        const Run b = run_tool(command + " --threads 1");
        const Run c = run_tool(command + " --threads 4");
        const bool ok = a.status == 0 && b.status == 0 && c.status == 0 && a.out == b.out && a.out == c.out &&
                        !a.out.empty();
        identical += ok;
        if (!ok)
            v.check(false, "'" + command + "' differs or failed");
    }
    v.check(identical == static_cast<int>(commands.size()),
            std::to_string(identical) + "/" + std::to_string(commands.size()) +
                " subcommands byte-identical (2 serial runs + 4 threads)");
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"UR critical temperature ladder", ur_critical_temperature_ladder},
        {"d=3 reduction of the d-dimensional T_c", d3_reduction},
        {"UR densities at high temperature", ur_densities_agreement},
        {"condensed fraction parabola", condensed_fraction_parabola},
        {"charge conservation below T_c", charge_conservation},
        {"round-trip inversion", round_trip_inversion},
        {"finite-volume oracle equivalence", oracle_equivalence},
        {"Bessel-series oracle", bessel_series_oracle},
        {"antiparticle suppression", antiparticle_suppression},
        {"low-temperature asymptotics", low_temperature_asymptotics},
        {"UR ratio failure mode", failure_mode_fidelity},
        {"CLI determinism", cli_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v.check(false, std::string("threw: ") + e.what());
        }
        failures += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << i + 1 << "  "
                  << criteria[i].first << ": " << v.detail.str() << std::endl;
    }
    std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
    return failures;
}
