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

#include "cli.hpp"

#include "relbec/analytic_limits.hpp"
#include "relbec/error.hpp"
#include "relbec/finite_volume.hpp"
#include "relbec/parallel.hpp"
#include "relbec/statistics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace relbec::cli {

namespace {

const std::vector<std::string> kSubcommands = {
    "mu", "tc", "ratio-sweep", "profile", "fraction-sweep", "universal", "ddim-tc", "oracle-check"};

std::size_t default_points(const std::string &subcommand)
{
    if (subcommand == "ratio-sweep")
        return 200;
    if (subcommand == "fraction-sweep")
        return 100;
    if (subcommand == "universal")
        return 61;
    return 0;
}

void require(bool condition, const std::string &message)
{
    if (!condition)
        throw UsageError(message);
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

std::string format_double(double x)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.16e", x);
    return buffer;
}

std::string format_cell(const Cell &cell)
{
    if (const auto *d = std::get_if<double>(&cell))
        return format_double(*d);
    return std::to_string(std::get<std::int64_t>(cell));
}

// mu at (q, t): solved above T_c, +-1 at or below it.
double chemical_potential(double q, double t, const RunSpec &spec)
{
    try {
        return solve_mu(q, t, spec.solver, spec.quad);
    } catch (const Error &e) {
        if (e.code() != ErrorCode::BelowCritical)
            throw;
        return q > 0.0 ? 1.0 : -1.0;
    }
}

Table run_mu(const RunSpec &spec)
{
    return {{"q_over_m3", "t_over_m", "mu_over_m"},
            {{spec.q, spec.t, solve_mu(spec.q, spec.t, spec.solver, spec.quad)}}};
}

Table run_tc(const RunSpec &spec)
{
    return {{"q_over_m3", "tc_over_m"}, {{spec.q, critical_temperature(spec.q, spec.solver, spec.quad)}}};
}

Table run_ddim_tc(const RunSpec &spec)
{
    const double t_c = ddim_critical_temperature(spec.q_over_m, Dimension(spec.dim));
    return {{"q_over_m", "dim", "tc_over_m"}, {{spec.q_over_m, std::int64_t{spec.dim}, t_c}}};
}

Table run_ratio_sweep(const RunSpec &spec)
{
    const std::vector<double> temperatures = linear_grid(spec.t_min, spec.t_max, spec.points);
    const std::vector<double> critical = parallel_map(spec.q_list.size(), spec.threads, [&](std::size_t i) {
        return critical_temperature(spec.q_list[i], spec.solver, spec.quad);
    });

    // Each series starts at T_c (when inside the window) and runs up to t_max.
    std::vector<std::pair<double, double>> jobs;
    for (std::size_t i = 0; i < spec.q_list.size(); ++i) {
        if (critical[i] >= spec.t_min && critical[i] <= spec.t_max)
            jobs.emplace_back(spec.q_list[i], critical[i]);
        for (double t : temperatures)
            if (t > critical[i])
                jobs.emplace_back(spec.q_list[i], t);
    }
    const std::vector<double> ratios = parallel_map(jobs.size(), spec.threads, [&](std::size_t i) {
        return density_ratio(jobs[i].first, jobs[i].second, spec.solver, spec.quad);
    });

    Table table{{"q_over_m3", "t_over_m", "n2_over_n1"}, {}};
    for (std::size_t i = 0; i < jobs.size(); ++i)
        table.rows.push_back({jobs[i].first, jobs[i].second, ratios[i]});
    return table;
}

Table run_profile(const RunSpec &spec)
{
    const double mu = chemical_potential(spec.q, spec.t, spec);
    const MomentumProfile profile = momentum_profile(make_phase_point(spec.t, mu), spec.k_max, spec.samples);
    Table table{{"k_over_m", "n1_k", "n2_k"}, {}};
    for (std::size_t i = 0; i < profile.k_grid.size(); ++i)
        table.rows.push_back({profile.k_grid[i], profile.n1_of_k[i], profile.n2_of_k[i]});
    return table;
}

Table run_fraction_sweep(const RunSpec &spec)
{
    const std::vector<double> critical = parallel_map(spec.q_list.size(), spec.threads, [&](std::size_t i) {
        return critical_temperature(spec.q_list[i], spec.solver, spec.quad);
    });

    struct Job {
        double q, t, t_c;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < spec.q_list.size(); ++i)
        for (std::size_t j = 1; j <= spec.points; ++j) {
            const double t = j == spec.points ? critical[i]
                                              : critical[i] * static_cast<double>(j) / static_cast<double>(spec.points);
            jobs.push_back({spec.q_list[i], t, critical[i]});
        }
    const std::vector<double> fractions = parallel_map(jobs.size(), spec.threads, [&](std::size_t i) {
        return condensed_solution(jobs[i].q, jobs[i].t, jobs[i].t_c, spec.solver, spec.quad).condensed_fraction();
    });

    Table table{{"q_over_m3", "t_over_m", "q0_over_q"}, {}};
    for (std::size_t i = 0; i < jobs.size(); ++i)
        table.rows.push_back({jobs[i].q, jobs[i].t, fractions[i]});
    return table;
}

Table run_universal(const RunSpec &spec)
{
    const std::vector<CriticalPoint> curve =
        universal_curves(spec.q_min, spec.q_max, spec.points, spec.solver, spec.quad, spec.threads);
    Table table{{"q_over_m3", "tc_over_m", "n2_over_n1", "tc_ur", "ratio_ur"}, {}};
    for (const CriticalPoint &p : curve) {
        const double t_ur = ur_critical_temperature(p.q);
        table.rows.push_back({p.q, p.t_c, p.ratio, t_ur, ur_density_ratio(t_ur, 1.0)});
    }
    return table;
}

Table run_oracle_check(const RunSpec &spec)
{
    const double mu = chemical_potential(spec.q, spec.t, spec);
    const PhasePoint phase = make_phase_point(spec.t, mu);
    const ChargeDensities quad = thermal_charge_density(phase, spec.quad);
    const double tail_tol = spec.tail_tol * quad.n1();

    // One momentum cutoff for every box, set by the smallest box, so the
    // boxes differ only in their mode spacing.
    std::vector<double> lengths = spec.box_lengths;
    const double reference = *std::min_element(lengths.begin(), lengths.end());
    const std::int64_t reference_cutoff = minimal_mode_cutoff(phase, reference, tail_tol);

    const std::vector<ModeSumResult> sums = parallel_map(lengths.size(), 1, [&](std::size_t i) {
        const double scaled = static_cast<double>(reference_cutoff) * lengths[i] / reference;
        const auto cutoff = static_cast<std::int64_t>(std::ceil(scaled - 1e-9));
        return mode_sum(phase, make_box_spec(lengths[i], cutoff, phase, tail_tol));
    });

    Table table{{"box_length_m", "mode_cutoff", "modes_used", "q_tilde_fv", "q_tilde_quad", "rel_deviation",
                 "tail_bound"},
                {}};
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const double cutoff = std::ceil(static_cast<double>(reference_cutoff) * lengths[i] / reference - 1e-9);
        const double difference = std::abs(sums[i].q_tilde_fv - quad.q_tilde());
        const double deviation = quad.q_tilde() != 0.0 ? difference / std::abs(quad.q_tilde()) : difference;
        table.rows.push_back({lengths[i], static_cast<std::int64_t>(cutoff),
                              static_cast<std::int64_t>(sums[i].modes_used), sums[i].q_tilde_fv, quad.q_tilde(),
                              deviation, sums[i].tail_bound});
    }
    return table;
}

void write_error(std::ostream &err, const std::string &code, const std::string &operation,
                 const std::string &message)
{
    nlohmann::json record{{"error", code}, {"operation", operation}, {"message", message}};
    err << record.dump() << '\n';
}

}  // namespace

RunSpec parse_run_spec(const std::vector<std::string> &args, std::ostream &help_out)
{
    RunSpec spec;
    std::string format = "csv";

    CLI::App app{"Equation of state of the ideal relativistic charged Bose gas"};
    app.name("relbec");
    app.require_subcommand(1, 1);

    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", spec.output_path, "Output file (default: standard output)");
        sub->add_option("--tol-quad", spec.quad.rel_tol, "Quadrature relative tolerance");
        sub->add_option("--tol-mu", spec.solver.mu_tol, "Absolute tolerance on mu/m");
        sub->add_option("--tol-tc", spec.solver.t_tol, "Relative tolerance on T_c/m");
        sub->add_option("--threads", spec.threads, "Worker threads for sweeps (0 = all cores)");
    };

    auto *mu = app.add_subcommand("mu", "Chemical potential at given charge and temperature");
    mu->add_option("--q", spec.q, "Net charge density q/m^3")->required();
    mu->add_option("--t", spec.t, "Temperature T/m")->required();

    auto *tc = app.add_subcommand("tc", "Critical temperature");
    tc->add_option("--q", spec.q, "Net charge density q/m^3")->required();

    auto *ratio = app.add_subcommand("ratio-sweep", "n2/n1 against temperature above T_c");
    ratio->add_option("--q", spec.q_list, "Charge densities q/m^3")->delimiter(',');
    ratio->add_option("--t-min", spec.t_min, "Lowest temperature");
    ratio->add_option("--t-max", spec.t_max, "Highest temperature");
    ratio->add_option("--points", spec.points, "Temperature grid points");

    auto *profile = app.add_subcommand("profile", "k^2-weighted momentum occupations");
    profile->add_option("--q", spec.q, "Net charge density q/m^3")->required();
    profile->add_option("--t", spec.t, "Temperature T/m")->required();
    profile->add_option("--k-max", spec.k_max, "Largest momentum k/m");
    profile->add_option("--samples", spec.samples, "Grid points");

    auto *fraction = app.add_subcommand("fraction-sweep", "Condensed fraction below T_c");
    fraction->add_option("--q", spec.q_list, "Charge densities q/m^3")->delimiter(',');
    fraction->add_option("--points", spec.points, "Temperature points per curve");

    auto *universal = app.add_subcommand("universal", "T_c and n2/n1 at T_c against q");
    universal->add_option("--q-min", spec.q_min, "Smallest q/m^3");
    universal->add_option("--q-max", spec.q_max, "Largest q/m^3");
    universal->add_option("--points", spec.points, "Log-spaced grid points");

    auto *ddim = app.add_subcommand("ddim-tc", "Ultra-relativistic T_c in d dimensions");
    ddim->add_option("--q-over-m", spec.q_over_m, "q/m")->required();
    ddim->add_option("--dim", spec.dim, "Spatial dimension");

    auto *oracle = app.add_subcommand("oracle-check", "Finite-volume mode sum against quadrature");
    oracle->add_option("--q", spec.q, "Net charge density q/m^3")->required();
    oracle->add_option("--t", spec.t, "Temperature T/m")->required();
    oracle->add_option("--box-lengths", spec.box_lengths, "Box sizes L m")->delimiter(',');
    oracle->add_option("--tail-tol", spec.tail_tol, "Tail tolerance relative to n1");

    for (CLI::App *sub : {mu, tc, ratio, profile, fraction, universal, ddim, oracle})
        common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        help_out << app.help();
        return RunSpec{};
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    for (const std::string &name : kSubcommands)
        if (app.got_subcommand(name))
            spec.subcommand = name;
    spec.format = format == "json" ? Format::Json : Format::Csv;
    if (spec.points == 0)
        spec.points = default_points(spec.subcommand);
    return spec;
}

void validate(const RunSpec &spec)
{
    const std::string &cmd = spec.subcommand;
    require(std::find(kSubcommands.begin(), kSubcommands.end(), cmd) != kSubcommands.end(),
            "unknown subcommand '" + cmd + "'");
    require(positive(spec.quad.rel_tol), "--tol-quad must be positive");
    require(positive(spec.solver.mu_tol), "--tol-mu must be positive");
    require(positive(spec.solver.t_tol), "--tol-tc must be positive");

    if (cmd == "mu" || cmd == "profile" || cmd == "oracle-check") {
        require(std::isfinite(spec.q), "--q must be finite");
        require(positive(spec.t), "--t must be positive");
    }
    if (cmd == "tc")
        require(std::isfinite(spec.q) && spec.q >= 0.0, "--q must be non-negative");
    if (cmd == "ratio-sweep" || cmd == "fraction-sweep") {
        require(!spec.q_list.empty(), "--q needs at least one value");
        for (double q : spec.q_list)
            require(positive(q), "--q values must be positive");
        require(spec.points >= 2, "--points must be at least 2");
    }
    if (cmd == "ratio-sweep")
        require(positive(spec.t_min) && spec.t_max > spec.t_min && std::isfinite(spec.t_max),
                "need 0 < --t-min < --t-max");
    if (cmd == "profile") {
        require(positive(spec.k_max), "--k-max must be positive");
        require(spec.samples >= 2, "--samples must be at least 2");
    }
    if (cmd == "universal") {
        require(positive(spec.q_min) && spec.q_max > spec.q_min && std::isfinite(spec.q_max),
                "need 0 < --q-min < --q-max");
        require(spec.points >= 2, "--points must be at least 2");
    }
    if (cmd == "ddim-tc") {
        require(positive(spec.q_over_m), "--q-over-m must be positive");
        require(spec.dim >= 3, "--dim must be at least 3 (no condensation for d <= 2)");
    }
    if (cmd == "oracle-check") {
        require(!spec.box_lengths.empty(), "--box-lengths needs at least one value");
        for (double l : spec.box_lengths)
            require(positive(l), "--box-lengths values must be positive");
        require(positive(spec.tail_tol), "--tail-tol must be positive");
    }
}

Table execute(const RunSpec &spec)
{
    const std::string &cmd = spec.subcommand;
    if (cmd == "mu")
        return run_mu(spec);
    if (cmd == "tc")
        return run_tc(spec);
    if (cmd == "ratio-sweep")
        return run_ratio_sweep(spec);
    if (cmd == "profile")
        return run_profile(spec);
    if (cmd == "fraction-sweep")
        return run_fraction_sweep(spec);
    if (cmd == "universal")
        return run_universal(spec);
    if (cmd == "ddim-tc")
        return run_ddim_tc(spec);
    if (cmd == "oracle-check")
        return run_oracle_check(spec);
    throw UsageError("unknown subcommand '" + cmd + "'");
}

void write_table(const Table &table, Format format, std::ostream &out)
{
    if (format == Format::Csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << table.columns[c];
        out << '\n';
        for (const auto &row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << format_cell(row[c]);
            out << '\n';
        }
        return;
    }

    if (table.rows.empty()) {
        out << "[]\n";
        return;
    }
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << "  {";
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? ", " : "") << '"' << table.columns[c] << "\": " << format_cell(table.rows[r][c]);
        out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunSpec spec;
    try {
        spec = parse_run_spec(args, out);
        if (spec.subcommand.empty())
            return 0;
        validate(spec);
    } catch (const UsageError &e) {
        write_error(err, "UsageError", spec.subcommand.empty() ? "cli" : spec.subcommand, e.what());
        return 2;
    }

    Table table;
    try {
        table = execute(spec);
    } catch (const Error &e) {
        write_error(err, std::string(to_string(e.code())), e.operation(), e.what());
        return 1;
    }

    if (spec.output_path.empty()) {
        write_table(table, spec.format, out);
        return out ? 0 : 1;
    }
    std::ofstream file(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        write_error(err, "IOError", "write_output", "cannot open " + spec.output_path);
        return 1;
    }
    write_table(table, spec.format, file);
    return file ? 0 : 1;
}

}  // namespace relbec::cli
