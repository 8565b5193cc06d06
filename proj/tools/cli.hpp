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

/** @file cli.hpp
 *  Command-line front end: parses a RunSpec, evaluates it into a table and
 *  writes the table as CSV or JSON.
 */

#ifndef RELBEC_TOOLS_CLI_HPP
#define RELBEC_TOOLS_CLI_HPP

#include "relbec/eos_solver.hpp"
#include "relbec/quadrature.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace relbec::cli {

/// Malformed or out-of-range command line; reported with exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct RunSpec {
    std::string subcommand;

    double q = 0.0;
    double t = 0.0;
    std::vector<double> q_list{0.01, 0.1, 1.0, 10.0};
    double t_min = 0.05;
    double t_max = 10.0;
    std::size_t points = 0;  // 0: subcommand default
    double k_max = 10.0;
    std::size_t samples = 256;
    double q_min = 1e-3;
    double q_max = 1e3;
    double q_over_m = 0.0;
    int dim = 3;
    std::vector<double> box_lengths{50.0, 100.0, 200.0, 400.0};
    /// Mode-sum tail tolerance relative to the quadrature particle density.
    double tail_tol = 1e-6;

    Format format = Format::Csv;
    std::string output_path;  // empty: standard output
    SolverConfig solver;
    QuadratureConfig quad;
    unsigned threads = 0;
};

using Cell = std::variant<double, std::int64_t>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Parses argv[1..]; throws UsageError. For --help, prints usage to help_out
/// and returns a spec with an empty subcommand.
RunSpec parse_run_spec(const std::vector<std::string> &args, std::ostream &help_out);

/// Checks every numeric parameter against the owning module's preconditions.
void validate(const RunSpec &spec);

/// Runs the computation. Throws relbec::Error on solver or quadrature failure.
Table execute(const RunSpec &spec);

/// Doubles use 17 significant digits in lowercase scientific notation.
void write_table(const Table &table, Format format, std::ostream &out);

/** Full pipeline. Exit status 0 on success, 1 on a computation failure and
 *  2 on a usage error; failures print a one-line JSON error record to err. */
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace relbec::cli

#endif
