// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "analysis.hpp"

namespace levybesov
{
struct DiracSettings
{
    std::array<double, 2> x0{0.3125, 0.3125};
    std::vector<double> tau_grid;  //!< empty: critical value and +-0.25
    std::optional<double> p;  //!< defaults to the first entry of p_grid
};

/*!
 * Everything an experiment needs; JSON keys match the field names.
 *
 * Serialization is lossless: parse(serialize(c)) == c.
 */
struct ExperimentConfig
{
    LevyModel model = LevyModel::gaussian();
    int d = 1;
    WaveletSpec wavelet = WaveletSpec::haar();
    std::optional<Backend> backend;  //!< empty: chosen from the family
    int T = 1;
    int J = 12;
    int guard_band = 0;
    std::vector<double> p_grid{1, 2};
    double tau_ref = 0;
    double rho = 0;
    int replicates = 100;
    int bootstrap = 200;
    std::uint64_t master_seed = 1;
    int j_lo = 4;
    int j_hi = -1;
    std::string output_dir = "out";
    Tolerances tolerances;
    int hill_T = 1 << 16;
    std::size_t hill_k = 0;
    DiracSettings dirac;
    bool dump_coefficients = false;

    Backend resolved_backend() const;
    SimulationWindow window() const;
    StudySetup study(int threads) const;
};

//! Throws ConfigParse with the offending key in the message.
ExperimentConfig parse_config(std::string_view json_text);
std::string serialize_config(ExperimentConfig const& config);

enum class Command
{
    indices,
    simulate,
    besov,
    moments,
    verify,
    dirac,
};

Command command_from_string(std::string_view name);
std::string_view to_string(Command c);

struct RunOptions
{
    std::string out_dir;  //!< overrides config.output_dir when nonempty
    std::optional<std::uint64_t> seed;  //!< overrides config.master_seed
    int threads = 0;  //!< 0: LEVY_BESOV_THREADS or 1
};

//! Exit status: 0 all checks pass, 2 a verification flag failed. Throws Error.
int run_experiment(ExperimentConfig config, Command command, RunOptions const& options);

//! Structural check of report.json; returns one message per violation.
std::vector<std::string> check_report_schema(std::string_view report_json);

}  // namespace levybesov
