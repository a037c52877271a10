// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "levybesov/levybesov.h"

namespace
{
std::optional<std::string> slurp(std::string const& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        return std::nullopt;
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simulate Levy white noise and estimate its Besov regularity"};
    app.set_version_flag("--version", lb_version());

    std::string config_path;
    std::string command;
    std::string out_dir;
    std::uint64_t seed = 0;
    int threads = 0;
    app.add_option("--config", config_path, "JSON experiment configuration")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--command", command, "Pipeline to run")
        ->required()
        ->check(CLI::IsMember({"indices", "simulate", "besov", "moments", "verify", "dirac"}));
    auto* out_opt = app.add_option("--out", out_dir, "Output directory (default: config output_dir)");
    auto* seed_opt = app.add_option("--seed", seed, "Master seed, overrides the config");
    app.add_option("--threads", threads, "Worker threads (default: $LEVY_BESOV_THREADS or 1)")
        ->check(CLI::NonNegativeNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        // --help and --version exit 0; usage errors map onto the error status
        return code == 0 ? 0 : 1;
    }

    auto const text = slurp(config_path);
    if (!text)
    {
        std::fprintf(stderr, "levybesov: cannot read %s\n", config_path.c_str());
        return 1;
    }

    int exit_code = 1;
    lb_status const st = lb_run_experiment(text->c_str(),
                                           command.c_str(),
                                           out_opt->count() ? out_dir.c_str() : nullptr,
                                           seed_opt->count() ? &seed : nullptr,
                                           threads,
                                           &exit_code);
    if (st != LB_OK)
    {
        std::fprintf(stderr, "levybesov: %s\n", lb_last_error());
        return 1;
    }
    if (exit_code == 2)
        std::fprintf(stderr, "levybesov: verification failed, see report.json\n");
    return exit_code;
}
