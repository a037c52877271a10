// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "levybesov/error.hpp"
#include "levybesov/experiment.hpp"

using namespace levybesov;
namespace fs = std::filesystem;
using nlohmann::json;

namespace
{
fs::path scratch(std::string const& name)
{
    auto const dir = fs::temp_directory_path() / ("levybesov_test_experiment") / name;
    fs::remove_all(dir);
    return dir;
}

std::string slurp(fs::path const& p)
{
    std::ifstream is(p, std::ios::binary);
    REQUIRE(is);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

ErrorCode parse_error(std::string const& text)
{
    try
    {
        parse_config(text);
    }
    catch (Error const& e)
    {
        return e.code();
    }
    return ErrorCode::internal;
}

int run(std::string const& config, Command cmd, fs::path const& out, int threads = 1)
{
    RunOptions opt;
    opt.out_dir = out.string();
    opt.threads = threads;
    return run_experiment(parse_config(config), cmd, opt);
}

}  // namespace

TEST_CASE("config defaults and round trip")
{
    auto const c = parse_config("{}");
    CHECK(c.model.family() == Family::gaussian);
    CHECK(c.d == 1);
    CHECK(c.wavelet.is_haar());
    CHECK_FALSE(c.backend.has_value());
    CHECK(c.resolved_backend() == Backend::gaussian_exact);
    CHECK(c.replicates == 100);
    CHECK(c.bootstrap == 200);
    CHECK(c.j_lo == 4);

    std::string const text = R"({
      "model": {"family": "CompoundPoisson", "lambda": 2.5,
                "jumps": {"type": "uniform", "lower": -0.3, "upper": 1.7}},
      "d": 2, "wavelet": "db3", "cascade_depth": 10, "backend": "grid-dwt",
      "window": {"T": 2, "J": 7, "guard_band": 1},
      "p_grid": [0.1, 0.30000000000000004, 2], "tau_ref": -0.125, "rho": -1.5,
      "replicates": 17, "bootstrap": 33, "master_seed": 18446744073709551615,
      "j_range": {"lo": 3, "hi": 6}, "output_dir": "x/y",
      "tolerances": {"tau": 0.2, "rho": 0.05, "slope": 0.3, "hill": 0.1},
      "hill": {"T": 4096, "k": 60},
      "dirac": {"x0": [0.25, 0.75], "tau_grid": [-1, 0], "p": 1.5},
      "dump_coefficients": true
    })";
    auto const a = parse_config(text);
    CHECK(a.model.params().lambda == 2.5);
    CHECK(a.model.params().jumps.b == 1.7);
    CHECK(a.wavelet.order == 3);
    CHECK(a.wavelet.cascade_depth == 10);
    CHECK(a.backend == Backend::grid_dwt);
    CHECK(a.master_seed == 18446744073709551615ULL);
    CHECK(a.p_grid[1] == 0.30000000000000004);
    CHECK(a.j_hi == 6);
    CHECK(a.dirac.x0[1] == 0.75);
    CHECK(a.dirac.p == 1.5);

    auto const once = serialize_config(a);
    auto const b = parse_config(once);
    CHECK(serialize_config(b) == once);
    CHECK(b.p_grid == a.p_grid);
    CHECK(b.tau_ref == a.tau_ref);
    CHECK(b.hill_k == a.hill_k);
    CHECK(b.dirac.tau_grid == a.dirac.tau_grid);

    // every family survives the trip
    for (char const* m :
         {R"({"family":"Cauchy","gamma":0.7})",
          R"({"family":"SymmetricStable","alpha":1.3,"gamma":2})",
          R"({"family":"SumOfStables","alpha1":1.5,"alpha2":0.5})",
          R"({"family":"Laplace","sigma2":3})",
          R"({"family":"SymmetricGamma","sigma2":1,"lambda":0.5})",
          R"({"family":"LayeredStable","alpha1":1.5,"alpha2":0.5})",
          R"({"family":"InverseGaussian"})",
          R"({"family":"FarkasSingle","beta2":1.5,"M":8})",
          R"({"family":"FarkasDouble","beta1":0.5,"beta2":1.5,"M":8})",
          R"({"family":"CustomExponent","mu":0,"sigma2":0.5,
              "measure":{"type":"power_law","pieces":[{"weight":1,"alpha":1.2,
              "abs_lower":0,"abs_upper":"inf"}]}})"})
    {
        CAPTURE(m);
        auto const cfg = parse_config(std::string(R"({"model":)") + m + "}");
        auto const s = serialize_config(cfg);
        CHECK(serialize_config(parse_config(s)) == s);
        CHECK(parse_config(s).model.describe() == cfg.model.describe());
    }
}

TEST_CASE("config errors")
{
    CHECK(parse_error("{") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"J": 3})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"model": {"family": "Nope"}})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"model": {"family": "Gaussian", "alpha": 1}})")
          == ErrorCode::config_parse);
    CHECK(parse_error(R"({"model": {"family": "SymmetricStable"}})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"d": 3})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"p_grid": []})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"p_grid": [0]})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"wavelet": "db"})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"master_seed": -1})") == ErrorCode::config_parse);
    CHECK(parse_error(R"({"backend": "poisson-exact"})") == ErrorCode::config_parse);
    // model-level validation keeps its own code
    CHECK(parse_error(R"({"model": {"family": "SymmetricStable", "alpha": 2.5}})")
          == ErrorCode::invalid_parameter);
    CHECK_THROWS_AS(command_from_string("fly"), Error);
    CHECK(command_from_string("verify") == Command::verify);
}

TEST_CASE("verify writes a complete report")
{
    auto const out = scratch("verify");
    std::string const cfg = R"({"replicates": 40, "p_grid": [2]})";
    CHECK(run(cfg, Command::verify, out) == 0);
    for (char const* f : {"report.json", "moments.csv", "per_scale.csv", "plots/per_scale.svg",
                          "plots/triebel.svg"})
        CHECK(fs::exists(out / f));

    auto const text = slurp(out / "report.json");
    CHECK(check_report_schema(text).empty());
    auto const r = json::parse(text);
    CHECK(r["all_pass"] == true);
    CHECK(r["rows"].size() == 1);
    CHECK(r["rows"][0]["process_tau_hat"].get<double>()
          == doctest::Approx(r["rows"][0]["tau_hat"].get<double>() + 1));
    CHECK(r["hill"]["p_max"] == "inf");
    // config echo reproduces the run configuration
    auto const echo = parse_config(r["config"].dump());
    CHECK(echo.replicates == 40);
    CHECK(echo.output_dir == out.string());

    auto const csv = slurp(out / "per_scale.csv");
    CHECK(csv.rfind("j,gender_count,term_count,T_j,log2_T_j\n", 0) == 0);
    auto const svg = slurp(out / "plots/triebel.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
    CHECK(svg.find("<script") == std::string::npos);

    auto broken = r;
    broken.erase("timestamp");
    broken["rows"][0]["tau_lower"] = 1.0;
    CHECK(check_report_schema(broken.dump()).size() == 2);
    CHECK_FALSE(check_report_schema("[1, 2]").empty());
}

TEST_CASE("failed verification returns 2")
{
    auto const out = scratch("fail");
    // a negative tolerance can never be met
    std::string const cfg
        = R"({"replicates": 20, "p_grid": [1], "tolerances": {"tau": 0, "rho": -1}})";
    CHECK(run(cfg, Command::verify, out) == 2);
    auto const r = json::parse(slurp(out / "report.json"));
    CHECK(r["all_pass"] == false);
    CHECK(r["rows"][0]["rho_pass"] == false);
}

TEST_CASE("refused moments leave header-only tables")
{
    auto const out = scratch("refused");
    std::string const cfg
        = R"({"model": {"family": "Cauchy"}, "p_grid": [1.5], "replicates": 4, "window": {"J": 6}})";
    CHECK(run(cfg, Command::moments, out) == 0);
    CHECK(slurp(out / "moments.csv") == "j,p,mean_abs_p,log2_mean,stderr\n");
    auto const r = json::parse(slurp(out / "report.json"));
    CHECK(r["refused"][0] == 1.5);
    CHECK(r["fits"].empty());
}

TEST_CASE("dirac classifications")
{
    auto const out = scratch("dirac");
    for (double p : {1.0, 2.0})
    {
        std::string const cfg = R"({"window": {"J": 14}, "dirac": {"p": )" + std::to_string(p)
                                + "}}";
        CHECK(run(cfg, Command::dirac, out) == 0);
        auto const r = json::parse(slurp(out / "report.json"));
        auto const& res = r["results"];
        REQUIRE(res.size() == 3);
        CHECK(res[0]["classification"] == "convergent");
        CHECK(res[1]["classification"] == "critical");
        CHECK(res[2]["classification"] == "divergent");
        CHECK(res[1]["tau"].get<double>() == doctest::Approx(1 / p - 1));
    }
}

TEST_CASE("indices and simulate")
{
    auto const out = scratch("indices");
    CHECK(run(R"({"model": {"family": "LayeredStable", "alpha1": 1.5, "alpha2": 0.5}})",
              Command::indices, out)
          == 0);
    auto const r = json::parse(slurp(out / "indices.json"));
    CHECK(r["tuple"] == json({1.5, 1.5, 0.5, 0.5}));
    CHECK(r["closed_form"] == true);

    auto const sim = scratch("simulate");
    std::string const cfg = R"({"model": {"family": "Laplace"}, "window": {"J": 8},
                               "dump_coefficients": true})";
    CHECK(run(cfg, Command::simulate, sim) == 0);
    CHECK(fs::file_size(sim / "coefficients.lbcf") > 256 * 8);
    std::ifstream is(sim / "coefficients.lbcf", std::ios::binary);
    auto const field = read_field(is);
    CHECK(field.total_count() == 256);
    CHECK(field.backend == Backend::grid_dwt);
}

TEST_CASE("artifacts do not depend on the thread count")
{
    std::string const cfg = R"({"model": {"family": "SymmetricStable", "alpha": 1.5},
                               "replicates": 24, "window": {"J": 10}, "p_grid": [0.5, 1, 3],
                               "hill": {"T": 16384}})";
    auto const a = scratch("threads1");
    auto const b = scratch("threads8");
    run(cfg, Command::verify, a, 1);
    run(cfg, Command::verify, b, 8);
    for (char const* f : {"per_scale.csv", "moments.csv"})
        CHECK(slurp(a / f) == slurp(b / f));
    auto ra = json::parse(slurp(a / "report.json"));
    auto rb = json::parse(slurp(b / "report.json"));
    CHECK(ra["rows"] == rb["rows"]);
}
