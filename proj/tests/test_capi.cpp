// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "levybesov/levybesov.h"

namespace fs = std::filesystem;

namespace
{
std::string slurp(fs::path const& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path scratch(std::string const& name)
{
    auto const dir = fs::temp_directory_path() / "levybesov_test_capi" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int cli(std::string const& args)
{
    std::string const cmd = std::string(LEVYBESOV_CLI) + " " + args + " >/dev/null 2>&1";
    int const status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("model handles")
{
    lb_model* m = nullptr;
    REQUIRE(lb_model_create(R"({"family":"SymmetricStable","alpha":1.5})", &m) == LB_OK);
    CHECK(std::string(lb_last_error()).empty());
    lb_indices idx{};
    REQUIRE(lb_model_indices(m, &idx) == LB_OK);
    CHECK(idx.beta_inf == 1.5);
    CHECK(idx.p_max == 1.5);
    CHECK(idx.heuristic == 0);

    double re = 0, im = 1;
    REQUIRE(lb_model_exponent(m, 2.0, &re, &im) == LB_OK);
    CHECK(re == doctest::Approx(-std::pow(2.0, 1.5)));
    CHECK(im == 0);

    size_t needed = 0;
    REQUIRE(lb_model_describe(m, nullptr, 0, &needed) == LB_OK);
    std::vector<char> buf(needed);
    REQUIRE(lb_model_describe(m, buf.data(), buf.size(), nullptr) == LB_OK);
    CHECK(std::string(buf.data()).size() + 1 == needed);
    char tiny[4];
    REQUIRE(lb_model_describe(m, tiny, sizeof tiny, nullptr) == LB_OK);
    CHECK(std::string(tiny).size() == 3);
    lb_model_destroy(m);
    lb_model_destroy(nullptr);
}

TEST_CASE("error codes and messages")
{
    lb_model* m = nullptr;
    CHECK(lb_model_create(R"({"family":"SymmetricStable","alpha":3})", &m)
          == LB_INVALID_PARAMETER);
    CHECK(m == nullptr);
    CHECK(std::string(lb_last_error()).find("alpha") != std::string::npos);
    CHECK(lb_model_create("{oops", &m) == LB_CONFIG_PARSE);
    CHECK(lb_model_create(nullptr, &m) == LB_INVALID_ARGUMENT);
    CHECK(std::string(lb_status_name(LB_WINDOW_TOO_SMALL)) == "WindowTooSmall");
    CHECK(std::string(lb_status_name(LB_OK)) == "Ok");
    CHECK(std::string(lb_status_name(static_cast<lb_status>(99))) == "Unknown");

    REQUIRE(lb_model_create(R"({"family":"Cauchy"})", &m) == LB_OK);
    lb_field* f = nullptr;
    CHECK(lb_field_sample(m, 1, 1, 8, 1, "poisson-exact", 1, 0, &f)
          == LB_BACKEND_FAMILY_MISMATCH);
    CHECK(lb_field_sample(m, 1, 1, 1, 4, nullptr, 1, 0, &f) == LB_WINDOW_TOO_SMALL);
    CHECK(f == nullptr);
    lb_model_destroy(m);

    int exit_code = 0;
    CHECK(lb_run_experiment("{}", "fly", nullptr, nullptr, 1, &exit_code) == LB_INVALID_ARGUMENT);
    CHECK(exit_code == 1);
}

TEST_CASE("field handles")
{
    lb_model* m = nullptr;
    REQUIRE(lb_model_create(R"({"family":"Gaussian"})", &m) == LB_OK);
    lb_field* f = nullptr;
    REQUIRE(lb_field_sample(m, 1, 1, 10, 1, "auto", 7, 0, &f) == LB_OK);
    size_t blocks = 0;
    REQUIRE(lb_field_block_count(f, &blocks) == LB_OK);
    CHECK(blocks == 11);
    size_t total = 0;
    for (size_t i = 0; i < blocks; ++i)
    {
        int j = -1;
        unsigned g = 9;
        double const* v = nullptr;
        size_t n = 0;
        REQUIRE(lb_field_block(f, i, &j, &g, &v, &n) == LB_OK);
        CHECK(v != nullptr);
        total += n;
    }
    CHECK(total == 1024);
    CHECK(lb_field_block(f, blocks, nullptr, nullptr, nullptr, nullptr) == LB_INVALID_ARGUMENT);

    size_t n = 0;
    REQUIRE(lb_field_scale_terms(f, 2, -0.5, 0, nullptr, 0, &n) == LB_OK);
    CHECK(n == 10);
    std::vector<double> T(n);
    REQUIRE(lb_field_scale_terms(f, 2, -0.5, 0, T.data(), T.size(), &n) == LB_OK);
    // at tau = -d/2, p = 2, T_j is the mean of |c|^2 over the scale
    CHECK(T[9] == doctest::Approx(1).epsilon(0.2));

    // same seed, same field
    lb_field* g = nullptr;
    REQUIRE(lb_field_sample(m, 1, 1, 10, 1, nullptr, 7, 0, &g) == LB_OK);
    double const* a = nullptr;
    double const* b = nullptr;
    size_t na = 0, nb = 0;
    lb_field_block(f, 10, nullptr, nullptr, &a, &na);
    lb_field_block(g, 10, nullptr, nullptr, &b, &nb);
    REQUIRE(na == nb);
    CHECK(std::equal(a, a + na, b));
    lb_field_destroy(f);
    lb_field_destroy(g);
    lb_model_destroy(m);
}

TEST_CASE("config normalization")
{
    size_t needed = 0;
    REQUIRE(lb_config_normalize(R"({"replicates": 5})", nullptr, 0, &needed) == LB_OK);
    std::string canon(needed, '\0');
    REQUIRE(lb_config_normalize(R"({"replicates": 5})", canon.data(), needed, nullptr) == LB_OK);
    canon.resize(needed - 1);
    CHECK(canon.find("\"replicates\": 5") != std::string::npos);
    std::string again(needed, '\0');
    REQUIRE(lb_config_normalize(canon.c_str(), again.data(), needed, nullptr) == LB_OK);
    again.resize(needed - 1);
    CHECK(again == canon);
    CHECK(lb_config_normalize(R"({"unknown": 1})", nullptr, 0, &needed) == LB_CONFIG_PARSE);
}

TEST_CASE("run through the C API")
{
    auto const out = scratch("run");
    uint64_t const seed = 99;
    int exit_code = -1;
    REQUIRE(lb_run_experiment(R"({"replicates": 10, "p_grid": [2]})", "verify",
                              out.string().c_str(), &seed, 2, &exit_code)
            == LB_OK);
    CHECK(exit_code == 0);
    CHECK(slurp(out / "report.json").find("\"master_seed\": 99") != std::string::npos);
}

TEST_CASE("command-line tool")
{
    auto const dir = scratch("cli");
    auto const config = dir / "config.json";
    std::ofstream(config) << R"({"replicates": 12, "p_grid": [1, 2], "window": {"J": 10},
                                "hill": {"T": 16384}})";
    std::string const base = "--config " + config.string() + " --command verify --seed 5 --out ";

    CHECK(cli(base + (dir / "t1").string() + " --threads 1") == 0);
    CHECK(cli(base + (dir / "t8").string() + " --threads 8") == 0);
    CHECK(cli(base + (dir / "t1b").string() + " --threads 1") == 0);
    for (char const* f : {"per_scale.csv", "moments.csv"})
    {
        CAPTURE(f);
        auto const one = slurp(dir / "t1" / f);
        CHECK_FALSE(one.empty());
        CHECK(one == slurp(dir / "t8" / f));
        CHECK(one == slurp(dir / "t1b" / f));
    }

    // environment fallback for the thread count
    CHECK(setenv("LEVY_BESOV_THREADS", "3", 1) == 0);
    CHECK(cli(base + (dir / "env3").string()) == 0);
    unsetenv("LEVY_BESOV_THREADS");
    CHECK(slurp(dir / "env3" / "report.json").find("\"threads\": 3") != std::string::npos);
    CHECK(slurp(dir / "env3" / "moments.csv") == slurp(dir / "t1" / "moments.csv"));

    // exit-code contract
    auto const failing = dir / "failing.json";
    std::ofstream(failing) << R"({"replicates": 8, "p_grid": [1], "window": {"J": 8},
                                 "hill": {"T": 16384}, "tolerances": {"rho": -1}})";
    CHECK(cli("--config " + failing.string() + " --command verify --out " + (dir / "f").string())
          == 2);
    auto const broken = dir / "broken.json";
    std::ofstream(broken) << "{\"model\": ";
    CHECK(cli("--config " + broken.string() + " --command verify --out " + (dir / "b").string())
          == 1);
    CHECK(cli("--config " + config.string() + " --command nope") == 1);
    CHECK(cli("--command verify") == 1);
    CHECK(cli("--help") == 0);

    CHECK(cli("--config " + config.string() + " --command indices --out " + (dir / "i").string())
          == 0);
    CHECK(fs::exists(dir / "i" / "indices.json"));
}
