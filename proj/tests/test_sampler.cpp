// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "doctest.h"
#include "levybesov/error.hpp"
#include "levybesov/numerics.hpp"
#include "levybesov/sampler.hpp"

using namespace levybesov;

namespace
{
std::vector<LevyModel> sampleable_models()
{
    return {
        LevyModel::gaussian(1.5),
        LevyModel::cauchy(1),
        LevyModel::symmetric_stable(1.5),
        LevyModel::symmetric_stable(0.7),
        LevyModel::symmetric_stable(2),
        LevyModel::sum_of_stables(0.8, 1.6),
        LevyModel::laplace(1),
        LevyModel::symmetric_gamma(2, 0.5),
        LevyModel::compound_poisson(3, JumpLaw::normal(0, 1)),
        LevyModel::compound_poisson(2, JumpLaw::uniform(-1, 1)),
        LevyModel::layered_stable(1.5, 0.5),
        LevyModel::layered_stable(0.9, 1.2),
        LevyModel::inverse_gaussian(),
        LevyModel::farkas_single(1.5, 8),
        LevyModel::farkas_double(0.5, 1.5, 8),
    };
}

std::vector<double> draw(CellLawSampler const& s, std::size_t n, std::uint64_t seed)
{
    auto rng = make_engine(seed, 0, StreamRole::validation);
    std::vector<double> out(n);
    for (auto& x : out)
        x = s(rng);
    return out;
}

}  // namespace

TEST_CASE("empirical characteristic function")
{
    std::size_t const n = 100000;
    for (double t : {1.0, 1.0 / 64})
    {
        for (auto const& model : sampleable_models())
        {
            CAPTURE(model.describe());
            CAPTURE(t);
            CellLawSampler const sampler(model, t);
            auto rng = make_engine(17, 0, StreamRole::validation);
            auto const grid = default_cf_grid(model, t);
            auto const v = validate_sampler_cf(sampler, n, grid, rng);
            CHECK(v.threshold == doctest::Approx(5 / std::sqrt(1e5)));
            CHECK(v.sup_deviation <= v.threshold);
            CHECK(v.passed);
        }
    }
}

TEST_CASE("wrong reference volume is detected")
{
    for (auto const& model : {LevyModel::symmetric_stable(1.5),
                              LevyModel::layered_stable(1.5, 0.5),
                              LevyModel::gaussian(1)})
    {
        CellLawSampler const sampler(model, 1);
        auto const samples = draw(sampler, 100000, 3);
        auto const grid = default_cf_grid(model, 1);
        CHECK_FALSE(compare_empirical_cf(samples, model, 2, grid).passed);
        CHECK(compare_empirical_cf(samples, model, 1, grid).passed);
    }
}

TEST_CASE("infinite divisibility")
{
    std::size_t const n = 20000;
    for (auto const& model : {LevyModel::symmetric_stable(1.2),
                              LevyModel::layered_stable(1.5, 0.5),
                              LevyModel::symmetric_gamma(1, 2),
                              LevyModel::inverse_gaussian()})
    {
        CAPTURE(model.describe());
        CellLawSampler const whole(model, 1);
        CellLawSampler const quarter(model, 0.25);
        auto const direct = draw(whole, n, 5);
        auto rng = make_engine(6, 0, StreamRole::validation);
        std::vector<double> summed(n);
        for (auto& x : summed)
            x = quarter(rng) + quarter(rng) + quarter(rng) + quarter(rng);
        CHECK(ks_two_sample(direct, summed).p_value > 1e-3);
    }
}

TEST_CASE("symmetry")
{
    for (auto const& model : sampleable_models())
    {
        if (model.family() == Family::inverse_gaussian)
            continue;
        CAPTURE(model.describe());
        CellLawSampler const sampler(model, 1);
        auto const a = draw(sampler, 20000, 8);
        auto b = draw(sampler, 20000, 9);
        for (auto& x : b)
            x = -x;
        CHECK(ks_two_sample(a, b).p_value > 1e-3);
    }
    // positive support
    CellLawSampler const ig(LevyModel::inverse_gaussian(), 0.5);
    for (double x : draw(ig, 1000, 1))
        CHECK(x > 0);
}

TEST_CASE("determinism and stream separation")
{
    CellLawSampler const s(LevyModel::layered_stable(1.5, 0.5), 0.1);
    CHECK(draw(s, 100, 42) == draw(s, 100, 42));
    CHECK(draw(s, 100, 42) != draw(s, 100, 43));
    CHECK(derive_seed(1, 0, StreamRole::cell_integrals)
          != derive_seed(1, 0, StreamRole::impulses));
    CHECK(derive_seed(1, 0, StreamRole::cell_integrals)
          != derive_seed(1, 1, StreamRole::cell_integrals));
}

TEST_CASE("fractional moment against the Fourier formula")
{
    auto const model = LevyModel::symmetric_stable(1.5);
    CellLawSampler const sampler(model, 1);
    auto const x = draw(sampler, 200000, 21);
    CompensatedSum acc;
    for (double v : x)
        acc.add(std::sqrt(std::abs(v)));
    double const mc = acc.value() / static_cast<double>(x.size());
    double const exact = pth_moment_via_cf(model, 1, 0.5);
    CHECK(std::abs(mc - exact) / exact < 0.01);

    // Gaussian variance through the sampler
    CellLawSampler const g(LevyModel::gaussian(2), 0.5);
    auto const y = draw(g, 100000, 2);
    CHECK(variance(y) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("truncation and errors")
{
    CellLawSampler const ls(LevyModel::layered_stable(1.5, 0.5), 1);
    // about 256 explicit jumps per draw
    double const eps = ls.truncation();
    CHECK(2 * (std::pow(eps, -1.5) - 1) / 1.5 == doctest::Approx(256).epsilon(1e-9));
    CellLawSampler const tiny(LevyModel::layered_stable(1.5, 0.5), 1e-9);
    CHECK(tiny.truncation() == 1e-4);

    LevyTriplet triplet;
    triplet.sigma2 = 1;
    try
    {
        CellLawSampler bad(LevyModel::custom(triplet), 1);
        FAIL("expected UnsampleableFamily");
    }
    catch (Error const& e)
    {
        CHECK(e.code() == ErrorCode::unsampleable_family);
    }
    CHECK_THROWS_AS(CellLawSampler(LevyModel::gaussian(), 0), Error);
    auto rng = make_engine(1, 0, StreamRole::validation);
    CellLawSampler const g(LevyModel::gaussian(), 1);
    std::vector<double> grid{1.0};
    CHECK_THROWS_AS(validate_sampler_cf(g, 100, grid, rng), Error);
}

TEST_CASE("impulse field")
{
    auto const model = LevyModel::compound_poisson(50, JumpLaw::uniform(-1, 1));
    Box box;
    box.d = 2;
    box.hi = {2, 3};
    double count = 0;
    int const reps = 200;
    for (int r = 0; r < reps; ++r)
    {
        auto rng = make_engine(4, static_cast<std::uint64_t>(r), StreamRole::impulses);
        auto const f = sample_impulse_field(model, box, rng);
        REQUIRE(f.positions.size() == f.amplitudes.size());
        count += static_cast<double>(f.positions.size());
        for (std::size_t i = 0; i < f.positions.size(); ++i)
        {
            CHECK(f.positions[i][0] >= 0);
            CHECK(f.positions[i][0] < 2);
            CHECK(f.positions[i][1] < 3);
            CHECK(std::abs(f.amplitudes[i]) <= 1);
        }
    }
    // mean 300, sd of the average sqrt(300 / 200)
    CHECK(std::abs(count / reps - 300) < 5 * std::sqrt(300.0 / reps));
    auto rng = make_engine(1, 0, StreamRole::impulses);
    CHECK_THROWS_AS(sample_impulse_field(LevyModel::cauchy(), box, rng), Error);
}
