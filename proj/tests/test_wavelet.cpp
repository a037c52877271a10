// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "levybesov/dwt.hpp"
#include "levybesov/error.hpp"
#include "levybesov/wavelet.hpp"

using namespace levybesov;

namespace
{
double energy(std::span<double const> v)
{
    double s = 0;
    for (double x : v)
        s += x * x;
    return s;
}

double energy(CoefficientField const& f)
{
    double s = 0;
    for (auto const& b : f.blocks)
        s += energy(b.values);
    return s;
}

std::vector<double> random_vector(std::size_t n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    std::vector<double> v(n);
    for (auto& x : v)
        x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("filters")
{
    auto const haar = build_filters(WaveletSpec::haar());
    REQUIRE(haar.taps() == 2);
    CHECK(haar.lowpass[0] == doctest::Approx(1 / std::numbers::sqrt2));
    CHECK(haar.lowpass[1] == doctest::Approx(1 / std::numbers::sqrt2));

    for (int n = 1; n <= 10; ++n)
    {
        CAPTURE(n);
        auto const f = build_filters(WaveletSpec::daubechies(n));
        CHECK(f.taps() == static_cast<std::size_t>(2 * n));
        double sum = 0;
        for (double h : f.lowpass)
            sum += h;
        CHECK(std::abs(sum - std::numbers::sqrt2) < 1e-12);
        CHECK(orthonormality_residual(f) < 1e-12);
        // quadrature mirror relation
        for (int k = f.highpass_offset; k <= 1; ++k)
        {
            double const sign = (k % 2 == 0) ? 1 : -1;
            CHECK(f.g(k) == sign * f.lowpass[static_cast<std::size_t>(1 - k)]);
        }
        // N vanishing moments of the highpass filter
        for (int p = 0; p < n; ++p)
        {
            double m = 0;
            double scale = 0;
            for (int k = f.highpass_offset; k <= 1; ++k)
            {
                m += f.g(k) * std::pow(k, p);
                scale += std::abs(f.g(k) * std::pow(k, p));
            }
            CHECK(std::abs(m) < 1e-9 * scale);
        }
    }
    auto const db2 = build_filters(WaveletSpec::daubechies(2));
    double first = 0;
    for (int k = db2.highpass_offset; k <= 1; ++k)
        first += db2.g(k) * k;
    CHECK(std::abs(first) < 1e-12);

    try
    {
        build_filters(WaveletSpec::daubechies(11));
        FAIL("expected UnsupportedOrder");
    }
    catch (Error const& e)
    {
        CHECK(e.code() == ErrorCode::unsupported_order);
    }
    CHECK(wavelet_from_name("db4").order == 4);
    CHECK(wavelet_from_name("haar").is_haar());
    CHECK_THROWS_AS(wavelet_from_name("sym4"), Error);
}

TEST_CASE("cascade")
{
    for (int L : {4, 9})
    {
        auto const haar = cascade_evaluate(WaveletSpec{1, L});
        CHECK(haar.father_at(0.0) == 1);
        CHECK(haar.father_at(0.99) == 1);
        CHECK(haar.father_at(1.5) == 0);
        CHECK(haar.mother_at(0.25) == 1);
        CHECK(haar.mother_at(0.5) == -1);
        CHECK(haar.mother_at(0.75) == -1);
        CHECK(haar.mother_at(-0.25) == 0);
    }

    for (int n : {2, 3, 4, 6})
    {
        CAPTURE(n);
        WaveletSpec const spec{n, 10};
        auto const g = cascade_evaluate(spec);
        auto const f = build_filters(spec);
        double const dx = g.step();
        double int_phi = 0, int_psi = 0, cross = 0, norm_phi = 0;
        for (double v : g.father)
        {
            int_phi += v * dx;
            norm_phi += v * v * dx;
        }
        for (double v : g.mother)
            int_psi += v * dx;
        for (std::size_t i = 0; i < g.mother.size(); ++i)
        {
            double const x = g.mother_lo + static_cast<double>(i) * dx;
            cross += g.mother[i] * g.father_at(x) * dx;
        }
        CHECK(std::abs(int_phi - 1) < 1e-6);
        CHECK(std::abs(int_psi) < 1e-6);
        CHECK(std::abs(cross) < 1e-5);
        CHECK(std::abs(norm_phi - 1) < 1e-2);

        // two-scale relation on the grid
        double worst = 0;
        for (std::size_t i = 0; i < g.father.size(); i += 7)
        {
            double const x = static_cast<double>(i) * dx;
            double rhs = 0;
            for (std::size_t k = 0; k < f.taps(); ++k)
                rhs += f.lowpass[k] * g.father_at(2 * x - static_cast<double>(k));
            worst = std::max(worst, std::abs(g.father[i] - std::numbers::sqrt2 * rhs));
        }
        CHECK(worst < 1e-8);
    }
    CHECK_THROWS_AS(cascade_evaluate(WaveletSpec{2, 3}), Error);
}

TEST_CASE("transform basics")
{
    std::vector<double> constant(64, 3.5);
    for (int n : {1, 2, 4})
    {
        auto const field = dwt_forward(constant, 1, 1, 6, WaveletSpec::daubechies(n), 6);
        for (auto const& b : field.blocks)
        {
            if (b.gender == 0)
                continue;
            for (double v : b.values)
                CHECK(std::abs(v) < 1e-12);
        }
        CHECK(field.blocks.front().values.size() == 1);
    }

    std::vector<double> impulse(8, 0.0);
    impulse[0] = 1;
    auto const field = dwt_forward(impulse, 1, 1, 3, WaveletSpec::haar(), 3);
    CHECK(energy(field) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(field.coarsest_j == 0);
    CHECK(field.finest_j == 2);
    for (int j = 0; j <= 2; ++j)
        CHECK(field.find(j, 1u)->values.size() == (std::size_t{1} << j));

    CHECK_THROWS_AS(dwt_forward(impulse, 1, 1, 4, WaveletSpec::haar(), 3), Error);
    CHECK_THROWS_AS(dwt_forward(impulse, 3, 1, 3, WaveletSpec::haar(), 3), Error);
}

TEST_CASE("Parseval and reconstruction")
{
    auto const x1 = random_vector(std::size_t{1} << 16, 7);
    for (int n : {1, 2, 4})
    {
        auto const f = dwt_forward(x1, 1, 1, 16, WaveletSpec::daubechies(n), 16);
        CHECK(std::abs(energy(f) - energy(x1)) / energy(x1) < 1e-10);
        auto const back = dwt_inverse(f);
        double err = 0;
        for (std::size_t i = 0; i < x1.size(); ++i)
            err = std::max(err, std::abs(back[i] - x1[i]));
        CHECK(err < 1e-10);
    }

    auto const x2 = random_vector(64 * 64, 11);
    for (int n : {1, 2, 3})
    {
        auto const f = dwt_forward(x2, 2, 1, 6, WaveletSpec::daubechies(n), 6);
        CHECK(std::abs(energy(f) - energy(x2)) / energy(x2) < 1e-10);
        for (int j = 0; j < 6; ++j)
        {
            int count = 0;
            for (auto const& b : f.blocks)
                if (b.j == j && b.gender != 0)
                    ++count;
            CHECK(count == 3);
        }
        auto const back = dwt_inverse(f);
        double err = 0;
        for (std::size_t i = 0; i < x2.size(); ++i)
            err = std::max(err, std::abs(back[i] - x2[i]));
        CHECK(err < 1e-10);
    }

    // window T > 1
    auto const x3 = random_vector(3 * 32, 5);
    auto const f3 = dwt_forward(x3, 1, 3, 5, WaveletSpec::daubechies(2), 5);
    CHECK(f3.find(0, 0u)->values.size() == 3);
    CHECK(std::abs(energy(f3) - energy(x3)) / energy(x3) < 1e-10);
}

TEST_CASE("basis impulse maps to one-hot coefficients")
{
    for (int d : {1, 2})
    {
        auto const zero = std::vector<double>(d == 1 ? 16 : 256, 0.0);
        auto field = dwt_forward(zero, d, 1, 4, WaveletSpec::haar(), 4);
        auto* target = field.find(2, mother_all(d));
        REQUIRE(target);
        target->values[1] = 1;
        auto const fine = dwt_inverse(field);
        auto const again = dwt_forward(fine, d, 1, 4, WaveletSpec::haar(), 4);
        for (auto const& b : again.blocks)
        {
            for (std::size_t k = 0; k < b.values.size(); ++k)
            {
                bool const hot = b.j == 2 && b.gender == mother_all(d) && k == 1;
                CHECK(std::abs(b.values[k] - (hot ? 1.0 : 0.0)) < 1e-14);
            }
        }
    }
}

TEST_CASE("regularity table")
{
    CHECK(WaveletSpec::haar().regularity() == 0);
    double prev = -1;
    for (int n = 1; n <= 10; ++n)
    {
        double const r = WaveletSpec::daubechies(n).regularity();
        CHECK(r > prev);
        prev = r;
    }
    CHECK(required_regularity(-0.5, 2, 1) == 0.5);
    CHECK(required_regularity(0.7, 2, 1) == 0.7);
    CHECK(required_regularity(-1, 0.5, 2) == 3);
    CHECK_THROWS_AS(WaveletSpec::daubechies(11).regularity(), Error);
}

TEST_CASE("genders")
{
    CHECK(genders_at(1, true).size() == 2);
    CHECK(genders_at(1, false).size() == 1);
    CHECK(genders_at(2, false).size() == 3);
    CHECK(gender_name(1u, 2) == "MF");
    CHECK(gender_name(2u, 2) == "FM");
    CHECK(gender_name(mother_all(2), 2) == "MM");
}

TEST_CASE("coefficient dump round trip")
{
    auto const x = random_vector(32, 3);
    auto field = dwt_forward(x, 1, 2, 4, WaveletSpec::daubechies(2), 3);
    field.seed = 0xfeedbeefULL;
    std::stringstream ss;
    write_field(ss, field);
    auto const back = read_field(ss);
    CHECK(back.d == field.d);
    CHECK(back.T == 2);
    CHECK(back.coarsest_j == field.coarsest_j);
    CHECK(back.finest_j == field.finest_j);
    CHECK(back.seed == field.seed);
    CHECK(back.backend == Backend::grid_dwt);
    CHECK(back.wavelet.order == 2);
    REQUIRE(back.blocks.size() == field.blocks.size());
    for (std::size_t i = 0; i < back.blocks.size(); ++i)
        CHECK(back.blocks[i].values == field.blocks[i].values);

    std::stringstream bad("XXXX");
    CHECK_THROWS_AS(read_field(bad), Error);
}
