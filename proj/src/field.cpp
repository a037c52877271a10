// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/field.hpp"

#include <cmath>
#include <random>
#include <string>

#include "levybesov/dwt.hpp"
#include "levybesov/error.hpp"
#include "levybesov/rng.hpp"

namespace levybesov
{
void SimulationWindow::validate(WaveletSpec const& spec) const
{
    if (d != 1 && d != 2)
        raise(ErrorCode::invalid_argument, "window dimension must be 1 or 2");
    if (T < 1)
        raise(ErrorCode::invalid_argument, "window extent T must be >= 1");
    if (J < 1 || J > 30)
        raise(ErrorCode::invalid_argument, "finest scale J must be in [1, 30]");
    if (guard_band < 0)
        raise(ErrorCode::invalid_argument, "guard band must be >= 0");
    if (cells_per_axis() < static_cast<std::size_t>(spec.support_length()))
        raise(ErrorCode::window_too_small,
              "T 2^J = " + std::to_string(cells_per_axis()) + " is below the "
                  + spec.name() + " support length");
    if (2 * static_cast<std::size_t>(guard_band) >= cells_per_axis())
        raise(ErrorCode::window_too_small, "guard band covers the whole window");
    std::size_t const per_axis = cells_per_axis();
    if (d == 2 && per_axis > (std::size_t{1} << 13))
        raise(ErrorCode::invalid_argument, "2-d windows are limited to 2^13 cells per axis");
    if (d == 1 && per_axis > (std::size_t{1} << 26))
        raise(ErrorCode::invalid_argument, "1-d windows are limited to 2^26 cells");
}

int first_unaliased_scale(WaveletSpec const& spec, int T)
{
    int j = 0;
    while ((static_cast<long long>(T) << j) < spec.support_length())
        ++j;
    return j;
}

bool backend_admissible(Family family, Backend backend)
{
    switch (backend)
    {
        case Backend::gaussian_exact: return family == Family::gaussian;
        case Backend::poisson_exact: return family == Family::compound_poisson;
        case Backend::grid_dwt: return family != Family::custom_exponent;
        case Backend::deterministic: return false;
    }
    return false;
}

Backend default_backend(Family family)
{
    if (family == Family::gaussian)
        return Backend::gaussian_exact;
    if (family == Family::compound_poisson)
        return Backend::poisson_exact;
    return Backend::grid_dwt;
}

namespace
{
void check_backend(LevyModel const& model, Backend backend)
{
    if (model.family() == Family::custom_exponent && backend == Backend::grid_dwt)
        raise(ErrorCode::unsampleable_family, "custom exponents cannot be simulated");
    if (!backend_admissible(model.family(), backend))
        raise(ErrorCode::backend_family_mismatch,
              std::string(to_string(backend)) + " cannot simulate "
                  + model.describe());
}

CoefficientField empty_field(SimulationWindow const& w, WaveletSpec const& spec, Backend b)
{
    CoefficientField f;
    f.d = w.d;
    f.T = w.T;
    f.coarsest_j = 0;
    f.finest_j = w.J - 1;
    f.backend = b;
    f.wavelet = spec;
    f.blocks.push_back({0, 0u, std::vector<double>(f.extent(0), 0.0)});
    for (int j = 0; j < w.J; ++j)
        for (Gender g : genders_at(w.d, false))
            f.blocks.push_back({j, g, std::vector<double>(f.extent(j), 0.0)});
    return f;
}

struct AxisTerm
{
    std::size_t k;
    double value;
};

// Nonzero values of the periodized 2^{j/2} psi(2^j x - k) along one axis.
void axis_terms(DyadicGridFunction const& grid,
                bool mother,
                int j,
                std::size_t side,
                double x,
                std::vector<AxisTerm>& out)
{
    out.clear();
    double const lo = mother ? grid.mother_lo : grid.father_lo;
    double const hi = mother ? grid.mother_hi : grid.father_hi;
    double const y = std::ldexp(x, j);
    double const scale = std::sqrt(std::ldexp(1.0, j));
    auto const n = static_cast<long long>(side);
    auto const k_lo = static_cast<long long>(std::floor(y - hi));
    auto const k_hi = static_cast<long long>(std::ceil(y - lo));
    for (long long k = k_lo; k <= k_hi; ++k)
    {
        double const v = grid.factor_at(mother, y - static_cast<double>(k));
        if (v == 0)
            continue;
        long long kk = k % n;
        if (kk < 0)
            kk += n;
        out.push_back({static_cast<std::size_t>(kk), scale * v});
    }
}

void add_impulse(CoefficientField& field,
                 DyadicGridFunction const& grid,
                 std::array<double, 2> const& x,
                 double amplitude)
{
    std::vector<AxisTerm> axis0[2], axis1[2];
    for (auto& block : field.blocks)
    {
        std::size_t const side = field.side(block.j);
        bool const m0 = (block.gender & 1u) != 0;
        axis_terms(grid, m0, block.j, side, x[0], axis0[m0]);
        if (field.d == 1)
        {
            for (auto const& t : axis0[m0])
                block.values[t.k] += amplitude * t.value;
            continue;
        }
        bool const m1 = (block.gender & 2u) != 0;
        axis_terms(grid, m1, block.j, side, x[1], axis1[m1]);
        for (auto const& t0 : axis0[m0])
            for (auto const& t1 : axis1[m1])
                block.values[t0.k * side + t1.k] += amplitude * t0.value * t1.value;
    }
}

std::vector<double> fine_grid(LevyModel const& model,
                              int d,
                              std::size_t side,
                              int J,
                              Engine& rng)
{
    double const cell_volume = std::ldexp(1.0, -J * d);
    CellLawSampler const sampler(model, cell_volume);
    double const norm = std::sqrt(std::ldexp(1.0, J * d));
    std::size_t const count = d == 1 ? side : side * side;
    std::vector<double> fine(count);
    for (auto& a : fine)
        a = norm * sampler(rng);
    return fine;
}

}  // namespace

CoefficientField impulse_coefficients(ImpulseField const& impulses,
                                      SimulationWindow const& window,
                                      WaveletSpec const& spec)
{
    auto field = empty_field(window, spec, Backend::poisson_exact);
    auto const grid = cascade_evaluate(spec);
    auto const T = static_cast<double>(window.T);
    for (std::size_t n = 0; n < impulses.positions.size(); ++n)
    {
        auto x = impulses.positions[n];
        for (int a = 0; a < window.d; ++a)
            x[static_cast<std::size_t>(a)] = std::fmod(x[static_cast<std::size_t>(a)], T);
        add_impulse(field, grid, x, impulses.amplitudes[n]);
    }
    return field;
}

CoefficientField sample_coefficient_field(LevyModel const& model,
                                          SimulationWindow const& window,
                                          WaveletSpec const& spec,
                                          Backend backend,
                                          std::uint64_t seed,
                                          std::uint64_t replicate)
{
    window.validate(spec);
    check_backend(model, backend);
    CoefficientField field;
    switch (backend)
    {
        case Backend::gaussian_exact: {
            // orthonormal basis: i.i.d. N(0, sigma^2) at every (j, G, k)
            field = empty_field(window, spec, backend);
            auto rng = make_engine(seed, replicate, StreamRole::gaussian_coefficients);
            std::normal_distribution<double> normal(0, std::sqrt(model.params().sigma2));
            for (auto& b : field.blocks)
                for (auto& v : b.values)
                    v = normal(rng);
            break;
        }
        case Backend::poisson_exact: {
            auto rng = make_engine(seed, replicate, StreamRole::impulses);
            Box box;
            box.d = window.d;
            box.hi = {static_cast<double>(window.T), static_cast<double>(window.T)};
            auto const impulses = sample_impulse_field(model, box, rng);
            field = impulse_coefficients(impulses, window, spec);
            break;
        }
        case Backend::grid_dwt: {
            auto rng = make_engine(seed, replicate, StreamRole::cell_integrals);
            auto const fine
                = fine_grid(model, window.d, window.cells_per_axis(), window.J, rng);
            field = dwt_forward(fine, window.d, window.T, window.J, spec, window.J);
            break;
        }
        case Backend::deterministic: break;
    }
    field.seed = seed;
    return field;
}

std::vector<double> father_coefficients(LevyModel const& model,
                                        int d,
                                        int T,
                                        WaveletSpec const& spec,
                                        Backend backend,
                                        std::uint64_t seed,
                                        std::uint64_t replicate,
                                        int levels)
{
    check_backend(model, backend);
    if (backend == Backend::grid_dwt && spec.is_haar())
    {
        if ((d != 1 && d != 2) || T < 1)
            raise(ErrorCode::invalid_argument, "need d in {1,2} and T >= 1");
        auto rng = make_engine(seed, replicate, StreamRole::father_coefficients);
        CellLawSampler const sampler(model, 1.0);
        std::size_t const count = static_cast<std::size_t>(T) * (d == 2 ? T : 1);
        std::vector<double> out(count);
        for (auto& v : out)
            v = sampler(rng);
        return out;
    }
    SimulationWindow window;
    window.d = d;
    window.T = T;
    window.J = std::max(levels, first_unaliased_scale(spec, T));
    auto field = sample_coefficient_field(model, window, spec, backend, seed, replicate);
    return std::move(field.find(0, 0u)->values);
}

CoefficientField dirac_coefficient_field(WaveletSpec const& spec,
                                         SimulationWindow const& window,
                                         std::array<double, 2> x0)
{
    window.validate(spec);
    for (int a = 0; a < window.d; ++a)
    {
        double const x = x0[static_cast<std::size_t>(a)];
        if (!(x >= 0) || !(x < window.T))
            raise(ErrorCode::invalid_argument, "Dirac location must lie in the window");
    }
    auto field = empty_field(window, spec, Backend::deterministic);
    add_impulse(field, cascade_evaluate(spec), x0, 1.0);
    return field;
}

}  // namespace levybesov
