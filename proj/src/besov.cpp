// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/besov.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "levybesov/error.hpp"
#include "levybesov/numerics.hpp"

namespace levybesov
{
namespace
{
constexpr double slope_dead_zone = 0.2;

// Visits every retained (k, c) of a block; `weight2` is |2^-j k|^2.
template<class F>
void for_each_term(CoefficientField const& field,
                   CoefficientBlock const& block,
                   int guard_band,
                   F&& visit)
{
    std::size_t const side = field.side(block.j);
    auto const g = static_cast<std::size_t>(guard_band);
    if (2 * g >= side)
        return;
    double const inv = std::ldexp(1.0, -block.j);
    if (field.d == 1)
    {
        for (std::size_t k = g; k < side - g; ++k)
        {
            double const x = static_cast<double>(k) * inv;
            visit(x * x, block.values[k]);
        }
        return;
    }
    for (std::size_t k0 = g; k0 < side - g; ++k0)
    {
        double const x0 = static_cast<double>(k0) * inv;
        for (std::size_t k1 = g; k1 < side - g; ++k1)
        {
            double const x1 = static_cast<double>(k1) * inv;
            visit(x0 * x0 + x1 * x1, block.values[k0 * side + k1]);
        }
    }
}

}  // namespace

void BesovParams::validate() const
{
    if (!(p > 0))
        raise(ErrorCode::invalid_parameter, "Besov p must be > 0");
    if (!std::isfinite(tau) || !std::isfinite(rho))
        raise(ErrorCode::invalid_parameter, "Besov tau and rho must be finite");
    if (d != 1 && d != 2)
        raise(ErrorCode::invalid_parameter, "Besov dimension must be 1 or 2");
}

double ScaleContribution::log2_T() const
{
    return T_j > 0 ? std::log2(T_j) : -std::numeric_limits<double>::infinity();
}

std::vector<ScaleContribution> per_scale_contributions(CoefficientField const& field,
                                                       BesovParams const& params,
                                                       int guard_band)
{
    params.validate();
    if (params.p_infinite())
        raise(ErrorCode::invalid_parameter, "per-scale terms need finite p");
    if (params.d != field.d)
        raise(ErrorCode::shape_mismatch, "Besov dimension differs from the field");
    double const p = params.p;
    double const d = field.d;
    double const half_rho_p = params.rho * p / 2;

    // scale-major, then gender, then row-major k
    std::map<int, std::vector<CoefficientBlock const*>> by_scale;
    for (auto const& b : field.blocks)
        by_scale[b.j].push_back(&b);

    std::vector<ScaleContribution> out;
    for (auto& [j, blocks] : by_scale)
    {
        std::sort(blocks.begin(), blocks.end(), [](auto* a, auto* b) {
            return a->gender < b->gender;
        });
        CompensatedSum sum;
        ScaleContribution sc;
        sc.j = j;
        sc.gender_count = blocks.size();
        for (auto const* b : blocks)
        {
            for_each_term(field, *b, guard_band, [&](double r2, double c) {
                double const weight = half_rho_p == 0 ? 1.0 : std::pow(1 + r2, half_rho_p);
                sum.add(weight * std::pow(std::abs(c), p));
                ++sc.term_count;
            });
        }
        sc.T_j = std::exp2(j * (params.tau * p - d + d * p / 2)) * sum.value();
        out.push_back(sc);
    }
    return out;
}

double weighted_partial_norm(CoefficientField const& field,
                             BesovParams const& params,
                             int J_cut,
                             int guard_band)
{
    params.validate();
    if (field.blocks.empty())
        return 0;
    if (J_cut > field.finest_j)
        raise(ErrorCode::invalid_argument, "J_cut exceeds the finest scale of the field");
    if (params.p_infinite())
    {
        double best = 0;
        double const half_rho = params.rho / 2;
        for (auto const& b : field.blocks)
        {
            if (b.j > J_cut)
                continue;
            double const scale = std::exp2(b.j * (params.tau + field.d / 2.0));
            for_each_term(field, b, guard_band, [&](double r2, double c) {
                best = std::max(best, scale * std::pow(1 + r2, half_rho) * std::abs(c));
            });
        }
        return best;
    }
    CompensatedSum total;
    for (auto const& sc : per_scale_contributions(field, params, guard_band))
        if (sc.j <= J_cut)
            total.add(sc.T_j);
    return std::pow(total.value(), 1 / params.p);
}

std::string_view to_string(SeriesVerdict v)
{
    switch (v)
    {
        case SeriesVerdict::convergent: return "convergent";
        case SeriesVerdict::divergent: return "divergent";
        case SeriesVerdict::undecided: return "undecided";
    }
    return "undecided";
}

SeriesClassification classify_series(std::span<ScaleContribution const> terms, int tail)
{
    std::vector<double> js, logs;
    for (auto it = terms.rbegin(); it != terms.rend() && static_cast<int>(js.size()) < tail;
         ++it)
    {
        if (it->T_j > 0 && std::isfinite(it->T_j))
        {
            js.push_back(it->j);
            logs.push_back(std::log2(it->T_j));
        }
    }
    SeriesClassification out;
    out.scales_used = static_cast<int>(js.size());
    if (js.size() < 2)
        return out;
    out.slope = fit_line(js, logs).slope;
    if (out.slope <= -slope_dead_zone)
        out.verdict = SeriesVerdict::convergent;
    else if (out.slope >= slope_dead_zone)
        out.verdict = SeriesVerdict::divergent;
    return out;
}

}  // namespace levybesov
