// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/wavelet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include <boost/math/filters/daubechies.hpp>

#include "levybesov/error.hpp"

namespace levybesov
{
std::string WaveletSpec::name() const
{
    return is_haar() ? "haar" : "db" + std::to_string(order);
}

double WaveletSpec::regularity() const
{
    // Hoelder exponents of the extremal-phase Daubechies wavelets, N = 1..10
    static constexpr double table[] = {
        0.0, 0.5500, 1.0878, 1.6179, 1.9690, 2.1891, 2.4604, 2.7608, 3.0736, 3.3614};
    if (order < 1 || order > 10)
        raise(ErrorCode::unsupported_order, "Daubechies order must be in 1..10");
    return table[order - 1];
}

double required_regularity(double tau, double p, int d)
{
    return std::max(tau, d * std::max(1 / p - 1, 0.0) - tau);
}

WaveletSpec wavelet_from_name(std::string const& name, int depth)
{
    if (name == "haar" || name == "Haar")
        return WaveletSpec{1, depth};
    for (std::string prefix : {"db", "daubechies", "Daubechies"})
    {
        if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size())
        {
            std::size_t used = 0;
            int const n = std::stoi(name.substr(prefix.size()), &used);
            if (used + prefix.size() == name.size())
                return WaveletSpec{n, depth};
        }
    }
    raise(ErrorCode::invalid_parameter, "unknown wavelet '" + name + "'");
}

double FilterPair::g(int k) const
{
    int const i = k - highpass_offset;
    if (i < 0 || i >= static_cast<int>(highpass.size()))
        return 0;
    return highpass[static_cast<std::size_t>(i)];
}

namespace
{
template<unsigned N>
std::vector<double> scaling_filter()
{
    auto const h = boost::math::filters::daubechies_scaling_filter<double, N>();
    return {h.begin(), h.end()};
}

std::vector<double> lowpass_for(int order)
{
    switch (order)
    {
        case 1: return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
        case 2: return scaling_filter<2>();
        case 3: return scaling_filter<3>();
        case 4: return scaling_filter<4>();
        case 5: return scaling_filter<5>();
        case 6: return scaling_filter<6>();
        case 7: return scaling_filter<7>();
        case 8: return scaling_filter<8>();
        case 9: return scaling_filter<9>();
        case 10: return scaling_filter<10>();
        default: break;
    }
    raise(ErrorCode::unsupported_order,
          "wavelet order " + std::to_string(order) + " outside 1..10");
}

}  // namespace

FilterPair build_filters(WaveletSpec const& spec)
{
    FilterPair f;
    f.lowpass = lowpass_for(spec.order);
    int const taps = static_cast<int>(f.lowpass.size());
    // g_k = (-1)^k h_{1-k}, nonzero for k in [2 - taps, 1]
    f.highpass_offset = 2 - taps;
    f.highpass.resize(f.lowpass.size());
    for (int i = 0; i < taps; ++i)
    {
        int const k = i + f.highpass_offset;
        double const sign = (k % 2 == 0) ? 1.0 : -1.0;
        f.highpass[static_cast<std::size_t>(i)]
            = sign * f.lowpass[static_cast<std::size_t>(1 - k)];
    }
    return f;
}

double orthonormality_residual(FilterPair const& f)
{
    int const taps = static_cast<int>(f.taps());
    auto h = [&](int k) {
        return (k >= 0 && k < taps) ? f.lowpass[static_cast<std::size_t>(k)] : 0.0;
    };
    double worst = 0;
    for (int m = -taps; m <= taps; ++m)
    {
        double hh = 0, gg = 0, hg = 0;
        for (int k = -2 * taps; k <= 2 * taps; ++k)
        {
            hh += h(k) * h(k + 2 * m);
            gg += f.g(k) * f.g(k + 2 * m);
            hg += h(k) * f.g(k + 2 * m);
        }
        double const delta = m == 0 ? 1.0 : 0.0;
        worst = std::max({worst,
                          std::abs(hh - delta),
                          std::abs(gg - delta),
                          std::abs(hg)});
    }
    return worst;
}

//---------------------------------------------------------------------------//
// Cascade
//---------------------------------------------------------------------------//

double DyadicGridFunction::step() const
{
    return std::ldexp(1.0, -depth);
}

namespace
{
double grid_value(std::vector<double> const& v, int lo, int depth, double x)
{
    double const pos = std::ldexp(x - lo, depth);
    if (!(pos >= -0.5) || pos > static_cast<double>(v.size()) - 0.5)
        return 0;
    auto const i = static_cast<std::size_t>(std::llround(pos));
    return i < v.size() ? v[i] : 0.0;
}

}  // namespace

double DyadicGridFunction::father_at(double x) const
{
    if (haar)
        return (x >= 0 && x < 1) ? 1.0 : 0.0;
    return grid_value(father, father_lo, depth, x);
}

double DyadicGridFunction::mother_at(double x) const
{
    if (haar)
        return (x >= 0 && x < 1) ? (x < 0.5 ? 1.0 : -1.0) : 0.0;
    return grid_value(mother, mother_lo, depth, x);
}

DyadicGridFunction cascade_evaluate(WaveletSpec const& spec)
{
    if (spec.cascade_depth < 4 || spec.cascade_depth > 16)
        raise(ErrorCode::invalid_argument, "cascade depth must be in [4, 16]");
    auto const filters = build_filters(spec);
    int const L = spec.cascade_depth;
    int const n = spec.order;
    int const top = 2 * n - 1;  // father support [0, 2N - 1]
    std::size_t const per_unit = std::size_t{1} << L;

    DyadicGridFunction out;
    out.depth = L;
    out.father_lo = 0;
    out.father_hi = top;
    out.mother_lo = 1 - n;
    out.mother_hi = n;
    out.father.assign(static_cast<std::size_t>(top) * per_unit + 1, 0.0);
    out.mother.assign(static_cast<std::size_t>(2 * n - 1) * per_unit + 1, 0.0);

    if (spec.is_haar())
    {
        out.haar = true;
        for (std::size_t i = 0; i < per_unit; ++i)
        {
            out.father[i] = 1;
            out.mother[i] = i < per_unit / 2 ? 1 : -1;
        }
        return out;
    }

    double const sqrt2 = std::numbers::sqrt2;
    auto const& h = filters.lowpass;
    int const taps = static_cast<int>(h.size());

    // Integer values: fixed point of v_n = sqrt2 sum_k h_k v_{2n-k}.
    std::vector<double> v(static_cast<std::size_t>(top) + 1, 0.0);
    for (int i = 1; i < top; ++i)
        v[static_cast<std::size_t>(i)] = 1.0 / (top - 1);
    double change = 1;
    int iter = 0;
    for (; iter < 60 && change > 1e-10; ++iter)
    {
        std::vector<double> next(v.size(), 0.0);
        for (int i = 1; i < top; ++i)
        {
            double acc = 0;
            for (int k = 0; k < taps; ++k)
            {
                int const m = 2 * i - k;
                if (m > 0 && m < top)
                    acc += h[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(m)];
            }
            next[static_cast<std::size_t>(i)] = sqrt2 * acc;
        }
        double sum = 0;
        for (double x : next)
            sum += x;
        change = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            next[i] /= sum;
            change = std::max(change, std::abs(next[i] - v[i]));
        }
        v = std::move(next);
    }
    if (change > 1e-10)
        raise(ErrorCode::non_convergence,
              "cascade did not converge for " + spec.name());

    // Dyadic refinement: values at odd multiples of 2^-l from level l - 1.
    auto& phi = out.father;
    for (int i = 0; i <= top; ++i)
        phi[static_cast<std::size_t>(i) * per_unit] = v[static_cast<std::size_t>(i)];
    for (int level = 1; level <= L; ++level)
    {
        std::size_t const stride = per_unit >> level;  // grid step at this level
        for (std::size_t idx = stride; idx < phi.size(); idx += 2 * stride)
        {
            // x = idx / per_unit; phi(x) = sqrt2 sum h_k phi(2x - k)
            double acc = 0;
            for (int k = 0; k < taps; ++k)
            {
                long long const arg = 2 * static_cast<long long>(idx)
                                      - static_cast<long long>(k) * static_cast<long long>(per_unit);
                if (arg >= 0 && arg < static_cast<long long>(phi.size()))
                    acc += h[static_cast<std::size_t>(k)] * phi[static_cast<std::size_t>(arg)];
            }
            phi[idx] = sqrt2 * acc;
        }
    }

    // psi(x) = sqrt2 sum_k g_k phi(2x - k), x from 1 - N.
    for (std::size_t idx = 0; idx < out.mother.size(); ++idx)
    {
        // 2x - k in grid units: 2 (idx + (1 - N) per_unit) - k per_unit
        long long const base = 2 * (static_cast<long long>(idx)
                                    + static_cast<long long>(1 - n)
                                          * static_cast<long long>(per_unit));
        double acc = 0;
        for (int i = 0; i < taps; ++i)
        {
            int const k = i + filters.highpass_offset;
            long long const arg = base - static_cast<long long>(k) * static_cast<long long>(per_unit);
            if (arg >= 0 && arg < static_cast<long long>(phi.size()))
                acc += filters.highpass[static_cast<std::size_t>(i)]
                       * phi[static_cast<std::size_t>(arg)];
        }
        out.mother[idx] = sqrt2 * acc;
    }
    return out;
}

//---------------------------------------------------------------------------//
// Genders
//---------------------------------------------------------------------------//

std::vector<Gender> genders_at(int d, bool with_father)
{
    std::vector<Gender> out;
    for (Gender g = with_father ? 0u : 1u; g < (1u << d); ++g)
        out.push_back(g);
    return out;
}

std::string gender_name(Gender g, int d)
{
    std::string s;
    for (int i = 0; i < d; ++i)
        s += (g >> i) & 1u ? 'M' : 'F';
    return s;
}

}  // namespace levybesov
