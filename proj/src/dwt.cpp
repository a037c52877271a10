// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/dwt.hpp"

#include <string>

#include "levybesov/error.hpp"

namespace levybesov
{
namespace
{
// One periodic analysis step along `axis` of a row-major cube of side n.
// Output has side n/2 along that axis.
std::vector<double> analyze_axis(std::vector<double> const& in,
                                 int d,
                                 std::size_t n_axis,
                                 std::size_t n_other,
                                 int axis,
                                 FilterPair const& f,
                                 bool highpass)
{
    // Layout: d == 1 -> [n_axis]; d == 2 -> axis 0 is rows, axis 1 columns.
    std::size_t const half = n_axis / 2;
    int const taps = static_cast<int>(f.taps());
    auto const& coeffs = highpass ? f.highpass : f.lowpass;
    int const offset = highpass ? f.highpass_offset : 0;
    auto const n = static_cast<long long>(n_axis);

    auto wrap = [n](long long i) {
        i %= n;
        return static_cast<std::size_t>(i < 0 ? i + n : i);
    };

    std::vector<double> out;
    if (d == 1)
    {
        out.assign(half, 0.0);
        for (std::size_t k = 0; k < half; ++k)
        {
            double acc = 0;
            for (int i = 0; i < taps; ++i)
                acc += coeffs[static_cast<std::size_t>(i)]
                       * in[wrap(2 * static_cast<long long>(k) + i + offset)];
            out[k] = acc;
        }
        return out;
    }
    if (axis == 1)
    {
        // rows stay, columns halve: in is n_other x n_axis
        out.assign(n_other * half, 0.0);
        for (std::size_t r = 0; r < n_other; ++r)
        {
            double const* row = in.data() + r * n_axis;
            for (std::size_t k = 0; k < half; ++k)
            {
                double acc = 0;
                for (int i = 0; i < taps; ++i)
                    acc += coeffs[static_cast<std::size_t>(i)]
                           * row[wrap(2 * static_cast<long long>(k) + i + offset)];
                out[r * half + k] = acc;
            }
        }
        return out;
    }
    // axis 0: in is n_axis x n_other
    out.assign(half * n_other, 0.0);
    for (std::size_t k = 0; k < half; ++k)
    {
        for (int i = 0; i < taps; ++i)
        {
            double const c = coeffs[static_cast<std::size_t>(i)];
            double const* row
                = in.data() + wrap(2 * static_cast<long long>(k) + i + offset) * n_other;
            double* dst = out.data() + k * n_other;
            for (std::size_t col = 0; col < n_other; ++col)
                dst[col] += c * row[col];
        }
    }
    return out;
}

// Synthesis step: adjoint of analyze_axis for one filter, accumulated.
void synthesize_axis(std::vector<double> const& in,
                     std::vector<double>& out,
                     int d,
                     std::size_t n_axis,
                     std::size_t n_other,
                     int axis,
                     FilterPair const& f,
                     bool highpass)
{
    std::size_t const half = n_axis / 2;
    int const taps = static_cast<int>(f.taps());
    auto const& coeffs = highpass ? f.highpass : f.lowpass;
    int const offset = highpass ? f.highpass_offset : 0;
    auto const n = static_cast<long long>(n_axis);
    auto wrap = [n](long long i) {
        i %= n;
        return static_cast<std::size_t>(i < 0 ? i + n : i);
    };
    if (d == 1)
    {
        for (std::size_t k = 0; k < half; ++k)
            for (int i = 0; i < taps; ++i)
                out[wrap(2 * static_cast<long long>(k) + i + offset)]
                    += coeffs[static_cast<std::size_t>(i)] * in[k];
        return;
    }
    if (axis == 1)
    {
        for (std::size_t r = 0; r < n_other; ++r)
            for (std::size_t k = 0; k < half; ++k)
                for (int i = 0; i < taps; ++i)
                    out[r * n_axis + wrap(2 * static_cast<long long>(k) + i + offset)]
                        += coeffs[static_cast<std::size_t>(i)] * in[r * half + k];
        return;
    }
    for (std::size_t k = 0; k < half; ++k)
        for (int i = 0; i < taps; ++i)
        {
            std::size_t const dst = wrap(2 * static_cast<long long>(k) + i + offset);
            for (std::size_t col = 0; col < n_other; ++col)
                out[dst * n_other + col]
                    += coeffs[static_cast<std::size_t>(i)] * in[k * n_other + col];
        }
}

}  // namespace

CoefficientField dwt_forward(std::span<double const> fine,
                             int d,
                             int T,
                             int J,
                             WaveletSpec const& spec,
                             int levels)
{
    if (d != 1 && d != 2)
        raise(ErrorCode::shape_mismatch, "dimension must be 1 or 2");
    if (T < 1 || J < 0 || levels < 0 || levels > J)
        raise(ErrorCode::shape_mismatch, "need T >= 1 and 0 <= levels <= J");
    std::size_t const side = static_cast<std::size_t>(T) << J;
    std::size_t const expected = d == 1 ? side : side * side;
    if (fine.size() != expected)
        raise(ErrorCode::shape_mismatch,
              "input has " + std::to_string(fine.size()) + " values, expected "
                  + std::to_string(expected));

    auto const filters = build_filters(spec);
    CoefficientField field;
    field.d = d;
    field.T = T;
    field.coarsest_j = J - levels;
    field.finest_j = J - 1;
    field.backend = Backend::grid_dwt;
    field.wavelet = spec;

    std::vector<double> approx(fine.begin(), fine.end());
    std::size_t n = side;
    // Collected finest first, emitted coarsest first.
    std::vector<std::vector<CoefficientBlock>> per_level;
    for (int level = 0; level < levels; ++level)
    {
        int const j = J - 1 - level;
        std::vector<CoefficientBlock> blocks;
        if (d == 1)
        {
            auto lo = analyze_axis(approx, 1, n, 1, 0, filters, false);
            auto hi = analyze_axis(approx, 1, n, 1, 0, filters, true);
            blocks.push_back({j, 1u, std::move(hi)});
            approx = std::move(lo);
        }
        else
        {
            // axis 1 (columns) first, then axis 0 (rows)
            auto lo1 = analyze_axis(approx, 2, n, n, 1, filters, false);
            auto hi1 = analyze_axis(approx, 2, n, n, 1, filters, true);
            auto ff = analyze_axis(lo1, 2, n, n / 2, 0, filters, false);
            auto mf = analyze_axis(lo1, 2, n, n / 2, 0, filters, true);
            auto fm = analyze_axis(hi1, 2, n, n / 2, 0, filters, false);
            auto mm = analyze_axis(hi1, 2, n, n / 2, 0, filters, true);
            // bit 0: axis 0 mother, bit 1: axis 1 mother
            blocks.push_back({j, 1u, std::move(mf)});
            blocks.push_back({j, 2u, std::move(fm)});
            blocks.push_back({j, 3u, std::move(mm)});
            approx = std::move(ff);
        }
        per_level.push_back(std::move(blocks));
        n /= 2;
    }
    field.blocks.push_back({J - levels, 0u, std::move(approx)});
    for (auto it = per_level.rbegin(); it != per_level.rend(); ++it)
        for (auto& b : *it)
            field.blocks.push_back(std::move(b));
    return field;
}

std::vector<double> dwt_inverse(CoefficientField const& field)
{
    auto const filters = build_filters(field.wavelet);
    auto const* father = field.find(field.coarsest_j, 0u);
    if (!father)
        raise(ErrorCode::shape_mismatch, "field has no father block");
    std::vector<double> approx = father->values;
    int const d = field.d;
    for (int j = field.coarsest_j; j <= field.finest_j; ++j)
    {
        std::size_t const n = field.side(j + 1);
        if (d == 1)
        {
            auto const* m = field.find(j, 1u);
            if (!m)
                raise(ErrorCode::shape_mismatch, "missing mother block");
            std::vector<double> next(n, 0.0);
            synthesize_axis(approx, next, 1, n, 1, 0, filters, false);
            synthesize_axis(m->values, next, 1, n, 1, 0, filters, true);
            approx = std::move(next);
        }
        else
        {
            auto const* mf = field.find(j, 1u);
            auto const* fm = field.find(j, 2u);
            auto const* mm = field.find(j, 3u);
            if (!mf || !fm || !mm)
                raise(ErrorCode::shape_mismatch, "missing mother block");
            std::vector<double> lo1(n * (n / 2), 0.0);
            std::vector<double> hi1(n * (n / 2), 0.0);
            synthesize_axis(approx, lo1, 2, n, n / 2, 0, filters, false);
            synthesize_axis(mf->values, lo1, 2, n, n / 2, 0, filters, true);
            synthesize_axis(fm->values, hi1, 2, n, n / 2, 0, filters, false);
            synthesize_axis(mm->values, hi1, 2, n, n / 2, 0, filters, true);
            std::vector<double> next(n * n, 0.0);
            synthesize_axis(lo1, next, 2, n, n, 1, filters, false);
            synthesize_axis(hi1, next, 2, n, n, 1, filters, true);
            approx = std::move(next);
        }
    }
    return approx;
}

}  // namespace levybesov
