// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wavelet.hpp"

namespace levybesov
{
enum class Backend
{
    gaussian_exact,
    poisson_exact,
    grid_dwt,
    deterministic,  //!< Dirac and other test fields
};

std::string_view to_string(Backend b);
Backend backend_from_string(std::string_view name);

//! Coefficients of one (scale, gender) pair, row-major over k in [0, T 2^j)^d.
struct CoefficientBlock
{
    int j = 0;
    Gender gender = 0;
    std::vector<double> values;
};

/*!
 * Wavelet coefficients of one realization over a periodic window [0, T]^d.
 *
 * Blocks are ordered by scale, then gender; the father block (gender 0)
 * appears only at the coarsest scale.
 */
struct CoefficientField
{
    int d = 1;
    int T = 1;
    int coarsest_j = 0;
    int finest_j = 0;  //!< largest mother scale present
    Backend backend = Backend::deterministic;
    std::uint64_t seed = 0;
    WaveletSpec wavelet;
    std::vector<CoefficientBlock> blocks;

    std::size_t side(int j) const { return static_cast<std::size_t>(T) << j; }
    std::size_t extent(int j) const;
    CoefficientBlock const* find(int j, Gender g) const;
    CoefficientBlock* find(int j, Gender g);
    std::size_t total_count() const;
};

/*!
 * Binary dump: "LBCF", u32 version, i32 d, T, coarsest_j, finest_j,
 * backend, u64 seed, i32 wavelet order, cascade depth, u32 block count;
 * then per block i32 j, u32 gender, u64 count and count f64 values.
 * All little-endian.
 */
void write_field(std::ostream& os, CoefficientField const& field);
CoefficientField read_field(std::istream& is);

}  // namespace levybesov
