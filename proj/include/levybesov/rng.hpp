// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace levybesov
{
//! Generator used for every random stream in the library.
using Engine = std::mt19937_64;

//! Purpose of a derived stream; mixed into its seed.
enum class StreamRole : std::uint64_t
{
    cell_integrals = 0x11,
    impulses = 0x22,
    gaussian_coefficients = 0x33,
    bootstrap = 0x44,
    father_coefficients = 0x55,
    validation = 0x66,
};

//---------------------------------------------------------------------------//
/*!
 * SplitMix64 output finalizer (Steele, Lea & Flood 2014).
 */
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

//---------------------------------------------------------------------------//
/*!
 * Seed of the stream (master, replicate, role).
 *
 * Each component passes through the finalizer before being folded in, so
 * neighbouring replicate indices give unrelated seeds.
 */
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t replicate,
                                    StreamRole role) noexcept
{
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ splitmix64(replicate + 0x632be59bd9b4e019ULL));
    s = splitmix64(s ^ static_cast<std::uint64_t>(role));
    return s;
}

inline Engine make_engine(std::uint64_t master,
                          std::uint64_t replicate,
                          StreamRole role)
{
    return Engine{derive_seed(master, replicate, role)};
}

}  // namespace levybesov
