// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/coefficient_field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

#include "levybesov/error.hpp"

namespace levybesov
{
std::string_view to_string(Backend b)
{
    switch (b)
    {
        case Backend::gaussian_exact: return "gaussian-exact";
        case Backend::poisson_exact: return "poisson-exact";
        case Backend::grid_dwt: return "grid-dwt";
        case Backend::deterministic: return "deterministic";
    }
    return "unknown";
}

Backend backend_from_string(std::string_view name)
{
    for (auto b : {Backend::gaussian_exact,
                   Backend::poisson_exact,
                   Backend::grid_dwt,
                   Backend::deterministic})
    {
        if (to_string(b) == name)
            return b;
    }
    raise(ErrorCode::invalid_parameter,
          "unknown backend '" + std::string(name) + "'");
}

std::size_t CoefficientField::extent(int j) const
{
    std::size_t const s = side(j);
    return d == 1 ? s : s * s;
}

CoefficientBlock const* CoefficientField::find(int j, Gender g) const
{
    for (auto const& b : blocks)
        if (b.j == j && b.gender == g)
            return &b;
    return nullptr;
}

CoefficientBlock* CoefficientField::find(int j, Gender g)
{
    for (auto& b : blocks)
        if (b.j == j && b.gender == g)
            return &b;
    return nullptr;
}

std::size_t CoefficientField::total_count() const
{
    std::size_t n = 0;
    for (auto const& b : blocks)
        n += b.values.size();
    return n;
}

//---------------------------------------------------------------------------//
// Binary dump
//---------------------------------------------------------------------------//
namespace
{
constexpr std::array<char, 4> magic = {'L', 'B', 'C', 'F'};
constexpr std::uint32_t format_version = 1;

template<class T>
void put(std::ostream& os, T value)
{
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    os.write(bytes.data(), sizeof(T));
}

template<class T>
T get(std::istream& is)
{
    std::array<char, sizeof(T)> bytes;
    if (!is.read(bytes.data(), sizeof(T)))
        raise(ErrorCode::io_failure, "truncated coefficient dump");
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(bytes.begin(), bytes.end());
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

}  // namespace

void write_field(std::ostream& os, CoefficientField const& field)
{
    os.write(magic.data(), magic.size());
    put<std::uint32_t>(os, format_version);
    put<std::int32_t>(os, field.d);
    put<std::int32_t>(os, field.T);
    put<std::int32_t>(os, field.coarsest_j);
    put<std::int32_t>(os, field.finest_j);
    put<std::int32_t>(os, static_cast<std::int32_t>(field.backend));
    put<std::uint64_t>(os, field.seed);
    put<std::int32_t>(os, field.wavelet.order);
    put<std::int32_t>(os, field.wavelet.cascade_depth);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(field.blocks.size()));
    for (auto const& b : field.blocks)
    {
        put<std::int32_t>(os, b.j);
        put<std::uint32_t>(os, b.gender);
        put<std::uint64_t>(os, b.values.size());
        for (double v : b.values)
            put<double>(os, v);
    }
    if (!os)
        raise(ErrorCode::io_failure, "failed writing coefficient dump");
}

CoefficientField read_field(std::istream& is)
{
    std::array<char, 4> head{};
    if (!is.read(head.data(), head.size()) || head != magic)
        raise(ErrorCode::io_failure, "not a coefficient dump");
    if (get<std::uint32_t>(is) != format_version)
        raise(ErrorCode::io_failure, "unsupported dump version");
    CoefficientField field;
    field.d = get<std::int32_t>(is);
    field.T = get<std::int32_t>(is);
    field.coarsest_j = get<std::int32_t>(is);
    field.finest_j = get<std::int32_t>(is);
    auto const backend = get<std::int32_t>(is);
    if (backend < 0 || backend > static_cast<int>(Backend::deterministic))
        raise(ErrorCode::io_failure, "bad backend tag in dump");
    field.backend = static_cast<Backend>(backend);
    field.seed = get<std::uint64_t>(is);
    field.wavelet.order = get<std::int32_t>(is);
    field.wavelet.cascade_depth = get<std::int32_t>(is);
    auto const nblocks = get<std::uint32_t>(is);
    for (std::uint32_t i = 0; i < nblocks; ++i)
    {
        CoefficientBlock b;
        b.j = get<std::int32_t>(is);
        b.gender = get<std::uint32_t>(is);
        auto const count = get<std::uint64_t>(is);
        if (count > (std::uint64_t{1} << 34))
            raise(ErrorCode::io_failure, "implausible block size in dump");
        b.values.resize(count);
        for (auto& v : b.values)
            v = get<double>(is);
        field.blocks.push_back(std::move(b));
    }
    return field;
}

}  // namespace levybesov
