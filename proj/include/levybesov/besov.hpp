// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "coefficient_field.hpp"

namespace levybesov
{
//! Weighted Besov space B_p^tau(R^d; rho); p may be infinite.
struct BesovParams
{
    static constexpr double infinity = std::numeric_limits<double>::infinity();

    double p = 2;
    double tau = 0;
    double rho = 0;
    int d = 1;

    bool p_infinite() const { return p == infinity; }
    //! Throws InvalidParameter unless p > 0 and tau, rho finite.
    void validate() const;
};

//! T_j: the scale-j term of the p-th power of the norm.
struct ScaleContribution
{
    int j = 0;
    std::size_t gender_count = 0;
    std::size_t term_count = 0;
    double T_j = 0;

    double log2_T() const;
};

/*!
 * Per-scale terms
 * T_j = 2^{j(tau p - d + dp/2)} sum_G sum_k <2^-j k>^{rho p} |c_{j,G,k}|^p.
 *
 * Shifts within `guard_band` of either window edge along any axis are
 * skipped. Requires p < infinity.
 */
std::vector<ScaleContribution> per_scale_contributions(CoefficientField const& field,
                                                       BesovParams const& params,
                                                       int guard_band = 0);

/*!
 * (sum_{j <= J_cut} T_j)^{1/p}, or for p = infinity the supremum of
 * 2^{j(tau + d/2)} <2^-j k>^rho |c| over j <= J_cut.
 */
double weighted_partial_norm(CoefficientField const& field,
                             BesovParams const& params,
                             int J_cut,
                             int guard_band = 0);

enum class SeriesVerdict
{
    convergent,
    divergent,
    undecided,
};

std::string_view to_string(SeriesVerdict v);

struct SeriesClassification
{
    SeriesVerdict verdict = SeriesVerdict::undecided;
    double slope = 0;  //!< OLS slope of log2 T_j over the tail
    int scales_used = 0;
};

/*!
 * Tail slope of log2 T_j over the last `tail` scales: <= -0.2 convergent,
 * >= 0.2 divergent, otherwise undecided. Scales with T_j = 0 are skipped.
 */
SeriesClassification classify_series(std::span<ScaleContribution const> terms,
                                     int tail = 5);

}  // namespace levybesov
