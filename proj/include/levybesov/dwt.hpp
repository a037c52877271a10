// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "coefficient_field.hpp"

namespace levybesov
{
/*!
 * Periodic separable Mallat transform of fine-scale father coefficients.
 *
 * `fine` holds a_{J,k} row-major with side T 2^J per axis. The result has
 * mother blocks for j = J - levels .. J - 1 plus the father block at
 * J - levels.
 */
CoefficientField dwt_forward(std::span<double const> fine,
                             int d,
                             int T,
                             int J,
                             WaveletSpec const& spec,
                             int levels);

//! Inverse of dwt_forward, used to check perfect reconstruction.
std::vector<double> dwt_inverse(CoefficientField const& field);

}  // namespace levybesov
