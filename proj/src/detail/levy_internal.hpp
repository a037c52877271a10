// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "levybesov/levy_model.hpp"

namespace levybesov::detail
{
//! Re int_y^inf e^{iu} u^-a du by its asymptotic series, y >= 32.
double cosine_tail_asymptotic(double a, double y);
//! int_0^y (cos u - 1) u^-(alpha+1) du
double gap_head(double alpha, double y);
//! int_y^inf (cos u - 1) u^-(alpha+1) du
double gap_tail(double alpha, double y);
double gap_between(double alpha, double lo, double hi);

//! log2(2^a + 2^b) without overflow.
double log2_add(double a, double b);

//! Contribution of one symmetric power-law piece to Psi(xi).
double psi_piece(PowerLawPiece const& piece, double xi);

//! log2 of |lacunary Farkas series| at a possibly huge frequency.
double farkas_log2_abs(double beta2, int M, Frequency xi);

}  // namespace levybesov::detail
