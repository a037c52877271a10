// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace levybesov
{
//! Daubechies wavelet of order N (N vanishing moments); order 1 is Haar.
struct WaveletSpec
{
    int order = 1;
    int cascade_depth = 12;

    static WaveletSpec haar() { return {1, 12}; }
    static WaveletSpec daubechies(int n, int depth = 12) { return {n, depth}; }

    bool is_haar() const { return order == 1; }
    std::string name() const;
    //! Support length of the father wavelet, 2N - 1.
    int support_length() const { return 2 * order - 1; }
    //! Hoelder regularity of the Daubechies wavelet (0 for Haar).
    double regularity() const;
};

/*!
 * Regularity needed to characterize B_p^tau: r > max(tau, d (1/p - 1)_+ - tau).
 */
double required_regularity(double tau, double p, int d);

//! Parse "haar" or "db<N>"/"daubechies<N>".
WaveletSpec wavelet_from_name(std::string const& name, int depth = 12);

/*!
 * Two-scale filters.
 *
 * lowpass[i] is h_i for i in [0, 2N); highpass[i] is g_k with
 * k = i + highpass_offset, g_k = (-1)^k h_{1-k}.
 */
struct FilterPair
{
    std::vector<double> lowpass;
    std::vector<double> highpass;
    int highpass_offset = 0;

    std::size_t taps() const { return lowpass.size(); }
    double g(int k) const;
};

//! Throws UnsupportedOrder outside 1..10.
FilterPair build_filters(WaveletSpec const& spec);

//! max_m |sum_k h_k h_{k+2m} - delta_m|, including the highpass and the
//! cross terms between the two filters.
double orthonormality_residual(FilterPair const& f);

//! Father and mother wavelets sampled on 2^-L Z over their supports.
struct DyadicGridFunction
{
    int depth = 0;
    bool haar = false;  //!< evaluated in closed form, not snapped
    int father_lo = 0;  //!< father supported on [father_lo, father_hi]
    int father_hi = 1;
    int mother_lo = 0;
    int mother_hi = 1;
    std::vector<double> father;  //!< father[i] = phi(father_lo + i 2^-L)
    std::vector<double> mother;

    double step() const;
    //! Value at the nearest grid point (exact for Haar); zero off the support.
    double father_at(double x) const;
    double mother_at(double x) const;
    //! psi_F or psi_M selected by gender bit.
    double factor_at(bool is_mother, double x) const
    {
        return is_mother ? mother_at(x) : father_at(x);
    }
};

/*!
 * Cascade evaluation: integer values from the eigenvector of the two-scale
 * matrix (power iteration), then dyadic refinement down to 2^-L.
 */
DyadicGridFunction cascade_evaluate(WaveletSpec const& spec);

//---------------------------------------------------------------------------//
// Genders: bit i set means a mother factor along axis i.
//---------------------------------------------------------------------------//

using Gender = unsigned;

//! Genders at a scale: all 2^d at the coarsest (father) scale, else no F^d.
std::vector<Gender> genders_at(int d, bool with_father);
std::string gender_name(Gender g, int d);

inline constexpr Gender mother_all(int d)
{
    return (1u << d) - 1;
}

}  // namespace levybesov
