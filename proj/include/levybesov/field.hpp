// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coefficient_field.hpp"
#include "levy_model.hpp"
#include "sampler.hpp"
#include "wavelet.hpp"

namespace levybesov
{
/*!
 * Periodic window [0, T]^d resolved down to scale J.
 *
 * guard_band is the number of shifts next to each window edge, per axis,
 * dropped from statistics at every scale (0 keeps all of them).
 */
struct SimulationWindow
{
    int d = 1;
    int T = 1;
    int J = 10;
    int guard_band = 0;

    std::size_t cells_per_axis() const { return static_cast<std::size_t>(T) << J; }
    //! Throws InvalidArgument or WindowTooSmall.
    void validate(WaveletSpec const& spec) const;
};

//! Smallest scale whose window side T 2^j holds the wavelet support.
int first_unaliased_scale(WaveletSpec const& spec, int T);

bool backend_admissible(Family family, Backend backend);
//! gaussian-exact for Gaussian, poisson-exact for compound Poisson, else grid-dwt.
Backend default_backend(Family family);

/*!
 * One realization of <w, psi_{j,G,k}> for j in [0, J), with the father
 * block at scale 0.
 *
 * Random streams are derived from (seed, replicate).
 */
CoefficientField sample_coefficient_field(LevyModel const& model,
                                          SimulationWindow const& window,
                                          WaveletSpec const& spec,
                                          Backend backend,
                                          std::uint64_t seed,
                                          std::uint64_t replicate = 0);

/*!
 * Scale-0 father coefficients over k in [0, T)^d, row-major.
 *
 * Haar on the grid backend draws unit-cell integrals directly; other
 * wavelets refine `levels` scales and transform down.
 */
std::vector<double> father_coefficients(LevyModel const& model,
                                        int d,
                                        int T,
                                        WaveletSpec const& spec,
                                        Backend backend,
                                        std::uint64_t seed,
                                        std::uint64_t replicate = 0,
                                        int levels = 6);

//! Coefficients of a Dirac at x0: 2^{jd/2} psi_G(2^j x0 - k), periodized.
CoefficientField dirac_coefficient_field(WaveletSpec const& spec,
                                         SimulationWindow const& window,
                                         std::array<double, 2> x0);

//! Coefficients of sum_n a_n delta_{x_n}, periodized over the window.
CoefficientField impulse_coefficients(ImpulseField const& impulses,
                                      SimulationWindow const& window,
                                      WaveletSpec const& spec);

}  // namespace levybesov
