// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "levy_model.hpp"
#include "rng.hpp"

namespace levybesov
{
/*!
 * Draws cell integrals <w, 1_A> with Leb(A) = t, i.e. the infinitely
 * divisible law with characteristic function exp(t Psi).
 */
class CellLawSampler
{
  public:
    //! Throws UnsampleableFamily for custom exponents.
    CellLawSampler(LevyModel model, double t);

    double operator()(Engine& rng) const;

    LevyModel const& model() const noexcept { return model_; }
    double volume() const noexcept { return t_; }
    //! Small-jump truncation level of the shot-noise part (0 if unused).
    double truncation() const noexcept { return eps_; }

  private:
    struct FarkasAtom
    {
        double size = 0;  //!< jump magnitude 2^-M^k
        double half_rate = 0;  //!< t c_k / 2 per sign, or 0 when Gaussian
        double gaussian_var = 0;  //!< used when the Poisson mean is huge
    };

    double small_jumps(double alpha, Engine& rng) const;

    LevyModel model_;
    double t_;
    double eps_ = 0;
    double small_rate_ = 0;  //!< Poisson mean of jumps in (eps, 1]
    double compensation_var_ = 0;
    std::vector<FarkasAtom> atoms_;
};

double sample_cell_integral(CellLawSampler const& sampler, Engine& rng);

//! Symmetric alpha-stable draw with Psi = -|xi|^alpha (Chambers-Mallows-Stuck).
double sample_standard_stable(double alpha, Engine& rng);

//---------------------------------------------------------------------------//
// Impulse fields
//---------------------------------------------------------------------------//

struct Box
{
    int d = 1;
    std::array<double, 2> lo{0, 0};
    std::array<double, 2> hi{1, 1};

    double volume() const;
};

struct ImpulseField
{
    Box box;
    double rate = 0;
    std::vector<std::array<double, 2>> positions;
    std::vector<double> amplitudes;
};

//! Poisson(lambda Leb(box)) impulses with uniform positions; compound Poisson only.
ImpulseField sample_impulse_field(LevyModel const& model, Box const& box, Engine& rng);

//---------------------------------------------------------------------------//
// Characteristic-function validation
//---------------------------------------------------------------------------//

struct CfValidation
{
    std::size_t n = 0;
    std::vector<double> xi_grid;
    std::vector<double> deviation;
    double sup_deviation = 0;
    double threshold = 0;  //!< 5 / sqrt(n)
    bool passed = false;
};

//! 16 frequencies spread over the range where exp(t Psi) is informative.
std::vector<double> default_cf_grid(LevyModel const& model, double t);

//! Empirical CF of `samples` against exp(t_reference Psi).
CfValidation compare_empirical_cf(std::span<double const> samples,
                                  LevyModel const& model,
                                  double t_reference,
                                  std::span<double const> xi_grid);

//! Draw n samples and compare with the sampler's own CF; requires n >= 1e4.
CfValidation validate_sampler_cf(CellLawSampler const& sampler,
                                 std::size_t n,
                                 std::span<double const> xi_grid,
                                 Engine& rng);

}  // namespace levybesov
