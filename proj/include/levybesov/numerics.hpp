// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace levybesov
{
//---------------------------------------------------------------------------//
// Quadrature (thin wrappers over Boost.Math with tolerance enforcement)
//---------------------------------------------------------------------------//

//! Integral over [a, b], b finite; endpoint singularities allowed.
double integrate_finite(std::function<double(double)> const& f,
                        double a,
                        double b,
                        double rel_tol = 1e-10);

//! Integral over [a, inf) of a non-oscillatory integrand.
double integrate_to_infinity(std::function<double(double)> const& f,
                             double a,
                             double rel_tol = 1e-10);

//! Integral over [0, inf) of f(t) cos(omega t) (Ooura double exponential).
double integrate_fourier_cos(std::function<double(double)> const& f,
                             double omega);

//! Integral over [0, inf) of f(t) sin(omega t).
double integrate_fourier_sin(std::function<double(double)> const& f,
                             double omega);

//---------------------------------------------------------------------------//
// Summation and statistics
//---------------------------------------------------------------------------//

//! Neumaier-compensated accumulator; addition order is the caller's.
class CompensatedSum
{
  public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0;
    double comp_ = 0;
};

struct LinearFit
{
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    double slope_se = 0;
};

//! Ordinary least squares of y on x; requires at least two points.
LinearFit fit_line(std::span<double const> x, std::span<double const> y);

double mean(std::span<double const> v);
//! Unbiased sample variance.
double variance(std::span<double const> v);

//! Empirical quantile with linear interpolation, q in [0, 1].
double quantile(std::vector<double> v, double q);

//! Survival function of the Kolmogorov distribution, P(K > x).
double kolmogorov_survival(double x);

struct KsResult
{
    double statistic = 0;
    double p_value = 1;
};

//! Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

//! Upper tail probability of a chi-square statistic.
double chi_square_survival(double statistic, double dof);

}  // namespace levybesov
