// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "besov.hpp"
#include "field.hpp"
#include "levy_model.hpp"

namespace levybesov
{
//! Simulation design shared by the moment and smoothness estimators.
struct StudySetup
{
    LevyModel model = LevyModel::gaussian();
    WaveletSpec wavelet = WaveletSpec::haar();
    Backend backend = Backend::gaussian_exact;
    SimulationWindow window;
    int j_lo = 4;
    int j_hi = -1;  //!< -1: J - 1 for exact coefficients, J - 4 otherwise
    int replicates = 100;
    int bootstrap = 200;
    std::uint64_t seed = 1;
    int threads = 1;

    //! Regression range after resolving the default upper end.
    std::pair<int, int> j_range() const;
};

struct RegressionResult
{
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
    int j_lo = 0;
    int j_hi = 0;
    double stderr_slope = 0;  //!< bootstrap spread over replicates
    double ci_lo = 0;  //!< 95% percentile interval of the slope
    double ci_hi = 0;
    int replicates = 0;
    std::vector<int> js;
    std::vector<double> values;  //!< replicate mean of the statistic per j
    std::vector<double> value_stderr;
};

/*!
 * Per-replicate scale statistics for a set of p.
 *
 * mean_abs_p[i][j] averages |<w, psi_{j,M^d,k}>|^p over k;
 * T[i][j] is the Besov scale term at (tau_ref, rho). Indexed by p, then j.
 */
struct ReplicateStats
{
    std::vector<std::vector<double>> mean_abs_p;
    std::vector<std::vector<double>> T;
};

std::vector<ReplicateStats> collect_replicates(StudySetup const& setup,
                                               std::span<double const> ps,
                                               double tau_ref,
                                               double rho);

//! Regress log2 of the replicate-mean statistic on j with bootstrap CI.
RegressionResult regress_scales(std::span<ReplicateStats const> reps,
                                std::size_t p_index,
                                bool use_T,
                                StudySetup const& setup,
                                std::uint64_t stream);

//! Slope of log2 E|c_{j,M^d,k}|^p; throws InfiniteMomentRequested if p >= p_max.
RegressionResult moment_slope_curve(StudySetup const& setup, double p);

struct TauEstimate
{
    double tau_hat = 0;
    double ci_lo = 0;
    double ci_hi = 0;
    double stderr_tau = 0;
    RegressionResult regression;  //!< of log2 T_j
};

//! tau_hat = tau_ref - slope / p from the unit-cube scale terms.
TauEstimate estimate_tau_p(StudySetup const& setup, double p, double tau_ref, double rho);
TauEstimate tau_from_regression(RegressionResult const& r, double p, double tau_ref);

struct HillResult
{
    double p_hat = 0;  //!< raw Hill estimate
    double ci_lo = 0;
    double ci_hi = 0;
    double tail_index = 0;  //!< moment-estimator screen value
    bool infinite = false;  //!< light tail declared
    std::size_t k = 0;
    std::size_t n = 0;

    //! p_hat, or infinity when declared light-tailed.
    double p_max() const;
};

//! Hill estimator over the k largest |x|; TooFewSamples if n < 10k or k < 50.
HillResult hill_pmax(std::span<double const> samples, std::size_t k);

struct RhoEstimate
{
    double rho_hat = 0;
    double ci_lo = 0;
    double ci_hi = 0;
    HillResult hill;
};

//! -d / min(p, p_max) with the bounds carried through min.
RhoEstimate rho_from_hill(HillResult const& hill, double p, int d);

/*!
 * rho_hat from Hill on n_father = T^d scale-0 father coefficients.
 * k defaults to max(50, n / 100).
 */
RhoEstimate estimate_rho_p(LevyModel const& model,
                           double p,
                           int d,
                           int T,
                           Backend backend,
                           WaveletSpec const& spec,
                           std::uint64_t seed,
                           std::size_t k = 0);

struct Tolerances
{
    double tau = 0.15;
    double rho = 0.08;
    double slope = 0.1;
    double hill = 0.15;
};

struct ReportOptions
{
    double tau_ref = 0;
    double rho = 0;
    Tolerances tol;
    int hill_T = 1 << 16;  //!< father window extent for the tail estimate
    std::size_t hill_k = 0;
};

struct ReportRow
{
    double p = 0;
    // smoothness
    bool refused = false;  //!< p >= p_max: moments infinite
    std::optional<TauEstimate> tau;
    double tau_lower = 0;
    double tau_upper = 0;
    bool pinned = true;  //!< theory bounds coincide
    bool proven = true;  //!< p inside the range covered by the theorem
    std::optional<bool> tau_pass;
    std::optional<RegressionResult> moments;
    // growth
    RhoEstimate rho;
    double rho_theory = 0;
    bool rho_pass = false;
    std::vector<std::string> flags;
};

struct VerificationReport
{
    std::string model;
    int d = 1;
    NoiseIndices indices;
    std::vector<ReportRow> rows;
    HillResult hill;
    bool all_pass = false;
    double runtime_seconds = 0;
    std::vector<double> simulated_ps;  //!< p with finite moments, in grid order
};

//! Replicate statistics for simulated_ps are moved into `replicates` if given.
VerificationReport theorem_report(StudySetup const& setup,
                                  std::span<double const> p_grid,
                                  ReportOptions const& options,
                                  std::vector<ReplicateStats>* replicates = nullptr);

//! Theory interval [d/max(p, b) - d, d/max(p, b_lower) - d].
std::pair<double, double> tau_theory_bounds(NoiseIndices const& idx, double p, int d);
double rho_theory(NoiseIndices const& idx, double p, int d);

}  // namespace levybesov
