// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rng.hpp"

namespace levybesov
{
//! Sentinel for an infinite moment index; formatted as "inf".
inline constexpr double infinite_index = std::numeric_limits<double>::infinity();

std::string format_index(double value);

//---------------------------------------------------------------------------//
// Jump laws and Lévy measures
//---------------------------------------------------------------------------//

//! Part of the real line a jump law is restricted to.
enum class JumpRegion
{
    all,
    small,  //!< |t| <= 1
    large,  //!< |t| > 1
};

/*!
 * Jump distribution of a compound Poisson measure.
 *
 * A restricted law carries the sub-probability mass of its region; it is not
 * renormalized, so `rate * law` keeps describing the same measure.
 */
struct JumpLaw
{
    enum class Kind
    {
        point_mass,  //!< at `a`
        uniform,  //!< on [a, b]
        normal,  //!< mean a, standard deviation b
    };

    Kind kind = Kind::point_mass;
    double a = 1;
    double b = 0;
    JumpRegion region = JumpRegion::all;

    static JumpLaw point_mass(double at);
    static JumpLaw uniform(double lower, double upper);
    static JumpLaw normal(double mean, double sd);

    JumpLaw restricted(JumpRegion r) const;
};

//! Probability of the law's region.
double jump_mass(JumpLaw const& law);
//! Integral of exp(i xi t) over the law's region.
std::complex<double> jump_cf(JumpLaw const& law, double xi);
//! Draw from the law conditioned on its region.
double sample_jump(JumpLaw const& law, Engine& rng);

//! Symmetric density weight * |t|^-(alpha+1) on abs_lower <= |t| < abs_upper.
struct PowerLawPiece
{
    double weight = 1;
    double alpha = 1;
    double abs_lower = 0;
    double abs_upper = infinite_index;
};

struct ZeroMeasure
{
};

struct FiniteMeasure
{
    double rate = 1;
    JumpLaw law;
};

struct PowerLawDensity
{
    std::vector<PowerLawPiece> pieces;
};

using LevyMeasure = std::variant<ZeroMeasure, FiniteMeasure, PowerLawDensity>;

//! Lévy-Khintchine triplet (drift, Gaussian variance, jump measure).
struct LevyTriplet
{
    double mu = 0;
    double sigma2 = 0;
    LevyMeasure nu = ZeroMeasure{};
};

//! Throws InvalidParameter when a triplet invariant fails.
void validate(LevyTriplet const& triplet);

//! Total mass of the measure restricted to |t| > 1.
double tail_mass(LevyMeasure const& nu);

//---------------------------------------------------------------------------//
// Noise models
//---------------------------------------------------------------------------//

enum class Family
{
    gaussian,
    cauchy,
    symmetric_stable,
    sum_of_stables,
    laplace,
    symmetric_gamma,
    compound_poisson,
    layered_stable,
    inverse_gaussian,
    farkas_single,
    farkas_double,
    custom_exponent,
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

//! Family parameters; each family reads only its own fields.
struct FamilyParams
{
    double sigma2 = 1;
    double gamma = 1;
    double alpha = 1;
    double alpha1 = 1;
    double alpha2 = 1;
    double lambda = 1;
    double beta1 = 0.5;
    double beta2 = 1.5;
    int M = 8;
    JumpLaw jumps;
};

/*!
 * A Lévy white noise, identified by the exponent of its unit-cell integral.
 *
 * Construct through the named factories, which validate parameter ranges.
 */
class LevyModel
{
  public:
    static LevyModel gaussian(double sigma2 = 1);
    static LevyModel cauchy(double gamma = 1);
    static LevyModel symmetric_stable(double alpha, double gamma = 1);
    static LevyModel sum_of_stables(double alpha1, double alpha2);
    static LevyModel laplace(double sigma2 = 1);
    static LevyModel symmetric_gamma(double sigma2, double lambda);
    static LevyModel compound_poisson(double lambda, JumpLaw jumps);
    static LevyModel layered_stable(double alpha1, double alpha2);
    static LevyModel inverse_gaussian();
    static LevyModel farkas_single(double beta2, int M);
    static LevyModel farkas_double(double beta1, double beta2, int M);
    static LevyModel custom(LevyTriplet triplet);

    Family family() const noexcept { return family_; }
    FamilyParams const& params() const noexcept { return params_; }
    //! Defining triplet of a custom model, null otherwise.
    LevyTriplet const* custom_triplet() const noexcept;
    //! True when Im Psi vanishes identically.
    bool symmetric() const;
    std::string describe() const;

  private:
    LevyModel(Family f, FamilyParams p) : family_(f), params_(std::move(p)) {}

    Family family_;
    FamilyParams params_;
    std::optional<LevyTriplet> triplet_;
};

//! Triplet of the model when its jump measure is representable.
std::optional<LevyTriplet> triplet_of(LevyModel const& model);

//---------------------------------------------------------------------------//
// Exponent evaluation
//---------------------------------------------------------------------------//

std::complex<double> evaluate_psi(LevyModel const& model, double xi);
std::complex<double> evaluate_psi(LevyTriplet const& triplet, double xi);

/*!
 * Frequency mantissa * 2^exponent, optionally in turns (times 2 pi).
 *
 * Turn-valued frequencies let the lacunary series be evaluated with exact
 * phase reduction far beyond double precision of the radian value.
 */
struct Frequency
{
    double mantissa = 1;
    int exponent = 0;
    bool in_turns = false;

    static Frequency dyadic(int m) { return {1.0, m, false}; }
    static Frequency turns(double t, int e) { return {t, e, true}; }

    double value() const;
    double log2() const;
};

//! log2 |Psi(xi)|, stable for |Psi| outside the double range.
double log2_abs_psi(LevyModel const& model, Frequency xi);

//! Integral of (1 - cos u) u^-(alpha+1) over (0, inf), alpha in (0, 2).
double cosine_gap_integral(double alpha);

//---------------------------------------------------------------------------//
// Indices
//---------------------------------------------------------------------------//

struct NoiseIndices
{
    double beta_inf = 0;
    double beta_inf_lower = 0;
    double p_max = infinite_index;
    double pruitt_beta0 = 2;
    bool heuristic = false;
};

//! Build indices, enforcing ordering and the Pruitt relation.
NoiseIndices make_indices(double beta_inf, double beta_inf_lower, double p_max);

NoiseIndices closed_form_indices(LevyModel const& model);

//! Moment index from the table, or derived from a custom triplet.
double moment_index(LevyModel const& model);

//! Indices for any model: closed form when available, else numeric.
NoiseIndices theory_indices(LevyModel const& model);

std::vector<Frequency> dyadic_ladder(int first, int last);
//! Peak (half-turn) and trough (full-turn) points at 2^(M^k), k = 1..k_max.
std::vector<Frequency> farkas_aligned_ladder(int M, int k_max);

/*!
 * Heuristic Blumenthal-Getoor estimates from log |Psi| along a ladder.
 *
 * Each point contributes the secant growth rate measured from the first
 * ladder point; the upper index is the max and the lower index the min of
 * those rates over the tail half of the ladder, clamped to [0, 2].
 */
NoiseIndices numeric_bg_indices(LevyModel const& model,
                                std::span<Frequency const> ladder);

//---------------------------------------------------------------------------//
// Structural conditions and decomposition
//---------------------------------------------------------------------------//

struct EpsilonCheck
{
    enum class Status
    {
        passed,
        failed,
        not_evaluated,
    };
    double epsilon = 0;
    Status status = Status::not_evaluated;
    //! Truncated integral at the largest cutoff, when evaluated.
    double value = 0;
};

struct ConditionReport
{
    std::vector<double> xi_grid;
    double sector_ratio = 0;
    bool measure_is_zero = false;
    std::vector<EpsilonCheck> epsilon_checks;
    std::optional<double> smallest_passing_epsilon;
    std::string note;
};

ConditionReport check_conditions(LevyModel const& model);

struct TripletSplit
{
    LevyTriplet gaussian;
    LevyTriplet compound_poisson;  //!< jumps with |t| > 1
    LevyTriplet finite_moment;  //!< jumps with |t| <= 1
    double poisson_rate = 0;
};

TripletSplit split_triplet(LevyTriplet const& triplet);

//---------------------------------------------------------------------------//
// Moments
//---------------------------------------------------------------------------//

//! Normalizing constant of the CF moment identity, calibrated on N(0, 1).
double cf_moment_constant(double p);

/*!
 * E|X|^p for X with characteristic function exp(t Psi), p in (0, 2].
 *
 * Computed from c_p * int (1 - Re phi(xi)) / |xi|^(p+1) dxi; p = 2 uses the
 * second derivative of the exponent at the origin.
 */
double pth_moment_via_cf(LevyModel const& model, double t, double p);

}  // namespace levybesov
