// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numbers>

#include "levybesov/error.hpp"
#include "levybesov/levy_model.hpp"
#include "levybesov/numerics.hpp"
#include "detail/levy_internal.hpp"

namespace levybesov
{
using std::numbers::pi;

//---------------------------------------------------------------------------//
// Indices
//---------------------------------------------------------------------------//

NoiseIndices make_indices(double beta_inf, double beta_inf_lower, double p_max)
{
    if (!(beta_inf_lower >= 0 && beta_inf_lower <= beta_inf && beta_inf <= 2))
        raise(ErrorCode::invalid_argument,
              "indices must satisfy 0 <= lower <= beta_inf <= 2");
    if (!(p_max > 0))
        raise(ErrorCode::invalid_argument, "p_max must be positive");
    NoiseIndices idx;
    idx.beta_inf = beta_inf;
    idx.beta_inf_lower = beta_inf_lower;
    idx.p_max = p_max;
    idx.pruitt_beta0 = std::min(p_max, 2.0);
    return idx;
}

NoiseIndices closed_form_indices(LevyModel const& model)
{
    auto const& p = model.params();
    constexpr double inf = infinite_index;
    switch (model.family())
    {
        case Family::gaussian: return make_indices(2, 2, inf);
        case Family::cauchy: return make_indices(1, 1, 1);
        case Family::symmetric_stable:
            return make_indices(p.alpha, p.alpha, p.alpha == 2 ? inf : p.alpha);
        case Family::sum_of_stables: {
            double const hi = std::max(p.alpha1, p.alpha2);
            double const lo = std::min(p.alpha1, p.alpha2);
            return make_indices(hi, hi, lo == 2 ? inf : lo);
        }
        case Family::laplace:
        case Family::symmetric_gamma:
        case Family::compound_poisson: return make_indices(0, 0, inf);
        case Family::layered_stable:
            return make_indices(p.alpha1, p.alpha1, p.alpha2);
        case Family::inverse_gaussian: return make_indices(0.5, 0.5, inf);
        case Family::farkas_single: return make_indices(p.beta2, 0, inf);
        case Family::farkas_double: return make_indices(p.beta2, p.beta1, inf);
        case Family::custom_exponent: break;
    }
    raise(ErrorCode::no_closed_form,
          "no tabulated indices for " + model.describe());
}

double moment_index(LevyModel const& model)
{
    if (model.family() != Family::custom_exponent)
        return closed_form_indices(model).p_max;
    auto const& nu = model.custom_triplet()->nu;
    double p_max = infinite_index;
    if (auto const* dens = std::get_if<PowerLawDensity>(&nu))
    {
        for (auto const& piece : dens->pieces)
        {
            if (std::isinf(piece.abs_upper))
                p_max = std::min(p_max, piece.alpha);
        }
    }
    return p_max;
}

std::vector<Frequency> dyadic_ladder(int first, int last)
{
    if (first < 0 || last <= first)
        raise(ErrorCode::invalid_argument, "dyadic ladder needs 0 <= first < last");
    std::vector<Frequency> out;
    for (int m = first; m <= last; ++m)
        out.push_back(Frequency::dyadic(m));
    return out;
}

std::vector<Frequency> farkas_aligned_ladder(int M, int k_max)
{
    if (M < 2 || k_max < 1)
        raise(ErrorCode::invalid_argument, "aligned ladder needs M >= 2, k >= 1");
    std::vector<Frequency> out;
    double mk = 1;
    for (int k = 1; k <= k_max; ++k)
    {
        mk *= M;
        if (mk > 1000)
            raise(ErrorCode::invalid_argument, "aligned ladder exponent too large");
        int const e = static_cast<int>(mk);
        out.push_back(Frequency::turns(0.5, e));
        out.push_back(Frequency::turns(1.0, e));
    }
    return out;
}

NoiseIndices numeric_bg_indices(LevyModel const& model,
                                std::span<Frequency const> ladder)
{
    if (ladder.size() < 2)
        raise(ErrorCode::invalid_argument, "ladder needs at least two points");
    std::vector<double> log_xi;
    std::vector<double> log_psi;
    for (auto const& f : ladder)
    {
        if (!(f.mantissa > 0))
            raise(ErrorCode::invalid_argument, "ladder frequencies must be > 0");
        double const lx = f.log2();
        if (!log_xi.empty() && !(lx > log_xi.back()))
            raise(ErrorCode::invalid_argument, "ladder must be increasing");
        double const lp = log2_abs_psi(model, f);
        if (!std::isfinite(lp))
            raise(ErrorCode::degenerate_exponent,
                  "Psi vanishes at ladder point 2^" + std::to_string(lx));
        log_xi.push_back(lx);
        log_psi.push_back(lp);
    }
    std::size_t const n = ladder.size();
    double hi = -infinite_index;
    double lo = infinite_index;
    for (std::size_t i = std::max<std::size_t>(1, n / 2); i < n; ++i)
    {
        double const r = (log_psi[i] - log_psi[0]) / (log_xi[i] - log_xi[0]);
        hi = std::max(hi, r);
        lo = std::min(lo, r);
    }
    hi = std::clamp(hi, 0.0, 2.0);
    lo = std::clamp(lo, 0.0, 2.0);
    auto idx = make_indices(hi, lo, moment_index(model));
    idx.heuristic = true;
    return idx;
}

NoiseIndices theory_indices(LevyModel const& model)
{
    if (model.family() != Family::custom_exponent)
        return closed_form_indices(model);
    auto const ladder = dyadic_ladder(10, 40);
    return numeric_bg_indices(model, ladder);
}

//---------------------------------------------------------------------------//
// Structural conditions
//---------------------------------------------------------------------------//
namespace
{
double min_power_square(double t, double eps)
{
    double const a = std::abs(t);
    return a <= 1 ? a * a : std::pow(a, eps);
}

// E[min(|X|^eps, X^2)] over the law's region.
double law_epsilon_moment(JumpLaw const& law, double eps)
{
    auto h = [eps](double t) { return min_power_square(t, eps); };
    switch (law.kind)
    {
        case JumpLaw::Kind::point_mass:
            return jump_mass(law) > 0 ? h(law.a) : 0.0;
        case JumpLaw::Kind::uniform: {
            // Split at the kinks of h.
            double const cuts[] = {law.a, -1, 0, 1, law.b};
            double total = 0;
            for (int i = 0; i + 1 < 5; ++i)
            {
                double const lo = std::max(cuts[i], law.a);
                double const hi = std::min(cuts[i + 1], law.b);
                if (hi <= lo)
                    continue;
                double const mid = (lo + hi) / 2;
                bool const small = std::abs(mid) <= 1;
                if ((law.region == JumpRegion::small && !small)
                    || (law.region == JumpRegion::large && small))
                    continue;
                total += integrate_finite(h, lo, hi);
            }
            return total / (law.b - law.a);
        }
        case JumpLaw::Kind::normal: {
            double const m = law.a;
            double const s = law.b;
            auto dens = [=](double t) {
                double const z = (t - m) / s;
                return std::exp(-z * z / 2) / (s * std::sqrt(2 * pi));
            };
            double inner = 0;
            double outer = 0;
            if (law.region != JumpRegion::large)
                inner = integrate_finite(
                    [&](double t) { return h(t) * dens(t); }, -1, 1);
            if (law.region != JumpRegion::small)
            {
                outer = integrate_to_infinity(
                            [&](double t) { return h(t) * dens(t); }, 1)
                        + integrate_to_infinity(
                            [&](double t) { return h(-t) * dens(-t); }, 1);
            }
            return inner + outer;
        }
    }
    return 0;
}

// Truncated epsilon integral of a power-law piece; tail convergence is judged
// from the ratio of successive increments over cutoffs 10^2, 10^4, ...
EpsilonCheck piece_epsilon(PowerLawPiece const& piece, double eps)
{
    EpsilonCheck check;
    check.epsilon = eps;
    double const w = 2 * piece.weight;
    double const a = piece.alpha;
    double value = 0;
    if (piece.abs_lower < 1)
    {
        value += w
                 * integrate_finite(
                     [a](double t) { return std::pow(t, 1 - a); },
                     piece.abs_lower,
                     std::min(1.0, piece.abs_upper));
    }
    check.status = EpsilonCheck::Status::passed;
    if (piece.abs_upper > 1)
    {
        auto f = [a, eps](double t) { return std::pow(t, eps - a - 1); };
        double lo = std::max(1.0, piece.abs_lower);
        if (!std::isinf(piece.abs_upper))
        {
            value += w * integrate_finite(f, lo, piece.abs_upper);
        }
        else
        {
            double prev = 0;
            double ratio = 0;
            for (int m = 1; m <= 4; ++m)
            {
                double const hi = std::max(lo * 10, std::pow(10.0, 2 * m));
                double const inc = w * integrate_finite(f, lo, hi);
                value += inc;
                if (prev > 0)
                    ratio = inc / prev;
                prev = inc;
                lo = hi;
            }
            if (!(ratio < 0.9))
                check.status = EpsilonCheck::Status::failed;
        }
    }
    check.value = value;
    return check;
}

double farkas_atoms_epsilon(double beta2, int M)
{
    // atoms of mass 2^(beta2 M^k - k) at |t| = 2^-M^k < 1: min(.) = t^2
    double total = 0;
    double mk = 1;
    for (int k = 1; k <= 12; ++k)
    {
        mk *= M;
        total += std::exp2((beta2 - 2) * mk - k);
    }
    return total;
}

}  // namespace

ConditionReport check_conditions(LevyModel const& model)
{
    ConditionReport report;
    for (int k = -16; k <= 32; ++k)
    {
        double const xi = std::exp2(k / 2.0);
        report.xi_grid.push_back(xi);
        auto const psi = evaluate_psi(model, xi);
        double ratio = 0;
        if (psi.imag() != 0)
            ratio = psi.real() == 0 ? infinite_index
                                    : std::abs(psi.imag() / psi.real());
        report.sector_ratio = std::max(report.sector_ratio, ratio);
    }

    constexpr double eps_grid[] = {0.1, 0.5, 1.0};
    auto const& p = model.params();
    auto triplet = triplet_of(model);
    for (double eps : eps_grid)
    {
        EpsilonCheck check;
        check.epsilon = eps;
        if (triplet)
        {
            auto const& nu = triplet->nu;
            if (std::holds_alternative<ZeroMeasure>(nu))
            {
                report.measure_is_zero = true;
                check.status = EpsilonCheck::Status::passed;
            }
            else if (auto const* fin = std::get_if<FiniteMeasure>(&nu))
            {
                check.status = EpsilonCheck::Status::passed;
                check.value = fin->rate * law_epsilon_moment(fin->law, eps);
            }
            else
            {
                check.status = EpsilonCheck::Status::passed;
                for (auto const& piece : std::get<PowerLawDensity>(nu).pieces)
                {
                    auto const part = piece_epsilon(piece, eps);
                    check.value += part.value;
                    if (part.status == EpsilonCheck::Status::failed)
                        check.status = EpsilonCheck::Status::failed;
                }
            }
        }
        else if (model.family() == Family::farkas_single
                 || model.family() == Family::farkas_double)
        {
            check.status = EpsilonCheck::Status::passed;
            check.value = farkas_atoms_epsilon(p.beta2, p.M);
            if (model.family() == Family::farkas_double)
                check.value
                    += piece_epsilon(PowerLawPiece{1, p.beta1, 0, 1}, eps).value;
        }
        report.epsilon_checks.push_back(check);
        if (check.status == EpsilonCheck::Status::passed
            && !report.smallest_passing_epsilon)
            report.smallest_passing_epsilon = eps;
    }
    if (report.measure_is_zero)
        report.note = "vacuous: zero Levy measure";
    else if (!triplet && model.family() != Family::farkas_single
             && model.family() != Family::farkas_double)
        report.note = "Levy measure not represented; epsilon grid not evaluated";
    return report;
}

//---------------------------------------------------------------------------//
// Decomposition
//---------------------------------------------------------------------------//

TripletSplit split_triplet(LevyTriplet const& triplet)
{
    validate(triplet);
    TripletSplit out;
    out.gaussian = LevyTriplet{triplet.mu, triplet.sigma2, ZeroMeasure{}};
    if (auto const* fin = std::get_if<FiniteMeasure>(&triplet.nu))
    {
        auto const region = fin->law.region;
        double const m_large = region == JumpRegion::small
                                   ? 0.0
                                   : jump_mass(fin->law.restricted(JumpRegion::large));
        double const m_small = region == JumpRegion::large
                                   ? 0.0
                                   : jump_mass(fin->law.restricted(JumpRegion::small));
        if (m_small == 0)
        {
            out.compound_poisson.nu = *fin;
        }
        else if (m_large == 0)
        {
            out.finite_moment.nu = *fin;
        }
        else
        {
            out.compound_poisson.nu
                = FiniteMeasure{fin->rate, fin->law.restricted(JumpRegion::large)};
            out.finite_moment.nu
                = FiniteMeasure{fin->rate, fin->law.restricted(JumpRegion::small)};
        }
        out.poisson_rate = fin->rate * m_large;
    }
    else if (auto const* dens = std::get_if<PowerLawDensity>(&triplet.nu))
    {
        PowerLawDensity large;
        PowerLawDensity small;
        for (auto const& piece : dens->pieces)
        {
            if (piece.abs_lower < 1)
            {
                auto part = piece;
                part.abs_upper = std::min(1.0, piece.abs_upper);
                small.pieces.push_back(part);
            }
            if (piece.abs_upper > 1)
            {
                auto part = piece;
                part.abs_lower = std::max(1.0, piece.abs_lower);
                large.pieces.push_back(part);
            }
        }
        if (!large.pieces.empty())
        {
            out.poisson_rate = tail_mass(large);
            out.compound_poisson.nu = std::move(large);
        }
        if (!small.pieces.empty())
            out.finite_moment.nu = std::move(small);
    }
    return out;
}

//---------------------------------------------------------------------------//
// Moments
//---------------------------------------------------------------------------//
namespace
{
// 1 - Re exp(t Psi), without cancellation near the origin.
double one_minus_re_cf(std::complex<double> t_psi)
{
    double const s = std::sin(t_psi.imag() / 2);
    return -std::expm1(t_psi.real()) * std::cos(t_psi.imag()) + 2 * s * s;
}

double cf_moment_integral(std::function<double(double)> const& gap, double p)
{
    // Near the origin substitute xi = exp(-s) and work in logs, since the
    // integrand is a vanishing gap times an exploding power.
    auto head = [&](double s) {
        double const g = gap(std::exp(-s));
        return g > 0 ? std::exp(std::log(g) + p * s) : 0.0;
    };
    auto tail = [&](double xi) { return gap(xi) * std::pow(xi, -p - 1); };
    return 2 * (integrate_to_infinity(head, 0) + integrate_to_infinity(tail, 1));
}

}  // namespace

double cf_moment_constant(double p)
{
    if (!(p > 0 && p < 2))
        raise(ErrorCode::invalid_argument, "c_p needs p in (0, 2)");
    double const gaussian_moment = std::exp2(p / 2) * std::tgamma((p + 1) / 2)
                                   / std::sqrt(pi);
    double const integral = cf_moment_integral(
        [](double xi) { return -std::expm1(-xi * xi / 2); }, p);
    return gaussian_moment / integral;
}

double pth_moment_via_cf(LevyModel const& model, double t, double p)
{
    if (!(t > 0) || !std::isfinite(t))
        raise(ErrorCode::invalid_argument, "volume t must be > 0");
    if (!(p > 0 && p <= 2))
        raise(ErrorCode::invalid_argument, "p must be in (0, 2]");
    double const p_max = moment_index(model);
    if (p >= p_max)
        raise(ErrorCode::moment_infinite,
              "E|X|^" + format_index(p) + " is infinite (p_max = "
                  + format_index(p_max) + ")");
    if (p == 2)
    {
        // E X^2 = -phi''(0) = lim 2 (1 - Re phi(h)) / h^2, Richardson-refined.
        double const scale = 1 + t * std::abs(evaluate_psi(model, 1.0));
        double const h = 1e-3 / std::sqrt(scale);
        auto second = [&](double step) {
            return 2 * one_minus_re_cf(t * evaluate_psi(model, step))
                   / (step * step);
        };
        return (4 * second(h / 2) - second(h)) / 3;
    }
    double const integral = cf_moment_integral(
        [&](double xi) { return one_minus_re_cf(t * evaluate_psi(model, xi)); },
        p);
    return cf_moment_constant(p) * integral;
}

}  // namespace levybesov
