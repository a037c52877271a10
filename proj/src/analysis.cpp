// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <variant>

#include "levybesov/error.hpp"
#include "levybesov/numerics.hpp"
#include "levybesov/parallel.hpp"
#include "levybesov/rng.hpp"

namespace levybesov
{
namespace
{
// Hill estimates above this are treated as light tails.
constexpr double hill_cap = 16;
// Extreme-value index below which the tail is declared light (p_max = inf).
constexpr double light_tail_index = 0.15;
constexpr double z95 = 1.959963984540054;

bool exact_coefficients(StudySetup const& s)
{
    return s.backend != Backend::grid_dwt || s.wavelet.is_haar();
}

double mean_abs_power(CoefficientField const& field,
                      CoefficientBlock const& block,
                      double p,
                      int guard)
{
    std::size_t const side = field.side(block.j);
    auto const g = static_cast<std::size_t>(guard);
    if (2 * g >= side)
        return 0;
    CompensatedSum sum;
    std::size_t count = 0;
    auto add = [&](double c) {
        sum.add(std::pow(std::abs(c), p));
        ++count;
    };
    if (field.d == 1)
    {
        for (std::size_t k = g; k < side - g; ++k)
            add(block.values[k]);
    }
    else
    {
        for (std::size_t k0 = g; k0 < side - g; ++k0)
            for (std::size_t k1 = g; k1 < side - g; ++k1)
                add(block.values[k0 * side + k1]);
    }
    return sum.value() / static_cast<double>(count);
}

void require_finite_moment(LevyModel const& model, double p)
{
    double const pmax = moment_index(model);
    if (p >= pmax)
        raise(ErrorCode::infinite_moment_requested,
              "E|c|^p is infinite for p = " + std::to_string(p) + " >= p_max = "
                  + std::to_string(pmax));
}

bool is_pure_gaussian(LevyModel const& model)
{
    if (model.family() == Family::gaussian)
        return true;
    auto const t = triplet_of(model);
    return t && t->sigma2 > 0 && std::holds_alternative<ZeroMeasure>(t->nu);
}

}  // namespace

std::pair<int, int> StudySetup::j_range() const
{
    int hi = j_hi;
    if (hi < 0)
        hi = exact_coefficients(*this) ? window.J - 1 : window.J - 4;
    return {j_lo, hi};
}

std::vector<ReplicateStats> collect_replicates(StudySetup const& setup,
                                               std::span<double const> ps,
                                               double tau_ref,
                                               double rho)
{
    setup.window.validate(setup.wavelet);
    if (setup.replicates < 1)
        raise(ErrorCode::invalid_argument, "need at least one replicate");
    for (double p : ps)
        if (!(p > 0) || !std::isfinite(p))
            raise(ErrorCode::invalid_parameter, "p must be finite and > 0");
    std::vector<ReplicateStats> out(static_cast<std::size_t>(setup.replicates));
    Gender const mothers = mother_all(setup.window.d);
    parallel_for(out.size(), setup.threads, [&](std::size_t r) {
        auto const field = sample_coefficient_field(
            setup.model, setup.window, setup.wavelet, setup.backend, setup.seed, r);
        ReplicateStats stats;
        for (double p : ps)
        {
            std::vector<double> m(static_cast<std::size_t>(setup.window.J), 0.0);
            for (int j = 0; j < setup.window.J; ++j)
                m[static_cast<std::size_t>(j)] = mean_abs_power(
                    field, *field.find(j, mothers), p, setup.window.guard_band);
            stats.mean_abs_p.push_back(std::move(m));

            BesovParams const params{p, tau_ref, rho, setup.window.d};
            std::vector<double> t(static_cast<std::size_t>(setup.window.J), 0.0);
            for (auto const& sc :
                 per_scale_contributions(field, params, setup.window.guard_band))
                t[static_cast<std::size_t>(sc.j)] = sc.T_j;
            stats.T.push_back(std::move(t));
        }
        out[r] = std::move(stats);
    });
    return out;
}

RegressionResult regress_scales(std::span<ReplicateStats const> reps,
                                std::size_t p_index,
                                bool use_T,
                                StudySetup const& setup,
                                std::uint64_t stream)
{
    auto const [j_lo, j_hi] = setup.j_range();
    if (j_lo < 0 || j_hi > setup.window.J - 1 || j_hi - j_lo < 2)
        raise(ErrorCode::invalid_argument,
              "regression needs 0 <= j_lo, j_hi <= J - 1 and at least 3 scales");
    if (reps.empty())
        raise(ErrorCode::too_few_samples, "no replicates");

    auto stat = [&](std::size_t r, int j) {
        auto const& table = use_T ? reps[r].T : reps[r].mean_abs_p;
        return table[p_index][static_cast<std::size_t>(j)];
    };
    std::size_t const R = reps.size();

    RegressionResult out;
    out.j_lo = j_lo;
    out.j_hi = j_hi;
    out.replicates = static_cast<int>(R);
    std::vector<double> xs, ys;
    for (int j = j_lo; j <= j_hi; ++j)
    {
        std::vector<double> column(R);
        for (std::size_t r = 0; r < R; ++r)
            column[r] = stat(r, j);
        double const m = mean(column);
        double const se = R > 1 ? std::sqrt(variance(column) / static_cast<double>(R)) : 0.0;
        out.js.push_back(j);
        out.values.push_back(m);
        out.value_stderr.push_back(se);
        if (m > 0 && std::isfinite(m))
        {
            xs.push_back(j);
            ys.push_back(std::log2(m));
        }
    }
    if (xs.size() < 3)
        raise(ErrorCode::too_few_samples, "fewer than 3 scales with a positive statistic");
    auto const fit = fit_line(xs, ys);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    out.r2 = fit.r2;

    if (R < 2 || setup.bootstrap < 2)
    {
        out.stderr_slope = fit.slope_se;
        out.ci_lo = fit.slope - z95 * fit.slope_se;
        out.ci_hi = fit.slope + z95 * fit.slope_se;
        return out;
    }
    auto rng = make_engine(setup.seed, stream, StreamRole::bootstrap);
    std::uniform_int_distribution<std::size_t> pick(0, R - 1);
    std::vector<double> slopes;
    std::vector<std::size_t> idx(R);
    for (int b = 0; b < setup.bootstrap; ++b)
    {
        for (auto& i : idx)
            i = pick(rng);
        std::vector<double> bx, by;
        for (int j = j_lo; j <= j_hi; ++j)
        {
            CompensatedSum s;
            for (std::size_t i : idx)
                s.add(stat(i, j));
            double const m = s.value() / static_cast<double>(R);
            if (m > 0 && std::isfinite(m))
            {
                bx.push_back(j);
                by.push_back(std::log2(m));
            }
        }
        if (bx.size() >= 3)
            slopes.push_back(fit_line(bx, by).slope);
    }
    if (slopes.size() < 2)
    {
        out.stderr_slope = fit.slope_se;
        out.ci_lo = out.ci_hi = fit.slope;
        return out;
    }
    out.stderr_slope = std::sqrt(variance(slopes));
    out.ci_lo = quantile(slopes, 0.025);
    out.ci_hi = quantile(slopes, 0.975);
    return out;
}

RegressionResult moment_slope_curve(StudySetup const& setup, double p)
{
    require_finite_moment(setup.model, p);
    std::vector<double> const ps{p};
    auto const reps = collect_replicates(setup, ps, 0, 0);
    return regress_scales(reps, 0, false, setup, 0);
}

TauEstimate tau_from_regression(RegressionResult const& r, double p, double tau_ref)
{
    TauEstimate t;
    t.regression = r;
    t.tau_hat = tau_ref - r.slope / p;
    t.ci_lo = tau_ref - r.ci_hi / p;
    t.ci_hi = tau_ref - r.ci_lo / p;
    t.stderr_tau = r.stderr_slope / p;
    return t;
}

TauEstimate estimate_tau_p(StudySetup const& setup, double p, double tau_ref, double rho)
{
    if (setup.window.T != 1)
        raise(ErrorCode::invalid_argument, "smoothness estimates need the unit window T = 1");
    require_finite_moment(setup.model, p);
    std::vector<double> const ps{p};
    auto const reps = collect_replicates(setup, ps, tau_ref, rho);
    return tau_from_regression(regress_scales(reps, 0, true, setup, 1), p, tau_ref);
}

//---------------------------------------------------------------------------//
// Tail index
//---------------------------------------------------------------------------//

double HillResult::p_max() const
{
    return infinite ? infinite_index : p_hat;
}

HillResult hill_pmax(std::span<double const> samples, std::size_t k)
{
    if (k < 50)
        raise(ErrorCode::too_few_samples, "Hill needs k >= 50");
    if (samples.size() < 10 * k)
        raise(ErrorCode::too_few_samples,
              "Hill needs n >= 10 k (n = " + std::to_string(samples.size()) + ")");
    std::vector<double> a(samples.size());
    std::transform(samples.begin(), samples.end(), a.begin(), [](double x) {
        return std::abs(x);
    });
    std::partial_sort(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k + 1), a.end(),
                      std::greater<>());
    double const threshold = a[k];
    if (!(threshold > 0))
        raise(ErrorCode::too_few_samples, "fewer than k + 1 nonzero samples");
    CompensatedSum m1, m2;
    for (std::size_t i = 0; i < k; ++i)
    {
        double const l = std::log(a[i] / threshold);
        m1.add(l);
        m2.add(l * l);
    }
    double const kk = static_cast<double>(k);
    double const M1 = m1.value() / kk;
    double const M2 = m2.value() / kk;

    HillResult out;
    out.k = k;
    out.n = samples.size();
    out.p_hat = M1 > 0 ? 1 / M1 : infinite_index;
    double const half = z95 * out.p_hat / std::sqrt(kk);
    out.ci_lo = out.p_hat - half;
    out.ci_hi = out.p_hat + half;
    // moment estimator of the extreme-value index
    out.tail_index = M2 > 0 ? M1 + 1 - 0.5 / (1 - M1 * M1 / M2) : 0;
    out.infinite = !(out.p_hat <= hill_cap) || out.tail_index < light_tail_index;
    return out;
}

RhoEstimate rho_from_hill(HillResult const& hill, double p, int d)
{
    RhoEstimate out;
    out.hill = hill;
    double const dd = d;
    if (hill.infinite)
    {
        out.rho_hat = out.ci_lo = out.ci_hi = -dd / p;
        return out;
    }
    out.rho_hat = -dd / std::min(p, hill.p_hat);
    out.ci_lo = -dd / std::min(p, std::max(hill.ci_lo, 1e-12));
    out.ci_hi = -dd / std::min(p, hill.ci_hi);
    return out;
}

RhoEstimate estimate_rho_p(LevyModel const& model,
                           double p,
                           int d,
                           int T,
                           Backend backend,
                           WaveletSpec const& spec,
                           std::uint64_t seed,
                           std::size_t k)
{
    auto const father = father_coefficients(model, d, T, spec, backend, seed);
    if (k == 0)
        k = std::max<std::size_t>(50, father.size() / 100);
    return rho_from_hill(hill_pmax(father, k), p, d);
}

//---------------------------------------------------------------------------//
// Report
//---------------------------------------------------------------------------//

std::pair<double, double> tau_theory_bounds(NoiseIndices const& idx, double p, int d)
{
    double const dd = d;
    return {dd / std::max(p, idx.beta_inf) - dd, dd / std::max(p, idx.beta_inf_lower) - dd};
}

double rho_theory(NoiseIndices const& idx, double p, int d)
{
    return -static_cast<double>(d) / std::min(p, idx.p_max);
}

VerificationReport theorem_report(StudySetup const& setup,
                                  std::span<double const> p_grid,
                                  ReportOptions const& options,
                                  std::vector<ReplicateStats>* replicates)
{
    auto const start = std::chrono::steady_clock::now();
    if (p_grid.empty())
        raise(ErrorCode::invalid_argument, "empty p grid");
    int const d = setup.window.d;
    VerificationReport report;
    report.model = setup.model.describe();
    report.d = d;
    report.indices = theory_indices(setup.model);
    bool const gaussian = is_pure_gaussian(setup.model);
    double const pmax = report.indices.p_max;

    // tail index from scale-0 father coefficients on a large window
    int hill_T = options.hill_T;
    if (d == 2)
        hill_T = std::max(1, static_cast<int>(std::lround(std::sqrt(static_cast<double>(hill_T)))));
    auto const father = father_coefficients(setup.model, d, hill_T, setup.wavelet,
                                            setup.backend, setup.seed);
    std::size_t const k = options.hill_k ? options.hill_k
                                         : std::max<std::size_t>(50, father.size() / 100);
    report.hill = hill_pmax(father, k);

    std::vector<double> finite_ps;
    for (double p : p_grid)
        if (p < pmax)
            finite_ps.push_back(p);
    std::vector<ReplicateStats> reps;
    if (!finite_ps.empty())
        reps = collect_replicates(setup, finite_ps, options.tau_ref, options.rho);

    bool all = true;
    std::size_t fi = 0;
    for (std::size_t i = 0; i < p_grid.size(); ++i)
    {
        double const p = p_grid[i];
        ReportRow row;
        row.p = p;
        if (gaussian)
        {
            row.tau_lower = row.tau_upper = -d / 2.0;
        }
        else
        {
            std::tie(row.tau_lower, row.tau_upper) = tau_theory_bounds(report.indices, p, d);
            bool const even = p == std::round(p) && static_cast<long long>(p) % 2 == 0;
            row.proven = p < 2 || even;
        }
        row.pinned = row.tau_upper - row.tau_lower < 1e-9;
        if (!row.pinned)
            row.flags.emplace_back("bounded, not pinned");
        if (!row.proven)
            row.flags.emplace_back("unproven p range: theory conjectured");
        if (report.indices.heuristic)
            row.flags.emplace_back("heuristic indices");
        double need = 0;
        for (double t : {row.tau_lower, row.tau_upper})
            if (std::isfinite(t))
                need = std::max(need, required_regularity(t, p, d));
        if (setup.wavelet.regularity() <= need)
            row.flags.emplace_back("wavelet regularity below requirement");

        if (p >= pmax)
        {
            row.refused = true;
            row.flags.emplace_back("refused: p >= p_max, moments infinite");
        }
        else
        {
            auto const reg = regress_scales(reps, fi, true, setup, 2 * i + 1);
            row.tau = tau_from_regression(reg, p, options.tau_ref);
            row.moments = regress_scales(reps, fi, false, setup, 2 * i + 2);
            ++fi;
            double const lo = row.tau_lower - options.tol.tau;
            double const hi = row.tau_upper + options.tol.tau;
            row.tau_pass = row.tau->ci_hi >= lo && row.tau->ci_lo <= hi;
            all = all && *row.tau_pass;
        }

        row.rho = rho_from_hill(report.hill, p, d);
        row.rho_theory = rho_theory(report.indices, p, d);
        row.rho_pass = std::abs(row.rho.rho_hat - row.rho_theory) <= options.tol.rho;
        all = all && row.rho_pass;
        report.rows.push_back(std::move(row));
    }
    report.all_pass = all;
    report.simulated_ps = std::move(finite_ps);
    if (replicates)
        *replicates = std::move(reps);
    report.runtime_seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace levybesov
