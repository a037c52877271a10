// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "levybesov/analysis.hpp"
#include "levybesov/dwt.hpp"
#include "levybesov/error.hpp"
#include "levybesov/experiment.hpp"
#include "levybesov/numerics.hpp"
#include "levybesov/parallel.hpp"
#include "levybesov/sampler.hpp"

using namespace levybesov;
namespace fs = std::filesystem;

namespace
{
struct Outcome
{
    bool pass = true;
    std::string detail;

    void check(bool ok, std::string const& what)
    {
        pass = pass && ok;
        if (!ok)
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
    void note(std::string const& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(char const* f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

StudySetup study(LevyModel model, int J, int replicates, std::uint64_t seed)
{
    StudySetup s;
    s.backend = default_backend(model.family());
    s.model = std::move(model);
    s.window.J = J;
    s.replicates = replicates;
    s.seed = seed;
    s.threads = resolve_threads(0);
    return s;
}

std::string slurp(fs::path const& p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

//---------------------------------------------------------------------------//

Outcome dirac_localization()
{
    Outcome o;
    SimulationWindow w;
    w.J = 14;
    auto const field = dirac_coefficient_field(WaveletSpec::haar(), w, {0.3125, 0.3125});
    SeriesVerdict const expected[] = {
        SeriesVerdict::convergent, SeriesVerdict::undecided, SeriesVerdict::divergent};
    for (double p : {1.0, 2.0})
    {
        double const critical = 1 / p - 1;
        std::string seen;
        for (int i = 0; i < 3; ++i)
        {
            double const tau = critical + 0.25 * (i - 1);
            auto const terms = per_scale_contributions(field, {p, tau, 0, 1});
            auto const v = classify_series(terms).verdict;
            seen += std::string(i ? "/" : "") + std::string(to_string(v));
            o.check(v == expected[i], "p=" + fmt("%g", p) + " tau=" + fmt("%g", tau));
        }
        o.note("p=" + fmt("%g", p) + ": " + seen);
    }
    return o;
}

Outcome gaussian_iid()
{
    Outcome o;
    SimulationWindow w;
    w.J = 13;
    auto const field = sample_coefficient_field(LevyModel::gaussian(), w, WaveletSpec::haar(),
                                                Backend::gaussian_exact, 2024);
    double worst = 0;
    for (auto const& b : field.blocks)
    {
        if (b.j > 12)
            continue;
        CompensatedSum s;
        for (double c : b.values)
            s.add(c * c);
        double const n = static_cast<double>(b.values.size());
        double const var = s.value() / n;
        double const z = std::abs(var - 1) / (5 / std::sqrt(n));
        worst = std::max(worst, z);
        o.check(z <= 1, "variance at j=" + std::to_string(b.j));
    }
    o.note("max |var-1|/(5/sqrt n) = " + fmt("%.3f", worst));

    auto const s = study(LevyModel::gaussian(), 12, 100, 2);
    std::vector<double> const ps{1, 2, 4};
    auto const reps = collect_replicates(s, ps, 0, 0);
    for (std::size_t i = 0; i < ps.size(); ++i)
    {
        auto const r = regress_scales(reps, i, false, s, i);
        o.check(std::abs(r.slope) <= 0.05, "moment slope p=" + fmt("%g", ps[i]));
        o.note("slope p=" + fmt("%g", ps[i]) + " " + fmt("%+.4f", r.slope));
    }
    return o;
}

Outcome gaussian_exponents()
{
    Outcome o;
    auto const s = study(LevyModel::gaussian(), 12, 100, 3);
    ReportOptions opt;
    opt.hill_T = 1 << 16;
    std::vector<double> const ps{1, 2};
    auto const rep = theorem_report(s, ps, opt);
    o.check(rep.hill.n == 65536, "2^16 father samples");
    o.check(rep.hill.infinite, "light tail declared");
    o.note("tail index " + fmt("%.3f", rep.hill.tail_index));
    for (auto const& row : rep.rows)
    {
        double const tau = row.tau ? row.tau->tau_hat : NAN;
        o.check(std::abs(tau + 0.5) <= 0.1, "tau p=" + fmt("%g", row.p));
        o.check(row.rho.rho_hat == -1 / row.p, "rho p=" + fmt("%g", row.p));
        o.note("p=" + fmt("%g", row.p) + " tau " + fmt("%.4f", tau) + " rho "
               + fmt("%.4f", row.rho.rho_hat));
    }
    return o;
}

Outcome compound_poisson_moments()
{
    Outcome o;
    auto s = study(LevyModel::compound_poisson(1, JumpLaw::normal(0, 1)), 13, 200, 4);
    s.j_lo = 4;
    s.j_hi = 12;
    std::vector<double> const ps{1};
    auto const reps = collect_replicates(s, ps, 0, 0);
    auto const m = regress_scales(reps, 0, false, s, 1);
    auto const t = tau_from_regression(regress_scales(reps, 0, true, s, 2), 1, 0);
    o.check(std::abs(m.slope + 0.5) <= 0.1, "moment slope");
    o.check(std::abs(t.tau_hat) <= 0.15, "tau");
    o.note("slope " + fmt("%+.4f", m.slope) + ", tau " + fmt("%+.4f", t.tau_hat));
    return o;
}

Outcome stable_scaling()
{
    Outcome o;
    auto const s = study(LevyModel::symmetric_stable(1.2), 12, 100, 5);
    std::vector<double> const ps{0.6};
    auto const reps = collect_replicates(s, ps, 0, 0);
    auto const m = regress_scales(reps, 0, false, s, 1);
    auto const t = tau_from_regression(regress_scales(reps, 0, true, s, 2), 0.6, 0);
    double const slope_theory = 0.6 * (0.5 - 1 / 1.2);
    double const tau_theory = 1 / 1.2 - 1;
    o.check(std::abs(m.slope - slope_theory) <= 0.1, "moment slope");
    o.check(std::abs(t.tau_hat - tau_theory) <= 0.15, "tau");
    o.note("slope " + fmt("%+.4f", m.slope) + " (theory " + fmt("%+.4f", slope_theory) + "), tau "
           + fmt("%+.4f", t.tau_hat) + " (theory " + fmt("%+.4f", tau_theory) + ")");
    return o;
}

Outcome moment_index_recovery()
{
    Outcome o;
    auto const father = father_coefficients(LevyModel::symmetric_stable(1.5), 1, 1 << 16,
                                            WaveletSpec::haar(), Backend::grid_dwt, 6);
    auto const h = hill_pmax(father, 600);
    auto const rho = rho_from_hill(h, 2, 1);
    o.check(!h.infinite && h.p_hat >= 1.3 && h.p_hat <= 1.7, "Hill p_max");
    o.check(std::abs(rho.rho_hat + 1 / 1.5) <= 0.08, "rho_2");
    o.note("p_max " + fmt("%.4f", h.p_hat) + ", rho_2 " + fmt("%+.4f", rho.rho_hat));
    return o;
}

Outcome index_estimator()
{
    Outcome o;
    auto const ladder = dyadic_ladder(10, 40);
    double worst = 0;
    for (double alpha : {0.3, 0.8, 1.2, 1.5, 1.9})
    {
        auto const est = numeric_bg_indices(LevyModel::symmetric_stable(alpha), ladder);
        worst = std::max({worst, std::abs(est.beta_inf - alpha),
                          std::abs(est.beta_inf_lower - alpha)});
    }
    o.check(worst <= 1e-9, "stable indices");
    auto const sg = numeric_bg_indices(LevyModel::symmetric_gamma(1, 1), ladder);
    o.check(sg.beta_inf <= 0.15, "symmetric gamma");
    auto const aligned = farkas_aligned_ladder(8, 3);
    auto const fs1 = numeric_bg_indices(LevyModel::farkas_single(1.5, 8), aligned);
    o.check(fs1.beta_inf >= 1.4, "Farkas upper");
    o.check(fs1.beta_inf_lower <= 0.1, "Farkas lower");
    o.note("stable max error " + fmt("%.2e", worst) + ", gamma " + fmt("%.4f", sg.beta_inf)
           + ", Farkas " + fmt("%.4f", fs1.beta_inf) + "/" + fmt("%.4f", fs1.beta_inf_lower));
    return o;
}

Outcome sampler_fidelity()
{
    Outcome o;
    std::vector<LevyModel> const models{
        LevyModel::gaussian(),
        LevyModel::cauchy(),
        LevyModel::symmetric_stable(1.5),
        LevyModel::sum_of_stables(0.8, 1.6),
        LevyModel::laplace(),
        LevyModel::symmetric_gamma(1, 1),
        LevyModel::compound_poisson(1, JumpLaw::normal(0, 1)),
        LevyModel::layered_stable(1.5, 0.5),
        LevyModel::inverse_gaussian(),
        LevyModel::farkas_single(1.5, 8),
        LevyModel::farkas_double(0.5, 1.5, 8),
    };
    double worst = 0;
    for (auto const& model : models)
    {
        CellLawSampler const sampler(model, 1);
        auto rng = make_engine(8, 0, StreamRole::validation);
        auto const v = validate_sampler_cf(sampler, 100000, default_cf_grid(model, 1), rng);
        worst = std::max(worst, v.sup_deviation / v.threshold);
        o.check(v.passed, "CF " + model.describe());
    }
    o.note(std::to_string(models.size()) + " families, max deviation/threshold "
           + fmt("%.3f", worst));

    double min_p = 1;
    for (auto const& model : models)
    {
        CellLawSampler const whole(model, 1);
        CellLawSampler const quarter(model, 0.25);
        auto rng = make_engine(9, 0, StreamRole::validation);
        std::vector<double> direct(20000), summed(20000);
        for (auto& x : direct)
            x = whole(rng);
        for (auto& x : summed)
            x = quarter(rng) + quarter(rng) + quarter(rng) + quarter(rng);
        double const p = ks_two_sample(direct, summed).p_value;
        min_p = std::min(min_p, p);
        o.check(p > 1e-3, "divisibility " + model.describe());
    }
    o.note("min KS p " + fmt("%.4f", min_p));
    return o;
}

Outcome wavelet_machinery()
{
    Outcome o;
    double worst_filter = 0;
    for (int n = 1; n <= 10; ++n)
        worst_filter = std::max(worst_filter, orthonormality_residual(build_filters(WaveletSpec::daubechies(n))));
    o.check(worst_filter < 1e-12, "filter orthonormality");

    std::mt19937_64 rng(10);
    std::normal_distribution<double> normal;
    auto energy = [](auto const& values) {
        CompensatedSum s;
        for (double v : values)
            s.add(v * v);
        return s.value();
    };
    double worst_parseval = 0;
    std::vector<double> x1(std::size_t{1} << 16), x2(64 * 64);
    for (auto& v : x1)
        v = normal(rng);
    for (auto& v : x2)
        v = normal(rng);
    for (int n : {1, 2, 4, 6})
    {
        for (auto const& [x, d, J] : {std::tuple{&x1, 1, 16}, std::tuple{&x2, 2, 6}})
        {
            auto const f = dwt_forward(*x, d, 1, J, WaveletSpec::daubechies(n), J);
            CompensatedSum e;
            for (auto const& b : f.blocks)
                e.add(energy(b.values));
            double const ex = energy(*x);
            worst_parseval = std::max(worst_parseval, std::abs(e.value() - ex) / ex);
        }
    }
    o.check(worst_parseval < 1e-10, "Parseval");

    SimulationWindow w;
    w.J = 13;
    auto const grid = sample_coefficient_field(LevyModel::gaussian(), w, WaveletSpec::haar(),
                                               Backend::grid_dwt, 11);
    auto const exact = sample_coefficient_field(LevyModel::gaussian(), w, WaveletSpec::haar(),
                                                Backend::gaussian_exact, 12);
    double min_p = 1;
    for (int j = 4; j < 13; ++j)
    {
        double const p = ks_two_sample(grid.find(j, 1u)->values, exact.find(j, 1u)->values).p_value;
        min_p = std::min(min_p, p);
        o.check(p > 1e-3, "KS j=" + std::to_string(j));
    }
    o.note("filter residual " + fmt("%.1e", worst_filter) + ", Parseval " + fmt("%.1e", worst_parseval)
           + ", min KS p " + fmt("%.4f", min_p));
    return o;
}

Outcome even_moment_bound()
{
    Outcome o;
    auto const s = study(LevyModel::symmetric_gamma(1, 1), 12, 200, 13);
    auto const r = moment_slope_curve(s, 4);
    o.check(r.slope <= 1 + 0.15, "fourth-moment slope");
    o.note("slope " + fmt("%+.4f", r.slope) + " (bound 1.15)");
    return o;
}

Outcome determinism()
{
    Outcome o;
    auto const config = parse_config(R"({
        "model": {"family": "SymmetricStable", "alpha": 1.5},
        "window": {"J": 11}, "replicates": 40, "p_grid": [0.5, 1, 2],
        "hill": {"T": 16384}, "master_seed": 77})");
    auto const root = fs::temp_directory_path() / "levybesov_acceptance";
    std::vector<std::string> bodies;
    for (int threads : {1, 8, 1, 8})
    {
        auto const dir = root / ("run" + std::to_string(bodies.size()));
        fs::remove_all(dir);
        RunOptions opt;
        opt.out_dir = dir.string();
        opt.threads = threads;
        run_experiment(config, Command::verify, opt);
        bodies.push_back(slurp(dir / "per_scale.csv") + slurp(dir / "moments.csv"));
    }
    bool same = true;
    for (auto const& b : bodies)
        same = same && b == bodies.front();
    o.check(!bodies.front().empty(), "artifacts written");
    o.check(same, "byte-identical CSV");
    o.note(std::to_string(bodies.size()) + " runs at threads 1/8, " + std::to_string(bodies.front().size())
           + " bytes");
    fs::remove_all(root);
    return o;
}

}  // namespace

int main()
{
    struct Criterion
    {
        int id;
        char const* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> const criteria{
        {1, "Dirac localization", dirac_localization},
        {2, "Gaussian coefficients i.i.d.", gaussian_iid},
        {3, "Gaussian critical exponents", gaussian_exponents},
        {4, "compound Poisson moment law", compound_poisson_moments},
        {5, "stable scaling", stable_scaling},
        {6, "moment index recovery", moment_index_recovery},
        {7, "index estimator", index_estimator},
        {8, "sampler fidelity", sampler_fidelity},
        {9, "wavelet machinery", wavelet_machinery},
        {10, "even-moment bound", even_moment_bound},
        {11, "determinism", determinism},
    };
    int failed = 0;
    for (auto const& c : criteria)
    {
        auto const start = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (std::exception const& e)
        {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double const secs
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed ? 1 : 0;
}
