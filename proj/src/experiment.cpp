// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "detail/artifacts.hpp"
#include "detail/json_util.hpp"
#include "levybesov/error.hpp"
#include "levybesov/numerics.hpp"
#include "levybesov/parallel.hpp"

namespace levybesov
{
namespace
{
namespace fs = std::filesystem;
using detail::json;
using detail::number_or_inf;

constexpr char const* out_of_scope_note
    = "p = infinity statements and behaviour at the critical values are not estimated";

struct Context
{
    ExperimentConfig const& config;
    fs::path out;
    int threads = 1;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

json report_header(Context const& ctx, Command command)
{
    json j;
    j["command"] = std::string(to_string(command));
    j["timestamp"] = detail::iso_timestamp_utc();
    j["config"] = detail::config_json(ctx.config);
    j["model"] = ctx.config.model.describe();
    j["d"] = ctx.config.d;
    return j;
}

json indices_json(NoiseIndices const& idx)
{
    return {{"beta_inf", number_or_inf(idx.beta_inf)},
            {"beta_inf_lower", number_or_inf(idx.beta_inf_lower)},
            {"p_max", number_or_inf(idx.p_max)},
            {"beta0", number_or_inf(idx.pruitt_beta0)},
            {"heuristic", idx.heuristic}};
}

json regression_json(RegressionResult const& r)
{
    return {{"slope", r.slope},
            {"intercept", r.intercept},
            {"r2", r.r2},
            {"j_lo", r.j_lo},
            {"j_hi", r.j_hi},
            {"stderr", r.stderr_slope},
            {"ci", {r.ci_lo, r.ci_hi}},
            {"replicates", r.replicates}};
}

json hill_json(HillResult const& h)
{
    return {{"p_hat", h.p_hat},
            {"ci", {h.ci_lo, h.ci_hi}},
            {"tail_index", h.tail_index},
            {"light_tail", h.infinite},
            {"p_max", number_or_inf(h.p_max())},
            {"k", h.k},
            {"n", h.n}};
}

void write_json(fs::path const& path, json const& j)
{
    detail::write_text(path, j.dump(2) + "\n");
}

// scale layout of a field of this window, matching per_scale_contributions
ScaleContribution scale_shape(SimulationWindow const& w, int j)
{
    ScaleContribution sc;
    sc.j = j;
    sc.gender_count = j == 0 ? (1u << w.d) : (1u << w.d) - 1;
    long long const side = (static_cast<long long>(w.T) << j) - 2LL * w.guard_band;
    std::size_t const per = side > 0 ? static_cast<std::size_t>(w.d == 1 ? side : side * side) : 0;
    sc.term_count = sc.gender_count * per;
    return sc;
}

// replicate-mean T_j of one p index
std::vector<ScaleContribution> mean_scale_terms(std::vector<ReplicateStats> const& reps,
                                                std::size_t pi,
                                                SimulationWindow const& w)
{
    std::vector<ScaleContribution> out;
    for (int j = 0; j < w.J; ++j)
    {
        auto sc = scale_shape(w, j);
        CompensatedSum sum;
        for (auto const& r : reps)
            sum.add(r.T[pi][static_cast<std::size_t>(j)]);
        sc.T_j = sum.value() / static_cast<double>(reps.size());
        out.push_back(sc);
    }
    return out;
}

std::vector<detail::MomentRow> moment_rows(std::vector<ReplicateStats> const& reps,
                                           std::span<double const> ps,
                                           int J)
{
    std::vector<detail::MomentRow> rows;
    double const n = static_cast<double>(reps.size());
    for (std::size_t pi = 0; pi < ps.size(); ++pi)
    {
        for (int j = 0; j < J; ++j)
        {
            std::vector<double> v;
            v.reserve(reps.size());
            for (auto const& r : reps)
                v.push_back(r.mean_abs_p[pi][static_cast<std::size_t>(j)]);
            detail::MomentRow row;
            row.j = j;
            row.p = ps[pi];
            row.mean_abs_p = mean(v);
            row.stderr_mean = v.size() > 1 ? std::sqrt(variance(v) / n) : 0.0;
            rows.push_back(row);
        }
    }
    return rows;
}

detail::Series log2_series(std::string label, std::span<ScaleContribution const> terms)
{
    detail::Series s;
    s.label = std::move(label);
    for (auto const& t : terms)
    {
        s.x.push_back(t.j);
        s.y.push_back(t.log2_T());
    }
    return s;
}

detail::Series fit_series(std::string label, double slope, double intercept, int lo, int hi)
{
    detail::Series s;
    s.label = std::move(label);
    s.x = {static_cast<double>(lo), static_cast<double>(hi)};
    s.y = {intercept + slope * lo, intercept + slope * hi};
    s.dashed = true;
    s.markers = false;
    return s;
}

std::string short_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

json scale_terms_json(std::span<ScaleContribution const> terms)
{
    json arr = json::array();
    for (auto const& t : terms)
        arr.push_back({{"j", t.j}, {"T_j", t.T_j}, {"log2_T_j", number_or_inf(t.log2_T())}});
    return arr;
}

json classification_json(SeriesClassification const& c)
{
    return {{"verdict", std::string(to_string(c.verdict))},
            {"tail_slope", c.slope},
            {"scales_used", c.scales_used}};
}

//---------------------------------------------------------------------------//
// commands
//---------------------------------------------------------------------------//

int run_indices(Context const& ctx)
{
    auto const& model = ctx.config.model;
    json j = report_header(ctx, Command::indices);
    auto const idx = theory_indices(model);
    j["indices"] = indices_json(idx);
    j["tuple"] = {number_or_inf(idx.beta_inf), number_or_inf(idx.beta_inf_lower),
                  number_or_inf(idx.p_max), number_or_inf(idx.pruitt_beta0)};
    j["moment_index"] = number_or_inf(moment_index(model));
    try
    {
        closed_form_indices(model);
        j["closed_form"] = true;
    }
    catch (Error const& e)
    {
        if (e.code() != ErrorCode::no_closed_form)
            throw;
        j["closed_form"] = false;
    }

    json numeric;
    try
    {
        std::vector<Frequency> ladder;
        if (model.family() == Family::farkas_single || model.family() == Family::farkas_double)
        {
            int const M = model.params().M;
            int k = 1;
            for (double mk = M * M; mk <= 1000; mk *= M)
                ++k;
            ladder = farkas_aligned_ladder(M, k);
            numeric["ladder"] = "aligned, M^k for k = 1.." + std::to_string(k);
        }
        else
        {
            ladder = dyadic_ladder(10, 40);
            numeric["ladder"] = "dyadic 2^10..2^40";
        }
        auto const est = numeric_bg_indices(model, ladder);
        numeric["beta_inf"] = est.beta_inf;
        numeric["beta_inf_lower"] = est.beta_inf_lower;
    }
    catch (Error const& e)
    {
        numeric["error"] = std::string(to_string(e.code())) + ": " + e.what();
    }
    j["numeric"] = numeric;

    auto const cond = check_conditions(model);
    json checks = json::array();
    for (auto const& c : cond.epsilon_checks)
    {
        char const* status = c.status == EpsilonCheck::Status::passed   ? "passed"
                             : c.status == EpsilonCheck::Status::failed ? "failed"
                                                                        : "not_evaluated";
        checks.push_back({{"epsilon", c.epsilon}, {"status", status}, {"value", c.value}});
    }
    j["conditions"] = {{"sector_ratio", cond.sector_ratio},
                       {"measure_is_zero", cond.measure_is_zero},
                       {"epsilon_checks", checks},
                       {"smallest_passing_epsilon",
                        cond.smallest_passing_epsilon ? json(*cond.smallest_passing_epsilon)
                                                      : json(nullptr)},
                       {"note", cond.note}};
    j["runtime_seconds"] = ctx.elapsed();
    write_json(ctx.out / "indices.json", j);
    return 0;
}

int run_simulate(Context const& ctx)
{
    auto const& c = ctx.config;
    auto const window = c.window();
    auto const field = sample_coefficient_field(c.model, window, c.wavelet, c.resolved_backend(),
                                                c.master_seed);
    if (c.dump_coefficients)
    {
        fs::create_directories(ctx.out);
        std::ofstream os(ctx.out / "coefficients.lbcf", std::ios::binary | std::ios::trunc);
        if (!os)
            raise(ErrorCode::io_failure, "cannot write coefficients.lbcf");
        write_field(os, field);
    }
    double const p = c.p_grid.front();
    BesovParams const params{p, c.tau_ref, c.rho, c.d};
    auto const terms = per_scale_contributions(field, params, c.guard_band);
    detail::write_text(ctx.out / "per_scale.csv", detail::per_scale_csv(terms));

    json j = report_header(ctx, Command::simulate);
    j["backend"] = std::string(to_string(field.backend));
    j["coefficient_count"] = field.total_count();
    json blocks = json::array();
    for (auto const& b : field.blocks)
    {
        blocks.push_back({{"j", b.j},
                          {"gender", gender_name(b.gender, c.d)},
                          {"count", b.values.size()},
                          {"mean", mean(b.values)},
                          {"variance", b.values.size() > 1 ? variance(b.values) : 0.0}});
    }
    j["blocks"] = blocks;
    j["p"] = p;
    j["per_scale"] = scale_terms_json(terms);
    j["classification"] = classification_json(classify_series(terms));
    j["runtime_seconds"] = ctx.elapsed();
    write_json(ctx.out / "report.json", j);

    detail::Chart chart{"one realization, p = " + short_number(p), "j", "log2 T_j", {}};
    chart.series.push_back(log2_series("T_j", terms));
    detail::write_text(ctx.out / "plots" / "per_scale.svg", detail::render_svg(chart));
    return 0;
}

int run_besov(Context const& ctx)
{
    auto const& c = ctx.config;
    auto const setup = c.study(ctx.threads);
    auto const reps = collect_replicates(setup, c.p_grid, c.tau_ref, c.rho);
    auto const window = c.window();

    json j = report_header(ctx, Command::besov);
    json per_p = json::array();
    detail::Chart chart{"replicate mean of T_j", "j", "log2 T_j", {}};
    for (std::size_t pi = 0; pi < c.p_grid.size(); ++pi)
    {
        double const p = c.p_grid[pi];
        auto const terms = mean_scale_terms(reps, pi, window);
        if (pi == 0)
            detail::write_text(ctx.out / "per_scale.csv", detail::per_scale_csv(terms));
        chart.series.push_back(log2_series("p = " + short_number(p), terms));

        json counts = {{"convergent", 0}, {"divergent", 0}, {"undecided", 0}};
        std::vector<double> norms;
        for (auto const& r : reps)
        {
            std::vector<ScaleContribution> rt;
            CompensatedSum total;
            for (int jj = 0; jj < window.J; ++jj)
            {
                auto sc = scale_shape(window, jj);
                sc.T_j = r.T[pi][static_cast<std::size_t>(jj)];
                total.add(sc.T_j);
                rt.push_back(sc);
            }
            auto const v = classify_series(rt).verdict;
            counts[std::string(to_string(v))] = counts[std::string(to_string(v))].get<int>() + 1;
            norms.push_back(std::pow(total.value(), 1 / p));
        }
        per_p.push_back({{"p", p},
                         {"mean_series", scale_terms_json(terms)},
                         {"classification", classification_json(classify_series(terms))},
                         {"replicate_verdicts", counts},
                         {"partial_norm_mean", mean(norms)},
                         {"partial_norm_median", quantile(norms, 0.5)}});
    }
    j["tau"] = c.tau_ref;
    j["rho"] = c.rho;
    j["replicates"] = c.replicates;
    j["results"] = per_p;
    j["runtime_seconds"] = ctx.elapsed();
    write_json(ctx.out / "report.json", j);
    detail::write_text(ctx.out / "plots" / "per_scale.svg", detail::render_svg(chart));
    return 0;
}

int run_moments(Context const& ctx)
{
    auto const& c = ctx.config;
    auto const setup = c.study(ctx.threads);
    double const pmax = moment_index(c.model);
    std::vector<double> ps;
    json refused = json::array();
    for (double p : c.p_grid)
    {
        if (p < pmax)
            ps.push_back(p);
        else
            refused.push_back(p);
    }
    std::vector<ReplicateStats> reps;
    if (!ps.empty())
        reps = collect_replicates(setup, ps, 0, 0);
    auto const rows = moment_rows(reps, ps, c.J);
    detail::write_text(ctx.out / "moments.csv", detail::moments_csv(rows));

    json j = report_header(ctx, Command::moments);
    j["p_max"] = number_or_inf(pmax);
    j["refused"] = refused;
    json fits = json::array();
    detail::Chart chart{"log2 E|c_j|^p", "j", "log2 mean |c|^p", {}};
    for (std::size_t pi = 0; pi < ps.size(); ++pi)
    {
        auto const r = regress_scales(reps, pi, false, setup, pi);
        fits.push_back({{"p", ps[pi]}, {"regression", regression_json(r)}});
        detail::Series s;
        s.label = "p = " + short_number(ps[pi]);
        for (auto const& row : rows)
        {
            if (row.p == ps[pi] && row.mean_abs_p > 0)
            {
                s.x.push_back(row.j);
                s.y.push_back(std::log2(row.mean_abs_p));
            }
        }
        chart.series.push_back(std::move(s));
        chart.series.push_back(fit_series("slope " + short_number(r.slope), r.slope, r.intercept,
                                          r.j_lo, r.j_hi));
    }
    j["fits"] = fits;
    j["runtime_seconds"] = ctx.elapsed();
    write_json(ctx.out / "report.json", j);
    detail::write_text(ctx.out / "plots" / "moments.svg", detail::render_svg(chart));
    return 0;
}

int run_verify(Context const& ctx)
{
    auto const& c = ctx.config;
    auto const setup = c.study(ctx.threads);
    ReportOptions opt;
    opt.tau_ref = c.tau_ref;
    opt.rho = c.rho;
    opt.tol = c.tolerances;
    opt.hill_T = c.hill_T;
    opt.hill_k = c.hill_k;
    std::vector<ReplicateStats> reps;
    auto const rep = theorem_report(setup, c.p_grid, opt, &reps);
    auto const window = c.window();

    auto const rows = moment_rows(reps, rep.simulated_ps, c.J);
    detail::write_text(ctx.out / "moments.csv", detail::moments_csv(rows));
    std::vector<ScaleContribution> first_terms;
    if (!rep.simulated_ps.empty())
        first_terms = mean_scale_terms(reps, 0, window);
    detail::write_text(ctx.out / "per_scale.csv", detail::per_scale_csv(first_terms));

    json j = report_header(ctx, Command::verify);
    j["indices"] = indices_json(rep.indices);
    j["hill"] = hill_json(rep.hill);
    json jrows = json::array();
    detail::Chart scales{"replicate mean of T_j at tau_ref = " + short_number(c.tau_ref), "j",
                         "log2 T_j", {}};
    detail::Series est{"estimate", {}, {}, {}, {}, false, true, false};
    detail::Series lower{"theory lower", {}, {}, {}, {}, true, false, true};
    detail::Series upper{"theory upper", {}, {}, {}, {}, true, false, false};
    std::size_t fi = 0;
    for (auto const& row : rep.rows)
    {
        json r;
        r["p"] = row.p;
        r["refused"] = row.refused;
        r["tau_lower"] = row.tau_lower;
        r["tau_upper"] = row.tau_upper;
        r["pinned"] = row.pinned;
        r["proven"] = row.proven;
        if (row.tau)
        {
            r["tau_hat"] = row.tau->tau_hat;
            r["tau_ci"] = {row.tau->ci_lo, row.tau->ci_hi};
            r["tau_stderr"] = row.tau->stderr_tau;
            if (c.d == 1)
                r["process_tau_hat"] = row.tau->tau_hat + 1;
            r["scale_regression"] = regression_json(row.tau->regression);
            est.x.push_back(1 / row.p);
            est.y.push_back(row.tau->tau_hat);
            est.y_lo.push_back(row.tau->ci_lo);
            est.y_hi.push_back(row.tau->ci_hi);

            auto const terms = mean_scale_terms(reps, fi++, window);
            scales.series.push_back(log2_series("p = " + short_number(row.p), terms));
            auto const& reg = row.tau->regression;
            scales.series.push_back(fit_series("slope " + short_number(reg.slope), reg.slope,
                                               reg.intercept, reg.j_lo, reg.j_hi));
        }
        else
        {
            r["tau_hat"] = nullptr;
            r["tau_ci"] = nullptr;
        }
        r["tau_pass"] = row.tau_pass ? json(*row.tau_pass) : json(nullptr);
        r["moment_regression"] = row.moments ? regression_json(*row.moments) : json(nullptr);
        r["rho_hat"] = row.rho.rho_hat;
        r["rho_ci"] = {row.rho.ci_lo, row.rho.ci_hi};
        r["rho_theory"] = row.rho_theory;
        r["rho_pass"] = row.rho_pass;
        r["flags"] = row.flags;
        jrows.push_back(r);
    }
    j["rows"] = jrows;
    j["all_pass"] = rep.all_pass;
    j["out_of_scope"] = out_of_scope_note;
    j["threads"] = ctx.threads;
    j["runtime_seconds"] = ctx.elapsed();
    write_json(ctx.out / "report.json", j);
    detail::write_text(ctx.out / "plots" / "per_scale.svg", detail::render_svg(scales));

    // theory lines over 1/p in (0, 3]
    auto const triplet = triplet_of(c.model);
    bool const gaussian = c.model.family() == Family::gaussian
                          || (triplet && triplet->sigma2 > 0
                              && std::holds_alternative<ZeroMeasure>(triplet->nu));
    for (int i = 1; i <= 60; ++i)
    {
        double const inv = 0.05 * i;
        double lo = -c.d / 2.0, hi = -c.d / 2.0;
        if (!gaussian)
            std::tie(lo, hi) = tau_theory_bounds(rep.indices, 1 / inv, c.d);
        lower.x.push_back(inv);
        lower.y.push_back(lo);
        upper.x.push_back(inv);
        upper.y.push_back(hi);
    }
    detail::Chart triebel{"critical smoothness against 1/p", "1/p", "tau", {}};
    triebel.series = {upper, lower, est};
    detail::write_text(ctx.out / "plots" / "triebel.svg", detail::render_svg(triebel));
    return rep.all_pass ? 0 : 2;
}

int run_dirac(Context const& ctx)
{
    auto const& c = ctx.config;
    double const p = c.dirac.p.value_or(c.p_grid.front());
    double const critical = c.d / p - c.d;
    std::vector<double> taus = c.dirac.tau_grid;
    if (taus.empty())
        taus = {critical - 0.25, critical, critical + 0.25};
    auto const window = c.window();
    auto const field = dirac_coefficient_field(c.wavelet, window, c.dirac.x0);

    json j = report_header(ctx, Command::dirac);
    j["p"] = p;
    j["critical_tau"] = critical;
    json results = json::array();
    bool all = true;
    detail::Chart chart{"Dirac at x0, p = " + short_number(p), "j", "log2 T_j", {}};
    for (std::size_t i = 0; i < taus.size(); ++i)
    {
        double const tau = taus[i];
        auto const terms = per_scale_contributions(field, {p, tau, c.rho, c.d}, c.guard_band);
        if (i == 0)
            detail::write_text(ctx.out / "per_scale.csv", detail::per_scale_csv(terms));
        auto const cls = classify_series(terms);
        double const offset = p * (tau - critical);
        std::string theory = tau < critical ? "convergent" : tau > critical ? "divergent"
                                                                            : "critical";
        // offsets inside the classifier dead zone cannot be resolved
        bool const resolvable = theory == "critical" || std::abs(offset) >= 0.2;
        SeriesVerdict const expected = theory == "convergent" ? SeriesVerdict::convergent
                                       : theory == "divergent" ? SeriesVerdict::divergent
                                                               : SeriesVerdict::undecided;
        bool const match = !resolvable || cls.verdict == expected;
        all = all && match;
        std::string label = cls.verdict == SeriesVerdict::undecided ? "critical"
                                                                    : std::string(to_string(cls.verdict));
        results.push_back({{"tau", tau},
                           {"classification", label},
                           {"verdict", std::string(to_string(cls.verdict))},
                           {"tail_slope", cls.slope},
                           {"expected_slope", offset},
                           {"theory", theory},
                           {"resolvable", resolvable},
                           {"regularity_sufficient",
                            c.wavelet.regularity() > required_regularity(tau, p, c.d)},
                           {"match", match},
                           {"per_scale", scale_terms_json(terms)}});
        chart.series.push_back(log2_series("tau = " + short_number(tau), terms));
    }
    j["results"] = results;
    j["all_pass"] = all;
    j["runtime_seconds"] = ctx.elapsed();
    write_json(ctx.out / "report.json", j);
    detail::write_text(ctx.out / "plots" / "dirac.svg", detail::render_svg(chart));
    return all ? 0 : 2;
}

void require(json const& obj,
             std::string const& where,
             char const* key,
             bool (json::*is)() const noexcept,
             std::vector<std::string>& errors,
             bool nullable = false)
{
    auto it = obj.find(key);
    if (it == obj.end())
        errors.push_back(where + ": missing '" + key + "'");
    else if (!((*it).*is)() && !(nullable && it->is_null()))
        errors.push_back(where + "." + key + ": wrong type");
}

}  // namespace

std::vector<std::string> check_report_schema(std::string_view text)
{
    std::vector<std::string> errors;
    json j;
    try
    {
        j = json::parse(text.begin(), text.end());
    }
    catch (json::exception const& e)
    {
        errors.emplace_back(std::string("not JSON: ") + e.what());
        return errors;
    }
    if (!j.is_object())
        return {"report: expected an object"};
    require(j, "report", "command", &json::is_string, errors);
    require(j, "report", "timestamp", &json::is_string, errors);
    require(j, "report", "config", &json::is_object, errors);
    require(j, "report", "model", &json::is_string, errors);
    require(j, "report", "d", &json::is_number_integer, errors);
    require(j, "report", "runtime_seconds", &json::is_number, errors);
    if (j.contains("timestamp") && j["timestamp"].is_string())
    {
        auto const ts = j["timestamp"].get<std::string>();
        if (ts.size() != 20 || ts[4] != '-' || ts[10] != 'T' || ts[19] != 'Z')
            errors.emplace_back("report.timestamp: not ISO-8601 UTC");
    }
    if (j.contains("config") && j["config"].is_object())
    {
        try
        {
            parse_config(j["config"].dump());
        }
        catch (Error const& e)
        {
            errors.emplace_back(std::string("report.config: ") + e.what());
        }
    }
    if (j.value("command", "") != "verify")
        return errors;

    require(j, "report", "indices", &json::is_object, errors);
    require(j, "report", "hill", &json::is_object, errors);
    require(j, "report", "all_pass", &json::is_boolean, errors);
    require(j, "report", "rows", &json::is_array, errors);
    if (!j.contains("rows") || !j["rows"].is_array())
        return errors;
    if (j["rows"].empty())
        errors.emplace_back("report.rows: empty");
    for (std::size_t i = 0; i < j["rows"].size(); ++i)
    {
        auto const& r = j["rows"][i];
        std::string const w = "report.rows[" + std::to_string(i) + "]";
        if (!r.is_object())
        {
            errors.push_back(w + ": expected an object");
            continue;
        }
        require(r, w, "p", &json::is_number, errors);
        require(r, w, "refused", &json::is_boolean, errors);
        require(r, w, "tau_lower", &json::is_number, errors);
        require(r, w, "tau_upper", &json::is_number, errors);
        require(r, w, "pinned", &json::is_boolean, errors);
        require(r, w, "proven", &json::is_boolean, errors);
        require(r, w, "tau_hat", &json::is_number, errors, true);
        require(r, w, "tau_ci", &json::is_array, errors, true);
        require(r, w, "tau_pass", &json::is_boolean, errors, true);
        require(r, w, "rho_hat", &json::is_number, errors);
        require(r, w, "rho_ci", &json::is_array, errors);
        require(r, w, "rho_theory", &json::is_number, errors);
        require(r, w, "rho_pass", &json::is_boolean, errors);
        require(r, w, "flags", &json::is_array, errors);
        if (r.contains("tau_lower") && r.contains("tau_upper") && r["tau_lower"].is_number()
            && r["tau_upper"].is_number() && r["tau_lower"].get<double>() > r["tau_upper"].get<double>())
            errors.push_back(w + ": tau_lower > tau_upper");
    }
    return errors;
}

Backend ExperimentConfig::resolved_backend() const
{
    return backend.value_or(default_backend(model.family()));
}

SimulationWindow ExperimentConfig::window() const
{
    return {d, T, J, guard_band};
}

StudySetup ExperimentConfig::study(int threads) const
{
    StudySetup s;
    s.model = model;
    s.wavelet = wavelet;
    s.backend = resolved_backend();
    s.window = window();
    s.j_lo = j_lo;
    s.j_hi = j_hi;
    s.replicates = replicates;
    s.bootstrap = bootstrap;
    s.seed = master_seed;
    s.threads = resolve_threads(threads);
    return s;
}

Command command_from_string(std::string_view name)
{
    for (auto c : {Command::indices, Command::simulate, Command::besov, Command::moments,
                   Command::verify, Command::dirac})
    {
        if (to_string(c) == name)
            return c;
    }
    raise(ErrorCode::invalid_argument, "unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c)
{
    switch (c)
    {
        case Command::indices: return "indices";
        case Command::simulate: return "simulate";
        case Command::besov: return "besov";
        case Command::moments: return "moments";
        case Command::verify: return "verify";
        case Command::dirac: return "dirac";
    }
    return "?";
}

int run_experiment(ExperimentConfig config, Command command, RunOptions const& options)
{
    if (options.seed)
        config.master_seed = *options.seed;
    if (!options.out_dir.empty())
        config.output_dir = options.out_dir;
    if (config.output_dir.empty())
        raise(ErrorCode::invalid_argument, "empty output directory");
    Context ctx{config, fs::path(config.output_dir), resolve_threads(options.threads)};
    std::error_code ec;
    fs::create_directories(ctx.out, ec);
    if (ec)
        raise(ErrorCode::io_failure, "cannot create " + ctx.out.string() + ": " + ec.message());

    switch (command)
    {
        case Command::indices: return run_indices(ctx);
        case Command::simulate: return run_simulate(ctx);
        case Command::besov: return run_besov(ctx);
        case Command::moments: return run_moments(ctx);
        case Command::verify: return run_verify(ctx);
        case Command::dirac: return run_dirac(ctx);
    }
    raise(ErrorCode::internal, "unhandled command");
}

}  // namespace levybesov
