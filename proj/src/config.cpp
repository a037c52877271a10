// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <initializer_list>
#include <string>

#include "detail/json_util.hpp"
#include "levybesov/error.hpp"
#include "levybesov/experiment.hpp"

namespace levybesov
{
namespace
{
using detail::json;

[[noreturn]] void bad(std::string const& where, std::string const& what)
{
    raise(ErrorCode::config_parse, where + ": " + what);
}

// message without the "Code: " prefix added by raise
std::string bare_message(Error const& e)
{
    std::string msg = e.what();
    auto const prefix = std::string(to_string(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0)
        msg.erase(0, prefix.size());
    return msg;
}

void only_keys(json const& obj, std::string const& where, std::initializer_list<char const*> keys)
{
    if (!obj.is_object())
        bad(where, "expected an object");
    for (auto const& [key, value] : obj.items())
    {
        bool known = false;
        for (char const* k : keys)
            known = known || key == k;
        if (!known)
            bad(where, "unknown key '" + key + "'");
    }
}

double get_number(json const& obj, char const* key, std::string const& where, double fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    if (it->is_string() && (*it == "inf" || *it == "+inf"))
        return infinite_index;
    if (it->is_null())
        return infinite_index;
    if (!it->is_number())
        bad(where + "." + key, "expected a number");
    return it->get<double>();
}

template<class Int>
Int get_int(json const& obj, char const* key, std::string const& where, Int fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    if (!it->is_number_integer())
        bad(where + "." + key, "expected an integer");
    if constexpr (std::is_unsigned_v<Int>)
    {
        if (it->is_number_unsigned())
            return it->get<Int>();
        if (it->get<long long>() < 0)
            bad(where + "." + key, "expected a non-negative integer");
    }
    return static_cast<Int>(it->get<long long>());
}

std::string get_string(json const& obj, char const* key, std::string const& where, std::string fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    if (!it->is_string())
        bad(where + "." + key, "expected a string");
    return it->get<std::string>();
}

std::vector<double> get_numbers(json const& obj, char const* key, std::string const& where)
{
    auto const& arr = obj.at(key);
    if (!arr.is_array())
        bad(where + "." + key, "expected an array of numbers");
    std::vector<double> out;
    for (auto const& v : arr)
    {
        if (!v.is_number())
            bad(where + "." + key, "expected an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

//---------------------------------------------------------------------------//
// jump laws and triplets
//---------------------------------------------------------------------------//

json jump_to_json(JumpLaw const& law)
{
    switch (law.kind)
    {
        case JumpLaw::Kind::point_mass:
            return {{"type", "point_mass"}, {"at", law.a}};
        case JumpLaw::Kind::uniform:
            return {{"type", "uniform"}, {"lower", law.a}, {"upper", law.b}};
        case JumpLaw::Kind::normal:
            return {{"type", "normal"}, {"mean", law.a}, {"sd", law.b}};
    }
    return {};
}

JumpLaw jump_from_json(json const& j, std::string const& where)
{
    auto const type = get_string(j, "type", where, "");
    if (type == "point_mass")
    {
        only_keys(j, where, {"type", "at"});
        return JumpLaw::point_mass(get_number(j, "at", where, 1));
    }
    if (type == "uniform")
    {
        only_keys(j, where, {"type", "lower", "upper"});
        return JumpLaw::uniform(get_number(j, "lower", where, -1), get_number(j, "upper", where, 1));
    }
    if (type == "normal")
    {
        only_keys(j, where, {"type", "mean", "sd"});
        return JumpLaw::normal(get_number(j, "mean", where, 0), get_number(j, "sd", where, 1));
    }
    bad(where + ".type", "expected point_mass, uniform or normal");
}

json measure_to_json(LevyMeasure const& nu)
{
    if (std::holds_alternative<ZeroMeasure>(nu))
        return {{"type", "zero"}};
    if (auto const* f = std::get_if<FiniteMeasure>(&nu))
        return {{"type", "finite"}, {"rate", f->rate}, {"law", jump_to_json(f->law)}};
    json pieces = json::array();
    for (auto const& piece : std::get<PowerLawDensity>(nu).pieces)
    {
        pieces.push_back({{"weight", piece.weight},
                          {"alpha", piece.alpha},
                          {"abs_lower", piece.abs_lower},
                          {"abs_upper", detail::number_or_inf(piece.abs_upper)}});
    }
    return {{"type", "power_law"}, {"pieces", pieces}};
}

LevyMeasure measure_from_json(json const& j, std::string const& where)
{
    auto const type = get_string(j, "type", where, "zero");
    if (type == "zero")
    {
        only_keys(j, where, {"type"});
        return ZeroMeasure{};
    }
    if (type == "finite")
    {
        only_keys(j, where, {"type", "rate", "law"});
        if (!j.contains("law"))
            bad(where, "missing 'law'");
        return FiniteMeasure{get_number(j, "rate", where, 1),
                             jump_from_json(j.at("law"), where + ".law")};
    }
    if (type == "power_law")
    {
        only_keys(j, where, {"type", "pieces"});
        PowerLawDensity density;
        if (!j.contains("pieces") || !j.at("pieces").is_array())
            bad(where + ".pieces", "expected an array");
        for (auto const& pj : j.at("pieces"))
        {
            std::string const pw = where + ".pieces";
            only_keys(pj, pw, {"weight", "alpha", "abs_lower", "abs_upper"});
            PowerLawPiece piece;
            piece.weight = get_number(pj, "weight", pw, 1);
            piece.alpha = get_number(pj, "alpha", pw, 1);
            piece.abs_lower = get_number(pj, "abs_lower", pw, 0);
            piece.abs_upper = get_number(pj, "abs_upper", pw, infinite_index);
            density.pieces.push_back(piece);
        }
        return density;
    }
    bad(where + ".type", "expected zero, finite or power_law");
}

//---------------------------------------------------------------------------//
// models
//---------------------------------------------------------------------------//

json model_to_json(LevyModel const& model)
{
    json j;
    j["family"] = std::string(to_string(model.family()));
    auto const& p = model.params();
    switch (model.family())
    {
        case Family::gaussian:
        case Family::laplace:
            j["sigma2"] = p.sigma2;
            break;
        case Family::cauchy:
            j["gamma"] = p.gamma;
            break;
        case Family::symmetric_stable:
            j["alpha"] = p.alpha;
            j["gamma"] = p.gamma;
            break;
        case Family::sum_of_stables:
        case Family::layered_stable:
            j["alpha1"] = p.alpha1;
            j["alpha2"] = p.alpha2;
            break;
        case Family::symmetric_gamma:
            j["sigma2"] = p.sigma2;
            j["lambda"] = p.lambda;
            break;
        case Family::compound_poisson:
            j["lambda"] = p.lambda;
            j["jumps"] = jump_to_json(p.jumps);
            break;
        case Family::inverse_gaussian:
            break;
        case Family::farkas_single:
            j["beta2"] = p.beta2;
            j["M"] = p.M;
            break;
        case Family::farkas_double:
            j["beta1"] = p.beta1;
            j["beta2"] = p.beta2;
            j["M"] = p.M;
            break;
        case Family::custom_exponent:
        {
            auto const* t = model.custom_triplet();
            j["mu"] = t->mu;
            j["sigma2"] = t->sigma2;
            j["measure"] = measure_to_json(t->nu);
            break;
        }
    }
    return j;
}

LevyModel model_from_json(json const& j)
{
    std::string const w = "model";
    if (!j.is_object())
        bad(w, "expected an object");
    if (!j.contains("family"))
        bad(w, "missing 'family'");
    Family family{};
    try
    {
        family = family_from_string(get_string(j, "family", w, ""));
    }
    catch (Error const& e)
    {
        bad(w + ".family", bare_message(e));
    }
    FamilyParams const def;
    auto num = [&](char const* key, double fallback) { return get_number(j, key, w, fallback); };
    switch (family)
    {
        case Family::gaussian:
            only_keys(j, w, {"family", "sigma2"});
            return LevyModel::gaussian(num("sigma2", def.sigma2));
        case Family::laplace:
            only_keys(j, w, {"family", "sigma2"});
            return LevyModel::laplace(num("sigma2", def.sigma2));
        case Family::cauchy:
            only_keys(j, w, {"family", "gamma"});
            return LevyModel::cauchy(num("gamma", def.gamma));
        case Family::symmetric_stable:
            only_keys(j, w, {"family", "alpha", "gamma"});
            if (!j.contains("alpha"))
                bad(w, "missing 'alpha'");
            return LevyModel::symmetric_stable(num("alpha", def.alpha), num("gamma", def.gamma));
        case Family::sum_of_stables:
            only_keys(j, w, {"family", "alpha1", "alpha2"});
            return LevyModel::sum_of_stables(num("alpha1", def.alpha1), num("alpha2", def.alpha2));
        case Family::layered_stable:
            only_keys(j, w, {"family", "alpha1", "alpha2"});
            return LevyModel::layered_stable(num("alpha1", def.alpha1), num("alpha2", def.alpha2));
        case Family::symmetric_gamma:
            only_keys(j, w, {"family", "sigma2", "lambda"});
            return LevyModel::symmetric_gamma(num("sigma2", def.sigma2), num("lambda", def.lambda));
        case Family::compound_poisson:
            only_keys(j, w, {"family", "lambda", "jumps"});
            return LevyModel::compound_poisson(
                num("lambda", def.lambda),
                j.contains("jumps") ? jump_from_json(j.at("jumps"), w + ".jumps")
                                    : JumpLaw::normal(0, 1));
        case Family::inverse_gaussian:
            only_keys(j, w, {"family"});
            return LevyModel::inverse_gaussian();
        case Family::farkas_single:
            only_keys(j, w, {"family", "beta2", "M"});
            return LevyModel::farkas_single(num("beta2", def.beta2), get_int(j, "M", w, def.M));
        case Family::farkas_double:
            only_keys(j, w, {"family", "beta1", "beta2", "M"});
            return LevyModel::farkas_double(num("beta1", def.beta1), num("beta2", def.beta2),
                                            get_int(j, "M", w, def.M));
        case Family::custom_exponent:
        {
            only_keys(j, w, {"family", "mu", "sigma2", "measure"});
            LevyTriplet t;
            t.mu = num("mu", 0);
            t.sigma2 = num("sigma2", 0);
            if (j.contains("measure"))
                t.nu = measure_from_json(j.at("measure"), w + ".measure");
            return LevyModel::custom(std::move(t));
        }
    }
    bad(w, "unhandled family");
}

json config_to_json(ExperimentConfig const& c)
{
    json j;
    j["model"] = model_to_json(c.model);
    j["d"] = c.d;
    j["wavelet"] = c.wavelet.name();
    j["cascade_depth"] = c.wavelet.cascade_depth;
    j["backend"] = c.backend ? std::string(to_string(*c.backend)) : std::string("auto");
    j["window"] = {{"T", c.T}, {"J", c.J}, {"guard_band", c.guard_band}};
    j["p_grid"] = c.p_grid;
    j["tau_ref"] = c.tau_ref;
    j["rho"] = c.rho;
    j["replicates"] = c.replicates;
    j["bootstrap"] = c.bootstrap;
    j["master_seed"] = c.master_seed;
    j["j_range"] = {{"lo", c.j_lo}, {"hi", c.j_hi < 0 ? json("auto") : json(c.j_hi)}};
    j["output_dir"] = c.output_dir;
    j["tolerances"] = {{"tau", c.tolerances.tau},
                       {"rho", c.tolerances.rho},
                       {"slope", c.tolerances.slope},
                       {"hill", c.tolerances.hill}};
    j["hill"] = {{"T", c.hill_T}, {"k", c.hill_k}};
    json dirac;
    dirac["x0"] = c.dirac.x0;
    dirac["tau_grid"] = c.dirac.tau_grid;
    dirac["p"] = c.dirac.p ? json(*c.dirac.p) : json(nullptr);
    j["dirac"] = dirac;
    j["dump_coefficients"] = c.dump_coefficients;
    return j;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text)
{
    json j;
    try
    {
        j = json::parse(text.begin(), text.end());
    }
    catch (json::exception const& e)
    {
        raise(ErrorCode::config_parse, std::string("invalid JSON: ") + e.what());
    }
    std::string const w = "config";
    only_keys(j, w,
              {"model", "d", "wavelet", "cascade_depth", "backend", "window", "p_grid", "tau_ref",
               "rho", "replicates", "bootstrap", "master_seed", "j_range", "output_dir",
               "tolerances", "hill", "dirac", "dump_coefficients"});
    ExperimentConfig c;
    if (j.contains("model"))
    {
        try
        {
            c.model = model_from_json(j.at("model"));
        }
        catch (Error const& e)
        {
            if (e.code() == ErrorCode::config_parse)
                throw;
            raise(e.code(), "model: " + bare_message(e));
        }
    }
    c.d = get_int(j, "d", w, c.d);
    int const depth = get_int(j, "cascade_depth", w, c.wavelet.cascade_depth);
    try
    {
        c.wavelet = wavelet_from_name(get_string(j, "wavelet", w, "haar"), depth);
        auto const backend = get_string(j, "backend", w, "auto");
        if (backend != "auto")
            c.backend = backend_from_string(backend);
    }
    catch (Error const& e)
    {
        if (e.code() == ErrorCode::config_parse)
            throw;
        bad(w, bare_message(e));
    }
    catch (std::logic_error const&)
    {
        bad(w + ".wavelet", "expected haar or db<N>");
    }
    if (j.contains("window"))
    {
        auto const& win = j.at("window");
        only_keys(win, "window", {"T", "J", "guard_band"});
        c.T = get_int(win, "T", "window", c.T);
        c.J = get_int(win, "J", "window", c.J);
        c.guard_band = get_int(win, "guard_band", "window", c.guard_band);
    }
    if (j.contains("p_grid"))
        c.p_grid = get_numbers(j, "p_grid", w);
    c.tau_ref = get_number(j, "tau_ref", w, c.tau_ref);
    c.rho = get_number(j, "rho", w, c.rho);
    c.replicates = get_int(j, "replicates", w, c.replicates);
    c.bootstrap = get_int(j, "bootstrap", w, c.bootstrap);
    c.master_seed = get_int(j, "master_seed", w, c.master_seed);
    if (j.contains("j_range"))
    {
        auto const& r = j.at("j_range");
        only_keys(r, "j_range", {"lo", "hi"});
        c.j_lo = get_int(r, "lo", "j_range", c.j_lo);
        if (r.contains("hi") && !(r.at("hi").is_string() && r.at("hi") == "auto"))
            c.j_hi = get_int(r, "hi", "j_range", c.j_hi);
    }
    c.output_dir = get_string(j, "output_dir", w, c.output_dir);
    if (j.contains("tolerances"))
    {
        auto const& t = j.at("tolerances");
        only_keys(t, "tolerances", {"tau", "rho", "slope", "hill"});
        c.tolerances.tau = get_number(t, "tau", "tolerances", c.tolerances.tau);
        c.tolerances.rho = get_number(t, "rho", "tolerances", c.tolerances.rho);
        c.tolerances.slope = get_number(t, "slope", "tolerances", c.tolerances.slope);
        c.tolerances.hill = get_number(t, "hill", "tolerances", c.tolerances.hill);
    }
    if (j.contains("hill"))
    {
        auto const& h = j.at("hill");
        only_keys(h, "hill", {"T", "k"});
        c.hill_T = get_int(h, "T", "hill", c.hill_T);
        c.hill_k = get_int(h, "k", "hill", c.hill_k);
    }
    if (j.contains("dirac"))
    {
        auto const& dj = j.at("dirac");
        only_keys(dj, "dirac", {"x0", "tau_grid", "p"});
        if (dj.contains("x0"))
        {
            auto const x0 = get_numbers(dj, "x0", "dirac");
            if (x0.empty() || x0.size() > 2)
                bad("dirac.x0", "expected one or two coordinates");
            c.dirac.x0 = {x0[0], x0.size() > 1 ? x0[1] : x0[0]};
        }
        if (dj.contains("tau_grid"))
            c.dirac.tau_grid = get_numbers(dj, "tau_grid", "dirac");
        if (dj.contains("p") && !dj.at("p").is_null())
            c.dirac.p = get_number(dj, "p", "dirac", 2);
    }
    if (j.contains("dump_coefficients"))
    {
        if (!j.at("dump_coefficients").is_boolean())
            bad("config.dump_coefficients", "expected a boolean");
        c.dump_coefficients = j.at("dump_coefficients").get<bool>();
    }

    // value checks that do not need a simulation
    if (c.d != 1 && c.d != 2)
        bad("config.d", "must be 1 or 2");
    if (c.p_grid.empty())
        bad("config.p_grid", "must not be empty");
    for (double p : c.p_grid)
        if (!(p > 0) || !std::isfinite(p))
            bad("config.p_grid", "entries must be finite and > 0");
    if (c.replicates < 1)
        bad("config.replicates", "must be >= 1");
    if (c.bootstrap < 1)
        bad("config.bootstrap", "must be >= 1");
    if (c.T < 1 || c.J < 0 || c.guard_band < 0)
        bad("config.window", "T >= 1, J >= 0 and guard_band >= 0 required");
    if (c.j_lo < 0)
        bad("config.j_range", "lo must be >= 0");
    if (c.backend && !backend_admissible(c.model.family(), *c.backend))
        bad("config.backend", std::string(to_string(*c.backend)) + " cannot simulate "
                                  + std::string(to_string(c.model.family())));
    return c;
}

std::string serialize_config(ExperimentConfig const& config)
{
    return config_to_json(config).dump(2);
}

namespace detail
{
json config_json(ExperimentConfig const& config)
{
    return config_to_json(config);
}

json model_json(LevyModel const& model)
{
    return model_to_json(model);
}

LevyModel model_from(json const& j)
{
    return model_from_json(j);
}

}  // namespace detail
}  // namespace levybesov
