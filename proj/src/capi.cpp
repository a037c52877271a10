// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/levybesov.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "detail/json_util.hpp"
#include "levybesov/error.hpp"
#include "levybesov/experiment.hpp"

struct lb_model
{
    levybesov::LevyModel model;
};

struct lb_field
{
    levybesov::CoefficientField field;
};

namespace
{
thread_local std::string last_error;

template<class F>
lb_status guarded(F&& f)
{
    try
    {
        f();
        last_error.clear();
        return LB_OK;
    }
    catch (levybesov::Error const& e)
    {
        last_error = e.what();
        return static_cast<lb_status>(e.code());
    }
    catch (std::bad_alloc const&)
    {
        last_error = "out of memory";
        return LB_INTERNAL;
    }
    catch (std::exception const& e)
    {
        last_error = e.what();
        return LB_INTERNAL;
    }
}

void need(void const* p, char const* name)
{
    if (!p)
        levybesov::raise(levybesov::ErrorCode::invalid_argument,
                         std::string(name) + " must not be null");
}

void copy_out(std::string const& s, char* buf, size_t cap, size_t* needed)
{
    if (needed)
        *needed = s.size() + 1;
    if (buf && cap > 0)
    {
        size_t const n = std::min(cap - 1, s.size());
        std::memcpy(buf, s.data(), n);
        buf[n] = '\0';
    }
}

}  // namespace

extern "C" {

const char* lb_version(void)
{
    return "0.1.0";
}

const char* lb_status_name(lb_status status)
{
    if (status == LB_OK)
        return "Ok";
    if (status < LB_INVALID_ARGUMENT || status > LB_INTERNAL)
        return "Unknown";
    // string_view literals from to_string are NUL-terminated
    return levybesov::to_string(static_cast<levybesov::ErrorCode>(status)).data();
}

const char* lb_last_error(void)
{
    return last_error.c_str();
}

lb_status lb_model_create(const char* model_json, lb_model** out)
{
    return guarded([&] {
        need(model_json, "model_json");
        need(out, "out");
        *out = nullptr;
        levybesov::detail::json j;
        try
        {
            j = levybesov::detail::json::parse(model_json);
        }
        catch (levybesov::detail::json::exception const& e)
        {
            levybesov::raise(levybesov::ErrorCode::config_parse,
                             std::string("invalid JSON: ") + e.what());
        }
        *out = new lb_model{levybesov::detail::model_from(j)};
    });
}

void lb_model_destroy(lb_model* model)
{
    delete model;
}

lb_status lb_model_indices(const lb_model* model, lb_indices* out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        auto const idx = levybesov::theory_indices(model->model);
        *out = {idx.beta_inf, idx.beta_inf_lower, idx.p_max, idx.pruitt_beta0,
                idx.heuristic ? 1 : 0};
    });
}

lb_status lb_model_describe(const lb_model* model, char* buf, size_t cap, size_t* needed)
{
    return guarded([&] {
        need(model, "model");
        copy_out(model->model.describe(), buf, cap, needed);
    });
}

lb_status lb_model_exponent(const lb_model* model, double xi, double* re, double* im)
{
    return guarded([&] {
        need(model, "model");
        auto const v = levybesov::evaluate_psi(model->model, xi);
        if (re)
            *re = v.real();
        if (im)
            *im = v.imag();
    });
}

lb_status lb_field_sample(const lb_model* model,
                          int d,
                          int T,
                          int J,
                          int wavelet_order,
                          const char* backend,
                          uint64_t seed,
                          uint64_t replicate,
                          lb_field** out)
{
    return guarded([&] {
        need(model, "model");
        need(out, "out");
        *out = nullptr;
        auto const b = (!backend || std::strcmp(backend, "auto") == 0)
                           ? levybesov::default_backend(model->model.family())
                           : levybesov::backend_from_string(backend);
        levybesov::SimulationWindow const w{d, T, J, 0};
        levybesov::WaveletSpec const spec{wavelet_order, 12};
        *out = new lb_field{
            levybesov::sample_coefficient_field(model->model, w, spec, b, seed, replicate)};
    });
}

void lb_field_destroy(lb_field* field)
{
    delete field;
}

lb_status lb_field_block_count(const lb_field* field, size_t* count)
{
    return guarded([&] {
        need(field, "field");
        need(count, "count");
        *count = field->field.blocks.size();
    });
}

lb_status lb_field_block(const lb_field* field,
                         size_t index,
                         int* j,
                         unsigned* gender,
                         const double** values,
                         size_t* count)
{
    return guarded([&] {
        need(field, "field");
        if (index >= field->field.blocks.size())
            levybesov::raise(levybesov::ErrorCode::invalid_argument, "block index out of range");
        auto const& b = field->field.blocks[index];
        if (j)
            *j = b.j;
        if (gender)
            *gender = b.gender;
        if (values)
            *values = b.values.data();
        if (count)
            *count = b.values.size();
    });
}

lb_status lb_field_scale_terms(const lb_field* field,
                               double p,
                               double tau,
                               double rho,
                               double* out,
                               size_t cap,
                               size_t* n)
{
    return guarded([&] {
        need(field, "field");
        auto const terms = levybesov::per_scale_contributions(
            field->field, {p, tau, rho, field->field.d});
        if (n)
            *n = terms.size();
        if (out)
            for (size_t i = 0; i < terms.size() && i < cap; ++i)
                out[i] = terms[i].T_j;
    });
}

lb_status lb_config_normalize(const char* config_json, char* buf, size_t cap, size_t* needed)
{
    return guarded([&] {
        need(config_json, "config_json");
        copy_out(levybesov::serialize_config(levybesov::parse_config(config_json)), buf, cap,
                 needed);
    });
}

lb_status lb_run_experiment(const char* config_json,
                            const char* command,
                            const char* out_dir,
                            const uint64_t* seed_override,
                            int threads,
                            int* exit_code)
{
    if (exit_code)
        *exit_code = 1;
    return guarded([&] {
        need(config_json, "config_json");
        need(command, "command");
        auto config = levybesov::parse_config(config_json);
        auto const cmd = levybesov::command_from_string(command);
        levybesov::RunOptions opt;
        if (out_dir)
            opt.out_dir = out_dir;
        if (seed_override)
            opt.seed = *seed_override;
        opt.threads = threads;
        int const code = levybesov::run_experiment(std::move(config), cmd, opt);
        if (exit_code)
            *exit_code = code;
    });
}

}  // extern "C"
