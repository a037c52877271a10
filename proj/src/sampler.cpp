// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/sampler.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "levybesov/error.hpp"
#include "levybesov/numerics.hpp"

namespace levybesov
{
using std::numbers::pi;

namespace
{
// Poisson means above this are drawn from the Gaussian limit.
constexpr double poisson_gaussian_switch = 1e6;
// Target number of explicit small jumps per draw.
constexpr double small_jump_budget = 256;
constexpr double min_truncation = 1e-4;

double uniform01(Engine& rng)
{
    return std::uniform_real_distribution<double>(0, 1)(rng);
}

// (0, 1]
double uniform01_open(Engine& rng)
{
    return 1.0 - uniform01(rng);
}

double random_sign(Engine& rng)
{
    return (rng() >> 63) ? 1.0 : -1.0;
}

long long poisson(double mean, Engine& rng)
{
    if (mean <= 0)
        return 0;
    return std::poisson_distribution<long long>(mean)(rng);
}

}  // namespace

double sample_standard_stable(double alpha, Engine& rng)
{
    double const v = pi * (uniform01(rng) - 0.5);
    if (alpha == 1)
        return std::tan(v);
    double w = 0;
    do
    {
        w = std::exponential_distribution<double>(1.0)(rng);
    } while (w == 0);
    return std::sin(alpha * v) / std::pow(std::cos(v), 1 / alpha)
           * std::pow(std::cos(v - alpha * v) / w, (1 - alpha) / alpha);
}

CellLawSampler::CellLawSampler(LevyModel model, double t)
    : model_(std::move(model)), t_(t)
{
    if (!(t > 0) || !std::isfinite(t))
        raise(ErrorCode::invalid_argument, "cell volume must be > 0");
    auto const& p = model_.params();
    double small_alpha = 0;
    switch (model_.family())
    {
        case Family::custom_exponent:
            raise(ErrorCode::unsampleable_family,
                  "no generic sampler for custom exponents");
        case Family::layered_stable: small_alpha = p.alpha1; break;
        case Family::farkas_double: small_alpha = p.beta1; [[fallthrough]];
        case Family::farkas_single: {
            double mk = 1;
            for (int k = 1; k <= 12; ++k)
            {
                mk *= p.M;
                double const log2_rate = p.beta2 * mk - k;  // c_k
                double const log2_var = log2_rate - 2 * mk;  // c_k a_k^2
                if (log2_var + std::log2(t) < -1074)
                    break;
                FarkasAtom atom;
                atom.size = std::exp2(-mk);
                double const half = t * std::exp2(std::min(log2_rate, 1000.0)) / 2;
                if (half > poisson_gaussian_switch)
                    atom.gaussian_var = t * std::exp2(log2_var);
                else
                    atom.half_rate = half;
                atoms_.push_back(atom);
            }
            break;
        }
        default: break;
    }
    if (small_alpha > 0)
    {
        // Explicit jumps in (eps, 1], about small_jump_budget per draw.
        double const a = small_alpha;
        eps_ = std::max(min_truncation,
                        std::pow(1 + small_jump_budget * a / (2 * t), -1 / a));
        small_rate_ = t * 2 * (std::pow(eps_, -a) - 1) / a;
        compensation_var_ = t * 2 * std::pow(eps_, 2 - a) / (2 - a);
    }
}

double CellLawSampler::small_jumps(double alpha, Engine& rng) const
{
    double x = 0;
    double const top = std::pow(eps_, -alpha);
    for (long long n = poisson(small_rate_, rng); n > 0; --n)
    {
        // inverse CDF of u^-(alpha+1) on (eps, 1]
        double const v = uniform01(rng);
        double const u = std::pow(top - v * (top - 1), -1 / alpha);
        x += random_sign(rng) * u;
    }
    if (compensation_var_ > 0)
        x += std::sqrt(compensation_var_) * std::normal_distribution<double>()(rng);
    return x;
}

double CellLawSampler::operator()(Engine& rng) const
{
    auto const& p = model_.params();
    double const t = t_;
    switch (model_.family())
    {
        case Family::gaussian:
            return std::normal_distribution<double>(0, std::sqrt(t * p.sigma2))(rng);
        case Family::cauchy: return p.gamma * t * std::tan(pi * (uniform01(rng) - 0.5));
        case Family::symmetric_stable:
            return std::pow(p.gamma * t, 1 / p.alpha)
                   * sample_standard_stable(p.alpha, rng);
        case Family::sum_of_stables:
            return std::pow(t, 1 / p.alpha1) * sample_standard_stable(p.alpha1, rng)
                   + std::pow(t, 1 / p.alpha2) * sample_standard_stable(p.alpha2, rng);
        case Family::laplace:
        case Family::symmetric_gamma: {
            // Gamma(lambda t, theta) differences: CF (1 + theta^2 xi^2)^-(lambda t)
            std::gamma_distribution<double> g(p.lambda * t, std::sqrt(p.sigma2 / 2));
            return g(rng) - g(rng);
        }
        case Family::compound_poisson: {
            double x = 0;
            for (long long n = poisson(p.lambda * t, rng); n > 0; --n)
                x += sample_jump(p.jumps, rng);
            return x;
        }
        case Family::inverse_gaussian: {
            // IG(mean t, shape t^2), Michael-Schucany-Haas
            double const mu = t;
            double const shape = t * t;
            double const nu = std::normal_distribution<double>()(rng);
            double const y = nu * nu;
            double const x = mu + mu * mu * y / (2 * shape)
                             - mu / (2 * shape)
                                   * std::sqrt(4 * mu * shape * y + mu * mu * y * y);
            return uniform01(rng) <= mu / (mu + x) ? x : mu * mu / x;
        }
        case Family::layered_stable: {
            double x = small_jumps(p.alpha1, rng);
            for (long long n = poisson(2 * t / p.alpha2, rng); n > 0; --n)
                x += random_sign(rng) * std::pow(uniform01_open(rng), -1 / p.alpha2);
            return x;
        }
        case Family::farkas_single:
        case Family::farkas_double: {
            double x = model_.family() == Family::farkas_double
                           ? small_jumps(p.beta1, rng)
                           : 0.0;
            for (auto const& atom : atoms_)
            {
                if (atom.gaussian_var > 0)
                {
                    x += std::sqrt(atom.gaussian_var)
                         * std::normal_distribution<double>()(rng);
                }
                else
                {
                    auto const up = poisson(atom.half_rate, rng);
                    auto const down = poisson(atom.half_rate, rng);
                    x += atom.size * static_cast<double>(up - down);
                }
            }
            return x;
        }
        case Family::custom_exponent: break;
    }
    raise(ErrorCode::unsampleable_family, model_.describe());
}

double sample_cell_integral(CellLawSampler const& sampler, Engine& rng)
{
    return sampler(rng);
}

//---------------------------------------------------------------------------//
// Impulses
//---------------------------------------------------------------------------//

double Box::volume() const
{
    double v = 1;
    for (int i = 0; i < d; ++i)
        v *= hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)];
    return v;
}

ImpulseField sample_impulse_field(LevyModel const& model, Box const& box, Engine& rng)
{
    if (model.family() != Family::compound_poisson)
        raise(ErrorCode::backend_family_mismatch,
              "impulse fields need a compound Poisson model");
    if (box.d < 1 || box.d > 2 || !(box.volume() > 0))
        raise(ErrorCode::invalid_argument, "impulse box must be nonempty, d in {1,2}");
    auto const& p = model.params();
    ImpulseField field;
    field.box = box;
    field.rate = p.lambda;
    auto const n = poisson(p.lambda * box.volume(), rng);
    field.positions.reserve(static_cast<std::size_t>(n));
    field.amplitudes.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
    {
        std::array<double, 2> x{0, 0};
        for (int a = 0; a < box.d; ++a)
        {
            auto const ax = static_cast<std::size_t>(a);
            x[ax] = box.lo[ax] + (box.hi[ax] - box.lo[ax]) * uniform01(rng);
        }
        field.positions.push_back(x);
        field.amplitudes.push_back(sample_jump(p.jumps, rng));
    }
    return field;
}

//---------------------------------------------------------------------------//
// CF validation
//---------------------------------------------------------------------------//

std::vector<double> default_cf_grid(LevyModel const& model, double t)
{
    // scale s: first xi = 2^(k/4) where t |Psi| reaches 1
    double s = 4;
    for (int k = -40; k <= 40; ++k)
    {
        double const xi = std::exp2(k / 4.0);
        if (t * std::abs(evaluate_psi(model, xi)) >= 1)
        {
            s = xi;
            break;
        }
    }
    std::vector<double> grid;
    for (int i = 1; i <= 16; ++i)
        grid.push_back(s * i / 8.0);
    return grid;
}

CfValidation compare_empirical_cf(std::span<double const> samples,
                                  LevyModel const& model,
                                  double t_reference,
                                  std::span<double const> xi_grid)
{
    CfValidation out;
    out.n = samples.size();
    out.xi_grid.assign(xi_grid.begin(), xi_grid.end());
    out.threshold = 5 / std::sqrt(static_cast<double>(out.n));
    for (double xi : xi_grid)
    {
        CompensatedSum re, im;
        for (double x : samples)
        {
            re.add(std::cos(xi * x));
            im.add(std::sin(xi * x));
        }
        auto const n = static_cast<double>(out.n);
        std::complex<double> const empirical(re.value() / n, im.value() / n);
        auto const exact = std::exp(t_reference * evaluate_psi(model, xi));
        double const dev = std::abs(empirical - exact);
        out.deviation.push_back(dev);
        out.sup_deviation = std::max(out.sup_deviation, dev);
    }
    out.passed = out.sup_deviation <= out.threshold;
    return out;
}

CfValidation validate_sampler_cf(CellLawSampler const& sampler,
                                 std::size_t n,
                                 std::span<double const> xi_grid,
                                 Engine& rng)
{
    if (n < 10000)
        raise(ErrorCode::invalid_argument, "CF validation needs n >= 1e4");
    std::vector<double> samples(n);
    for (auto& x : samples)
        x = sampler(rng);
    return compare_empirical_cf(samples, sampler.model(), sampler.volume(), xi_grid);
}

}  // namespace levybesov
