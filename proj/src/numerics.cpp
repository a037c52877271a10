// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "levybesov/error.hpp"

namespace levybesov
{
namespace
{
// Boost error estimates are conservative; reject only clear failures.
void check_quadrature(double value, double error, double l1, char const* what)
{
    double const scale = std::max(l1, std::abs(value));
    if (!std::isfinite(value) || !(error <= 1e-6 * scale + 1e-300))
    {
        std::ostringstream os;
        os << what << ": error estimate " << error << " for value " << value;
        raise(ErrorCode::non_convergent_quadrature, os.str());
    }
}

// Integrands may themselves integrate (nested quadrature), so each nesting
// depth gets its own integrator instance.
template<class Q>
class NestedPool
{
  public:
    class Lease
    {
      public:
        explicit Lease(NestedPool& pool) : pool_(pool)
        {
            if (pool_.items_.size() <= pool_.depth_)
                pool_.items_.emplace_back();
            q_ = &pool_.items_[pool_.depth_++];
        }
        ~Lease() { --pool_.depth_; }
        Q& get() { return *q_; }

      private:
        NestedPool& pool_;
        Q* q_;
    };

  private:
    std::deque<Q> items_;
    std::size_t depth_ = 0;
};

}  // namespace

//---------------------------------------------------------------------------//
double integrate_finite(std::function<double(double)> const& f,
                        double a,
                        double b,
                        double rel_tol)
{
    if (a == b)
        return 0;
    static thread_local NestedPool<boost::math::quadrature::tanh_sinh<double>>
        pool;
    decltype(pool)::Lease lease(pool);
    auto& integrator = lease.get();
    double error = 0;
    double l1 = 0;
    double value = 0;
    try
    {
        value = integrator.integrate(f, a, b, rel_tol, &error, &l1);
    }
    catch (std::exception const& e)
    {
        raise(ErrorCode::non_convergent_quadrature,
              std::string("finite integral: ") + e.what());
    }
    check_quadrature(value, error, l1, "finite integral");
    return value;
}

//---------------------------------------------------------------------------//
double integrate_to_infinity(std::function<double(double)> const& f,
                             double a,
                             double rel_tol)
{
    static thread_local NestedPool<boost::math::quadrature::exp_sinh<double>>
        pool;
    decltype(pool)::Lease lease(pool);
    auto& integrator = lease.get();
    double error = 0;
    double l1 = 0;
    double value = 0;
    try
    {
        value = integrator.integrate(f,
                                     a,
                                     std::numeric_limits<double>::infinity(),
                                     rel_tol,
                                     &error,
                                     &l1);
    }
    catch (std::exception const& e)
    {
        raise(ErrorCode::non_convergent_quadrature,
              std::string("half-line integral: ") + e.what());
    }
    check_quadrature(value, error, l1, "half-line integral");
    return value;
}

//---------------------------------------------------------------------------//
double integrate_fourier_cos(std::function<double(double)> const& f,
                             double omega)
{
    static thread_local boost::math::quadrature::ooura_fourier_cos<double>
        integrator(1e-12, 10);
    auto [value, rel_error] = integrator.integrate(f, omega);
    if (!std::isfinite(value) || rel_error > 1e-6)
        raise(ErrorCode::non_convergent_quadrature,
              "Fourier cosine integral did not converge");
    return value;
}

double integrate_fourier_sin(std::function<double(double)> const& f,
                             double omega)
{
    static thread_local boost::math::quadrature::ooura_fourier_sin<double>
        integrator(1e-12, 10);
    auto [value, rel_error] = integrator.integrate(f, omega);
    if (!std::isfinite(value) || rel_error > 1e-6)
        raise(ErrorCode::non_convergent_quadrature,
              "Fourier sine integral did not converge");
    return value;
}

//---------------------------------------------------------------------------//
void CompensatedSum::add(double x) noexcept
{
    double const t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

//---------------------------------------------------------------------------//
LinearFit fit_line(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size() || x.size() < 2)
        raise(ErrorCode::invalid_argument, "fit_line needs >= 2 paired points");
    auto const n = static_cast<double>(x.size());
    double const mx = mean(x);
    double const my = mean(y);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0)
        raise(ErrorCode::invalid_argument, "fit_line: degenerate abscissae");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double const sse = std::max(0.0, syy - fit.slope * sxy);
    fit.r2 = syy > 0 ? std::clamp(1 - sse / syy, 0.0, 1.0) : 1.0;
    fit.slope_se = x.size() > 2 ? std::sqrt(sse / (n - 2) / sxx) : 0.0;
    return fit;
}

double mean(std::span<double const> v)
{
    if (v.empty())
        return 0;
    CompensatedSum s;
    for (double x : v)
        s.add(x);
    return s.value() / static_cast<double>(v.size());
}

double variance(std::span<double const> v)
{
    if (v.size() < 2)
        return 0;
    double const m = mean(v);
    CompensatedSum s;
    for (double x : v)
        s.add((x - m) * (x - m));
    return s.value() / static_cast<double>(v.size() - 1);
}

double quantile(std::vector<double> v, double q)
{
    if (v.empty())
        raise(ErrorCode::invalid_argument, "quantile of empty sample");
    std::sort(v.begin(), v.end());
    double const pos = std::clamp(q, 0.0, 1.0)
                       * static_cast<double>(v.size() - 1);
    auto const lo = static_cast<std::size_t>(std::floor(pos));
    auto const hi = std::min(lo + 1, v.size() - 1);
    double const frac = pos - static_cast<double>(lo);
    return v[lo] + frac * (v[hi] - v[lo]);
}

//---------------------------------------------------------------------------//
double kolmogorov_survival(double x)
{
    using std::numbers::pi;
    if (x <= 0)
        return 1;
    if (x < 0.3)
    {
        // Jacobi-transformed series converges fast for small x.
        double s = 0;
        for (int k = 1; k <= 10; ++k)
        {
            double const m = 2 * k - 1;
            s += std::exp(-m * m * pi * pi / (8 * x * x));
        }
        return std::clamp(1 - std::sqrt(2 * pi) / x * s, 0.0, 1.0);
    }
    double s = 0;
    for (int k = 1; k <= 100; ++k)
    {
        double const term = std::exp(-2.0 * k * k * x * x);
        s += (k % 2 == 1 ? term : -term);
        if (term < 1e-17)
            break;
    }
    return std::clamp(2 * s, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b)
{
    if (a.empty() || b.empty())
        raise(ErrorCode::invalid_argument, "KS test needs two nonempty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto const na = static_cast<double>(a.size());
    auto const nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size())
    {
        double const x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x)
            ++i;
        while (j < b.size() && b[j] == x)
            ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    double const ne = na * nb / (na + nb);
    double const sq = std::sqrt(ne);
    KsResult r;
    r.statistic = d;
    r.p_value = kolmogorov_survival((sq + 0.12 + 0.11 / sq) * d);
    return r;
}

double chi_square_survival(double statistic, double dof)
{
    if (statistic <= 0)
        return 1;
    return boost::math::gamma_q(dof / 2, statistic / 2);
}

}  // namespace levybesov
