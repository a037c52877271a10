// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/levy_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "levybesov/error.hpp"
#include "levybesov/numerics.hpp"
#include "detail/levy_internal.hpp"

namespace levybesov
{
using namespace std::complex_literals;
using std::numbers::pi;

std::string format_index(double value)
{
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.precision(12);
    os << value;
    return os.str();
}

//---------------------------------------------------------------------------//
// Jump laws
//---------------------------------------------------------------------------//
namespace
{
struct Interval
{
    double lo;
    double hi;
};

// Sub-intervals of [a, b] inside a region.
std::vector<Interval> clip(double a, double b, JumpRegion region)
{
    std::vector<Interval> out;
    auto push = [&](double lo, double hi) {
        lo = std::max(lo, a);
        hi = std::min(hi, b);
        if (hi > lo)
            out.push_back({lo, hi});
    };
    switch (region)
    {
        case JumpRegion::all: push(a, b); break;
        case JumpRegion::small: push(-1, 1); break;
        case JumpRegion::large:
            push(-infinite_index, -1);
            push(1, infinite_index);
            break;
    }
    return out;
}

bool in_region(double x, JumpRegion region)
{
    switch (region)
    {
        case JumpRegion::all: return true;
        case JumpRegion::small: return std::abs(x) <= 1;
        case JumpRegion::large: return std::abs(x) > 1;
    }
    return false;
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

// Integral of exp(i xi t) over [lo, hi].
std::complex<double> interval_cf(double lo, double hi, double xi)
{
    double const half = (hi - lo) / 2;
    double const center = (hi + lo) / 2;
    double const w = xi * half;
    double const sinc = std::abs(w) < 1e-8 ? 1 - w * w / 6 : std::sin(w) / w;
    return std::exp(1i * (xi * center)) * (2 * half * sinc);
}

std::complex<double> normal_cf_on(double lo, double hi, double m, double s,
                                  double xi)
{
    auto density = [=](double t) {
        double const z = (t - m) / s;
        return std::exp(-z * z / 2) / (s * std::sqrt(2 * pi));
    };
    double const re = integrate_finite(
        [&](double t) { return std::cos(xi * t) * density(t); }, lo, hi, 1e-12);
    double const im = integrate_finite(
        [&](double t) { return std::sin(xi * t) * density(t); }, lo, hi, 1e-12);
    return {re, im};
}

}  // namespace

JumpLaw JumpLaw::point_mass(double at)
{
    return JumpLaw{Kind::point_mass, at, 0, JumpRegion::all};
}

JumpLaw JumpLaw::uniform(double lower, double upper)
{
    return JumpLaw{Kind::uniform, lower, upper, JumpRegion::all};
}

JumpLaw JumpLaw::normal(double mean, double sd)
{
    return JumpLaw{Kind::normal, mean, sd, JumpRegion::all};
}

JumpLaw JumpLaw::restricted(JumpRegion r) const
{
    if (region != JumpRegion::all && region != r)
        raise(ErrorCode::invalid_argument,
              "cannot restrict a jump law to a disjoint region");
    JumpLaw out = *this;
    out.region = r;
    return out;
}

double jump_mass(JumpLaw const& law)
{
    switch (law.kind)
    {
        case JumpLaw::Kind::point_mass:
            return in_region(law.a, law.region) ? 1.0 : 0.0;
        case JumpLaw::Kind::uniform: {
            double len = 0;
            for (auto iv : clip(law.a, law.b, law.region))
                len += iv.hi - iv.lo;
            return len / (law.b - law.a);
        }
        case JumpLaw::Kind::normal: {
            double const inner = normal_cdf((1 - law.a) / law.b)
                                 - normal_cdf((-1 - law.a) / law.b);
            switch (law.region)
            {
                case JumpRegion::all: return 1.0;
                case JumpRegion::small: return inner;
                case JumpRegion::large: return 1.0 - inner;
            }
        }
    }
    return 0;
}

std::complex<double> jump_cf(JumpLaw const& law, double xi)
{
    switch (law.kind)
    {
        case JumpLaw::Kind::point_mass:
            return in_region(law.a, law.region) ? std::exp(1i * (xi * law.a))
                                                 : 0.0;
        case JumpLaw::Kind::uniform: {
            std::complex<double> acc = 0;
            for (auto iv : clip(law.a, law.b, law.region))
                acc += interval_cf(iv.lo, iv.hi, xi);
            return acc / (law.b - law.a);
        }
        case JumpLaw::Kind::normal: {
            double const m = law.a;
            double const s = law.b;
            std::complex<double> const full
                = std::exp(1i * (xi * m) - s * s * xi * xi / 2);
            if (law.region == JumpRegion::all)
                return full;
            auto const inner = normal_cf_on(-1, 1, m, s, xi);
            return law.region == JumpRegion::small ? inner : full - inner;
        }
    }
    return 0;
}

double sample_jump(JumpLaw const& law, Engine& rng)
{
    switch (law.kind)
    {
        case JumpLaw::Kind::point_mass:
            if (!in_region(law.a, law.region))
                raise(ErrorCode::invalid_argument, "jump law region is empty");
            return law.a;
        case JumpLaw::Kind::uniform: {
            auto const parts = clip(law.a, law.b, law.region);
            if (parts.empty())
                raise(ErrorCode::invalid_argument, "jump law region is empty");
            double total = 0;
            for (auto iv : parts)
                total += iv.hi - iv.lo;
            double u = std::uniform_real_distribution<double>(0, total)(rng);
            for (auto iv : parts)
            {
                double const len = iv.hi - iv.lo;
                if (u < len)
                    return iv.lo + u;
                u -= len;
            }
            return parts.back().hi;
        }
        case JumpLaw::Kind::normal: {
            if (jump_mass(law) < 1e-6)
                raise(ErrorCode::invalid_argument,
                      "restricted normal law has negligible mass");
            std::normal_distribution<double> dist(law.a, law.b);
            for (;;)
            {
                double const x = dist(rng);
                if (in_region(x, law.region))
                    return x;
            }
        }
    }
    return 0;
}

//---------------------------------------------------------------------------//
// Power-law densities
//---------------------------------------------------------------------------//
namespace detail
{
namespace
{
constexpr double switch_point = 32;

// int_lo^hi -2 sin^2(u/2) u^-(alpha+1) du by direct quadrature.
double gap_direct(double alpha, double lo, double hi)
{
    return integrate_finite(
        [alpha](double u) {
            if (u < 1e-8)
                return -0.5 * std::pow(u, 1 - alpha);
            double const s = std::sin(u / 2);
            return -2 * s * s * std::pow(u, -alpha - 1);
        },
        lo,
        hi,
        1e-12);
}

}  // namespace

double cosine_tail_asymptotic(double a, double y)
{
    // int_y^inf exp(iu) u^-a du = i e^{iy} y^-a sum_n (a)_n (-i / y)^n
    std::complex<double> sum = 0;
    std::complex<double> term = 1;
    double prev = infinite_index;
    for (int n = 0; n < 200; ++n)
    {
        double const mag = std::abs(term);
        if (mag > prev)
            break;
        sum += term;
        if (mag < 1e-18 * std::abs(sum))
            break;
        prev = mag;
        term *= (a + n) * (-1i / y);
    }
    std::complex<double> const value = 1i * std::exp(1i * y) * std::pow(y, -a)
                                       * sum;
    return value.real();
}

double gap_tail(double alpha, double y)
{
    // int_y^inf (cos u - 1) u^-(alpha+1) du
    if (y >= switch_point)
        return cosine_tail_asymptotic(alpha + 1, y) - std::pow(y, -alpha) / alpha;
    return gap_direct(alpha, y, switch_point) + gap_tail(alpha, switch_point);
}

double gap_head(double alpha, double y)
{
    // int_0^y (cos u - 1) u^-(alpha+1) du
    if (y <= switch_point)
        return gap_direct(alpha, 0, y);
    return -cosine_gap_integral(alpha) - gap_tail(alpha, y);
}

double gap_between(double alpha, double lo, double hi)
{
    if (lo >= hi)
        return 0;
    if (lo == 0)
        return std::isinf(hi) ? -cosine_gap_integral(alpha) : gap_head(alpha, hi);
    if (std::isinf(hi))
        return gap_tail(alpha, lo);
    if (hi <= switch_point)
        return gap_direct(alpha, lo, hi);
    return gap_tail(alpha, lo) - gap_tail(alpha, hi);
}

double psi_piece(PowerLawPiece const& piece, double xi)
{
    double const x = std::abs(xi);
    if (x == 0)
        return 0;
    double const lo = piece.abs_lower * x;
    double const hi = std::isinf(piece.abs_upper) ? infinite_index
                                                  : piece.abs_upper * x;
    return 2 * piece.weight * std::pow(x, piece.alpha)
           * gap_between(piece.alpha, lo, hi);
}

}  // namespace detail

double cosine_gap_integral(double alpha)
{
    if (!(alpha > 0 && alpha < 2))
        raise(ErrorCode::invalid_parameter, "cosine gap needs alpha in (0,2)");
    if (alpha == 1)
        return pi / 2;
    return std::tgamma(1 - alpha) * std::cos(pi * alpha / 2) / alpha;
}

//---------------------------------------------------------------------------//
// Triplets
//---------------------------------------------------------------------------//
namespace
{
void validate_law(JumpLaw const& law)
{
    switch (law.kind)
    {
        case JumpLaw::Kind::point_mass:
            if (law.a == 0)
                raise(ErrorCode::invalid_parameter,
                      "jump law must not charge the origin");
            break;
        case JumpLaw::Kind::uniform:
            if (!(law.b > law.a))
                raise(ErrorCode::invalid_parameter, "uniform jumps need a < b");
            break;
        case JumpLaw::Kind::normal:
            if (!(law.b > 0))
                raise(ErrorCode::invalid_parameter, "normal jumps need sd > 0");
            break;
    }
    if (!std::isfinite(law.a) || !std::isfinite(law.b))
        raise(ErrorCode::invalid_parameter, "jump law parameters must be finite");
}

void validate_piece(PowerLawPiece const& piece)
{
    if (!(piece.weight > 0) || !std::isfinite(piece.weight))
        raise(ErrorCode::invalid_parameter, "density weight must be positive");
    if (!(piece.alpha > 0 && piece.alpha < 2))
        raise(ErrorCode::invalid_parameter, "density exponent must be in (0,2)");
    if (!(piece.abs_lower >= 0 && piece.abs_upper > piece.abs_lower))
        raise(ErrorCode::invalid_parameter, "density support must be nonempty");
}

// int min(1, t^2) dnu for one piece, by quadrature.
double piece_min1t2(PowerLawPiece const& piece)
{
    double total = 0;
    double const w = 2 * piece.weight;
    double const a = piece.alpha;
    if (piece.abs_lower < 1)
    {
        total += w
                 * integrate_finite(
                     [a](double t) { return std::pow(t, 1 - a); },
                     piece.abs_lower,
                     std::min(1.0, piece.abs_upper));
    }
    if (piece.abs_upper > 1)
    {
        double const lo = std::max(1.0, piece.abs_lower);
        auto f = [a](double t) { return std::pow(t, -a - 1); };
        total += w
                 * (std::isinf(piece.abs_upper)
                        ? integrate_to_infinity(f, lo)
                        : integrate_finite(f, lo, piece.abs_upper));
    }
    return total;
}

}  // namespace

void validate(LevyTriplet const& triplet)
{
    if (!(triplet.sigma2 >= 0) || !std::isfinite(triplet.sigma2))
        raise(ErrorCode::invalid_parameter, "sigma2 must be >= 0");
    if (!std::isfinite(triplet.mu))
        raise(ErrorCode::invalid_parameter, "mu must be finite");
    if (auto const* fin = std::get_if<FiniteMeasure>(&triplet.nu))
    {
        if (!(fin->rate > 0) || !std::isfinite(fin->rate))
            raise(ErrorCode::invalid_parameter, "jump rate must be > 0");
        validate_law(fin->law);
    }
    else if (auto const* dens = std::get_if<PowerLawDensity>(&triplet.nu))
    {
        for (auto const& piece : dens->pieces)
        {
            validate_piece(piece);
            if (!std::isfinite(piece_min1t2(piece)))
                raise(ErrorCode::invalid_parameter,
                      "Levy measure is not integrable against min(1, t^2)");
        }
    }
}

double tail_mass(LevyMeasure const& nu)
{
    if (auto const* fin = std::get_if<FiniteMeasure>(&nu))
    {
        if (fin->law.region == JumpRegion::small)
            return 0;
        return fin->rate * jump_mass(fin->law.restricted(JumpRegion::large));
    }
    if (auto const* dens = std::get_if<PowerLawDensity>(&nu))
    {
        double total = 0;
        for (auto const& piece : dens->pieces)
        {
            if (piece.abs_upper <= 1)
                continue;
            double const lo = std::max(1.0, piece.abs_lower);
            double const a = piece.alpha;
            auto f = [a](double t) { return std::pow(t, -a - 1); };
            try
            {
                total += 2 * piece.weight
                         * (std::isinf(piece.abs_upper)
                                ? integrate_to_infinity(f, lo)
                                : integrate_finite(f, lo, piece.abs_upper));
            }
            catch (Error const& e)
            {
                raise(ErrorCode::non_finite_tail_mass, e.what());
            }
        }
        if (!std::isfinite(total))
            raise(ErrorCode::non_finite_tail_mass, "tail mass diverges");
        return total;
    }
    return 0;
}

//---------------------------------------------------------------------------//
// Families
//---------------------------------------------------------------------------//
namespace
{
struct FamilyName
{
    Family family;
    std::string_view name;
};

constexpr FamilyName family_names[] = {
    {Family::gaussian, "Gaussian"},
    {Family::cauchy, "Cauchy"},
    {Family::symmetric_stable, "SymmetricStable"},
    {Family::sum_of_stables, "SumOfStables"},
    {Family::laplace, "Laplace"},
    {Family::symmetric_gamma, "SymmetricGamma"},
    {Family::compound_poisson, "CompoundPoisson"},
    {Family::layered_stable, "LayeredStable"},
    {Family::inverse_gaussian, "InverseGaussian"},
    {Family::farkas_single, "FarkasSingle"},
    {Family::farkas_double, "FarkasDouble"},
    {Family::custom_exponent, "CustomExponent"},
};

void require(bool ok, char const* message)
{
    if (!ok)
        raise(ErrorCode::invalid_parameter, message);
}

void require_farkas_m(double beta2, int M)
{
    require(beta2 > 0 && beta2 < 2, "beta2 must be in (0,2)");
    require(M >= 2 && M > 2 / (2 - beta2), "Farkas series needs M > 2/(2-beta2)");
}

}  // namespace

std::string_view to_string(Family f)
{
    for (auto const& fn : family_names)
        if (fn.family == f)
            return fn.name;
    return "Unknown";
}

Family family_from_string(std::string_view name)
{
    for (auto const& fn : family_names)
        if (fn.name == name)
            return fn.family;
    if (name == "SaS" || name == "SalphaS")
        return Family::symmetric_stable;
    raise(ErrorCode::invalid_parameter,
          "unknown noise family '" + std::string(name) + "'");
}

LevyModel LevyModel::gaussian(double sigma2)
{
    require(sigma2 > 0 && std::isfinite(sigma2), "sigma2 must be > 0");
    FamilyParams p;
    p.sigma2 = sigma2;
    return {Family::gaussian, p};
}

LevyModel LevyModel::cauchy(double gamma)
{
    require(gamma > 0 && std::isfinite(gamma), "gamma must be > 0");
    FamilyParams p;
    p.gamma = gamma;
    return {Family::cauchy, p};
}

LevyModel LevyModel::symmetric_stable(double alpha, double gamma)
{
    require(alpha > 0 && alpha <= 2, "alpha must be in (0,2]");
    require(gamma > 0 && std::isfinite(gamma), "gamma must be > 0");
    FamilyParams p;
    p.alpha = alpha;
    p.gamma = gamma;
    return {Family::symmetric_stable, p};
}

LevyModel LevyModel::sum_of_stables(double alpha1, double alpha2)
{
    require(alpha1 > 0 && alpha1 <= 2, "alpha1 must be in (0,2]");
    require(alpha2 > 0 && alpha2 <= 2, "alpha2 must be in (0,2]");
    FamilyParams p;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    return {Family::sum_of_stables, p};
}

LevyModel LevyModel::laplace(double sigma2)
{
    require(sigma2 > 0 && std::isfinite(sigma2), "sigma2 must be > 0");
    FamilyParams p;
    p.sigma2 = sigma2;
    p.lambda = 1;
    return {Family::laplace, p};
}

LevyModel LevyModel::symmetric_gamma(double sigma2, double lambda)
{
    require(sigma2 > 0 && std::isfinite(sigma2), "sigma2 must be > 0");
    require(lambda > 0 && std::isfinite(lambda), "lambda must be > 0");
    FamilyParams p;
    p.sigma2 = sigma2;
    p.lambda = lambda;
    return {Family::symmetric_gamma, p};
}

LevyModel LevyModel::compound_poisson(double lambda, JumpLaw jumps)
{
    require(lambda > 0 && std::isfinite(lambda), "lambda must be > 0");
    require(jumps.region == JumpRegion::all, "jump law must be unrestricted");
    validate_law(jumps);
    FamilyParams p;
    p.lambda = lambda;
    p.jumps = jumps;
    return {Family::compound_poisson, p};
}

LevyModel LevyModel::layered_stable(double alpha1, double alpha2)
{
    require(alpha1 > 0 && alpha1 < 2, "alpha1 must be in (0,2)");
    require(alpha2 > 0 && alpha2 < 2, "alpha2 must be in (0,2)");
    FamilyParams p;
    p.alpha1 = alpha1;
    p.alpha2 = alpha2;
    return {Family::layered_stable, p};
}

LevyModel LevyModel::inverse_gaussian()
{
    return {Family::inverse_gaussian, FamilyParams{}};
}

LevyModel LevyModel::farkas_single(double beta2, int M)
{
    require_farkas_m(beta2, M);
    FamilyParams p;
    p.beta2 = beta2;
    p.M = M;
    return {Family::farkas_single, p};
}

LevyModel LevyModel::farkas_double(double beta1, double beta2, int M)
{
    require(beta1 > 0 && beta1 <= beta2, "need 0 < beta1 <= beta2");
    require_farkas_m(beta2, M);
    FamilyParams p;
    p.beta1 = beta1;
    p.beta2 = beta2;
    p.M = M;
    return {Family::farkas_double, p};
}

LevyModel LevyModel::custom(LevyTriplet triplet)
{
    validate(triplet);
    LevyModel m{Family::custom_exponent, FamilyParams{}};
    m.triplet_ = std::move(triplet);
    return m;
}

LevyTriplet const* LevyModel::custom_triplet() const noexcept
{
    return triplet_ ? &*triplet_ : nullptr;
}

namespace
{
bool law_is_symmetric(JumpLaw const& law)
{
    switch (law.kind)
    {
        case JumpLaw::Kind::point_mass: return false;
        case JumpLaw::Kind::uniform: return law.a == -law.b;
        case JumpLaw::Kind::normal: return law.a == 0;
    }
    return false;
}

}  // namespace

bool LevyModel::symmetric() const
{
    switch (family_)
    {
        case Family::inverse_gaussian: return false;
        case Family::compound_poisson: return law_is_symmetric(params_.jumps);
        case Family::custom_exponent: {
            if (triplet_->mu != 0)
                return false;
            if (auto const* fin = std::get_if<FiniteMeasure>(&triplet_->nu))
                return law_is_symmetric(fin->law);
            return true;
        }
        default: return true;
    }
}

std::string LevyModel::describe() const
{
    std::ostringstream os;
    os << to_string(family_) << '(';
    auto const& p = params_;
    switch (family_)
    {
        case Family::gaussian:
        case Family::laplace: os << "sigma2=" << p.sigma2; break;
        case Family::cauchy: os << "gamma=" << p.gamma; break;
        case Family::symmetric_stable:
            os << "alpha=" << p.alpha << ", gamma=" << p.gamma;
            break;
        case Family::sum_of_stables:
        case Family::layered_stable:
            os << "alpha1=" << p.alpha1 << ", alpha2=" << p.alpha2;
            break;
        case Family::symmetric_gamma:
            os << "sigma2=" << p.sigma2 << ", lambda=" << p.lambda;
            break;
        case Family::compound_poisson:
            os << "lambda=" << p.lambda << ", jumps=";
            switch (p.jumps.kind)
            {
                case JumpLaw::Kind::point_mass:
                    os << "point_mass(" << p.jumps.a << ')';
                    break;
                case JumpLaw::Kind::uniform:
                    os << "uniform(" << p.jumps.a << ',' << p.jumps.b << ')';
                    break;
                case JumpLaw::Kind::normal:
                    os << "normal(" << p.jumps.a << ',' << p.jumps.b << ')';
                    break;
            }
            break;
        case Family::inverse_gaussian: break;
        case Family::farkas_single:
            os << "beta2=" << p.beta2 << ", M=" << p.M;
            break;
        case Family::farkas_double:
            os << "beta1=" << p.beta1 << ", beta2=" << p.beta2 << ", M=" << p.M;
            break;
        case Family::custom_exponent:
            os << "mu=" << triplet_->mu << ", sigma2=" << triplet_->sigma2;
            break;
    }
    os << ')';
    return os.str();
}

std::optional<LevyTriplet> triplet_of(LevyModel const& model)
{
    auto const& p = model.params();
    auto stable_piece = [](double alpha, double scale) {
        return PowerLawPiece{scale / (2 * cosine_gap_integral(alpha)), alpha};
    };
    switch (model.family())
    {
        case Family::gaussian: return LevyTriplet{0, p.sigma2, ZeroMeasure{}};
        case Family::cauchy:
            return LevyTriplet{
                0, 0, PowerLawDensity{{stable_piece(1, p.gamma)}}};
        case Family::symmetric_stable:
            if (p.alpha == 2)
                return LevyTriplet{0, 2 * p.gamma, ZeroMeasure{}};
            return LevyTriplet{
                0, 0, PowerLawDensity{{stable_piece(p.alpha, p.gamma)}}};
        case Family::sum_of_stables: {
            LevyTriplet t;
            PowerLawDensity dens;
            for (double a : {p.alpha1, p.alpha2})
            {
                if (a == 2)
                    t.sigma2 += 2;
                else
                    dens.pieces.push_back(stable_piece(a, 1));
            }
            if (!dens.pieces.empty())
                t.nu = dens;
            return t;
        }
        case Family::compound_poisson:
            return LevyTriplet{0, 0, FiniteMeasure{p.lambda, p.jumps}};
        case Family::layered_stable:
            return LevyTriplet{
                0,
                0,
                PowerLawDensity{{PowerLawPiece{1, p.alpha1, 0, 1},
                                 PowerLawPiece{1, p.alpha2, 1, infinite_index}}}};
        case Family::custom_exponent: return *model.custom_triplet();
        default: return std::nullopt;
    }
}

//---------------------------------------------------------------------------//
// Exponent
//---------------------------------------------------------------------------//

std::complex<double> evaluate_psi(LevyTriplet const& triplet, double xi)
{
    std::complex<double> psi = 1i * (triplet.mu * xi)
                               - triplet.sigma2 * xi * xi / 2;
    if (auto const* fin = std::get_if<FiniteMeasure>(&triplet.nu))
    {
        psi += fin->rate * (jump_cf(fin->law, xi) - jump_mass(fin->law));
    }
    else if (auto const* dens = std::get_if<PowerLawDensity>(&triplet.nu))
    {
        for (auto const& piece : dens->pieces)
            psi += detail::psi_piece(piece, xi);
    }
    return psi;
}

std::complex<double> evaluate_psi(LevyModel const& model, double xi)
{
    if (!std::isfinite(xi))
        raise(ErrorCode::invalid_argument, "frequency must be finite");
    auto const& p = model.params();
    double const ax = std::abs(xi);
    if (xi == 0)
        return 0;
    switch (model.family())
    {
        case Family::gaussian: return -p.sigma2 * xi * xi / 2;
        case Family::cauchy: return -p.gamma * ax;
        case Family::symmetric_stable: return -p.gamma * std::pow(ax, p.alpha);
        case Family::sum_of_stables:
            return -std::pow(ax, p.alpha1) - std::pow(ax, p.alpha2);
        case Family::laplace:
        case Family::symmetric_gamma:
            return -p.lambda * std::log1p(p.sigma2 * xi * xi / 2);
        case Family::compound_poisson:
            return p.lambda * (jump_cf(p.jumps, xi) - 1.0);
        case Family::layered_stable:
            return detail::psi_piece(PowerLawPiece{1, p.alpha1, 0, 1}, xi)
                   + detail::psi_piece(
                       PowerLawPiece{1, p.alpha2, 1, infinite_index}, xi);
        case Family::inverse_gaussian:
            return 1.0 - std::sqrt(std::complex<double>(1, -2 * xi));
        case Family::farkas_single:
            return -std::exp2(detail::farkas_log2_abs(
                p.beta2, p.M, Frequency{ax, 0, false}));
        case Family::farkas_double:
            return detail::psi_piece(PowerLawPiece{1, p.beta1, 0, 1}, xi)
                   - std::exp2(detail::farkas_log2_abs(
                       p.beta2, p.M, Frequency{ax, 0, false}));
        case Family::custom_exponent:
            return evaluate_psi(*model.custom_triplet(), xi);
    }
    return 0;
}

//---------------------------------------------------------------------------//
// Frequencies and log-magnitudes
//---------------------------------------------------------------------------//

double Frequency::value() const
{
    double const base = in_turns ? 2 * pi * mantissa : mantissa;
    return std::ldexp(base, exponent);
}

double Frequency::log2() const
{
    double const base = in_turns ? 2 * pi * mantissa : mantissa;
    return std::log2(std::abs(base)) + exponent;
}

namespace detail
{
double log2_add(double a, double b)
{
    if (std::isinf(a) && a < 0)
        return b;
    if (std::isinf(b) && b < 0)
        return a;
    double const hi = std::max(a, b);
    double const lo = std::min(a, b);
    return hi + std::log2(1 + std::exp2(lo - hi));
}

namespace
{
// log2 |sin(pi y)| for y = mantissa * 2^shift (turns).
double log2_sin_turns(double mantissa, double shift)
{
    double const mag = std::log2(std::abs(mantissa)) + shift;
    if (mag < -60)
        return std::log2(pi) + mag;
    if (mag >= 54)
        return -infinite_index;  // integer number of turns
    double const y = std::ldexp(std::abs(mantissa), static_cast<int>(shift));
    double const frac = y - std::floor(y);
    double const r = std::min(frac, 1 - frac);
    if (r == 0)
        return -infinite_index;
    return std::log2(std::sin(pi * r));
}

// log2 |sin(z)| for z = mantissa * 2^shift radians.
double log2_sin_radians(double mantissa, double shift)
{
    double const mag = std::log2(std::abs(mantissa)) + shift;
    if (mag < -60)
        return mag;
    if (mag > 1000)
        raise(ErrorCode::invalid_argument,
              "radian frequency out of range; use a turn-valued frequency");
    double const z = std::ldexp(std::abs(mantissa), static_cast<int>(shift));
    double const s = std::abs(std::sin(z));
    return s == 0 ? -infinite_index : std::log2(s);
}

}  // namespace

double farkas_log2_abs(double beta2, int M, Frequency xi)
{
    // sum_k 2^(beta2 M^k - k) (1 - cos(2^-M^k xi)), each term
    // 2^(beta2 M^k - k + 1) sin^2(2^-M^k xi / 2).
    double const log2_xi = xi.log2();
    double total = -infinite_index;
    double mk = 1;
    for (int k = 1; k <= 12; ++k)
    {
        mk *= M;
        double const shift = xi.exponent - mk;
        double const log2_sin = xi.in_turns
                                    ? log2_sin_turns(xi.mantissa, shift)
                                    : log2_sin_radians(xi.mantissa, shift - 1);
        double const term = beta2 * mk - k + 1 + 2 * log2_sin;
        total = log2_add(total, term);
        // Beyond the frequency, terms shrink doubly exponentially.
        if (mk > log2_xi + 64 && term < total - 40)
            break;
    }
    return total;
}

}  // namespace detail

double log2_abs_psi(LevyModel const& model, Frequency xi)
{
    auto const& p = model.params();
    double const l = xi.log2();
    switch (model.family())
    {
        case Family::gaussian: return std::log2(p.sigma2 / 2) + 2 * l;
        case Family::cauchy: return std::log2(p.gamma) + l;
        case Family::symmetric_stable: return std::log2(p.gamma) + p.alpha * l;
        case Family::sum_of_stables:
            return detail::log2_add(p.alpha1 * l, p.alpha2 * l);
        case Family::farkas_single:
            return detail::farkas_log2_abs(p.beta2, p.M, xi);
        case Family::farkas_double: {
            double const piece = detail::psi_piece(
                PowerLawPiece{1, p.beta1, 0, 1}, xi.value());
            return detail::log2_add(std::log2(std::abs(piece)),
                                    detail::farkas_log2_abs(p.beta2, p.M, xi));
        }
        default: {
            double const x = xi.value();
            if (!std::isfinite(x))
                raise(ErrorCode::invalid_argument, "frequency overflows double");
            return std::log2(std::abs(evaluate_psi(model, x)));
        }
    }
}

}  // namespace levybesov
