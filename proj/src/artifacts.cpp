// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "detail/artifacts.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "levybesov/error.hpp"

namespace levybesov::detail
{
namespace
{
constexpr std::array<char const*, 6> palette{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string xml_escape(std::string const& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string coord(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

// roughly five round ticks covering [lo, hi]
std::vector<double> ticks(double lo, double hi)
{
    double const span = hi - lo;
    double const raw = span / 5;
    double const mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
    {
        step = m * mag;
        if (span / step <= 6)
            break;
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step)
        out.push_back(t);
    return out;
}

}  // namespace

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string per_scale_csv(std::span<ScaleContribution const> rows)
{
    std::string out = "j,gender_count,term_count,T_j,log2_T_j\n";
    for (auto const& r : rows)
    {
        out += std::to_string(r.j) + ',' + std::to_string(r.gender_count) + ','
               + std::to_string(r.term_count) + ',' + format_number(r.T_j) + ','
               + format_number(r.log2_T()) + '\n';
    }
    return out;
}

std::string moments_csv(std::span<MomentRow const> rows)
{
    std::string out = "j,p,mean_abs_p,log2_mean,stderr\n";
    for (auto const& r : rows)
    {
        double const l2 = r.mean_abs_p > 0 ? std::log2(r.mean_abs_p)
                                           : -std::numeric_limits<double>::infinity();
        out += std::to_string(r.j) + ',' + format_number(r.p) + ',' + format_number(r.mean_abs_p)
               + ',' + format_number(l2) + ',' + format_number(r.stderr_mean) + '\n';
    }
    return out;
}

void write_text(std::filesystem::path const& path, std::string const& text)
{
    std::error_code ec;
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
        raise(ErrorCode::io_failure, "cannot create " + path.parent_path().string() + ": "
                                         + ec.message());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        raise(ErrorCode::io_failure, "cannot open " + path.string() + " for writing");
    os << text;
    os.close();
    if (!os)
        raise(ErrorCode::io_failure, "write failed: " + path.string());
}

std::string iso_timestamp_utc()
{
    auto const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string render_svg(Chart const& chart)
{
    constexpr double W = 640, H = 420;
    constexpr double left = 70, right = 170, top = 40, bottom = 55;
    double const pw = W - left - right;
    double const ph = H - top - bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto widen = [](double& lo, double& hi, double v) {
        if (std::isfinite(v))
        {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    };
    for (auto const& s : chart.series)
    {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
        {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            widen(xmin, xmax, s.x[i]);
            widen(ymin, ymax, s.y[i]);
            if (i < s.y_lo.size())
                widen(ymin, ymax, s.y_lo[i]);
            if (i < s.y_hi.size())
                widen(ymin, ymax, s.y_hi[i]);
        }
    }
    if (!std::isfinite(xmin))
    {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax - xmin < 1e-12)
    {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-12)
    {
        ymin -= 0.5;
        ymax += 0.5;
    }
    double const ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
       << "<g style=\"font-family:sans-serif;font-size:12px;fill:#222222\">\n"
       << "<text x=\"" << coord(left + pw / 2) << "\" y=\"22\" style=\"text-anchor:middle;font-size:14px\">"
       << xml_escape(chart.title) << "</text>\n";

    // axes and grid
    os << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top) << "\" width=\"" << coord(pw)
       << "\" height=\"" << coord(ph) << "\" style=\"fill:none;stroke:#444444\"/>\n";
    for (double t : ticks(xmin, xmax))
    {
        os << "<line x1=\"" << coord(sx(t)) << "\" y1=\"" << coord(top) << "\" x2=\""
           << coord(sx(t)) << "\" y2=\"" << coord(top + ph)
           << "\" style=\"stroke:#dddddd\"/>\n"
           << "<text x=\"" << coord(sx(t)) << "\" y=\"" << coord(top + ph + 16)
           << "\" style=\"text-anchor:middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(ymin, ymax))
    {
        os << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(sy(t)) << "\" x2=\""
           << coord(left + pw) << "\" y2=\"" << coord(sy(t))
           << "\" style=\"stroke:#dddddd\"/>\n"
           << "<text x=\"" << coord(left - 6) << "\" y=\"" << coord(sy(t) + 4)
           << "\" style=\"text-anchor:end\">" << tick_label(t) << "</text>\n";
    }
    os << "<text x=\"" << coord(left + pw / 2) << "\" y=\"" << coord(H - 12)
       << "\" style=\"text-anchor:middle\">" << xml_escape(chart.x_label) << "</text>\n"
       << "<text x=\"18\" y=\"" << coord(top + ph / 2) << "\" transform=\"rotate(-90 18 "
       << coord(top + ph / 2) << ")\" style=\"text-anchor:middle\">" << xml_escape(chart.y_label)
       << "</text>\n";

    for (std::size_t si = 0; si < chart.series.size(); ++si)
    {
        auto const& s = chart.series[si];
        char const* color = palette[si % palette.size()];
        std::string points;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
        {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            points += coord(sx(s.x[i])) + ',' + coord(sy(s.y[i])) + ' ';
        }
        if (s.line && !points.empty())
        {
            os << "<polyline points=\"" << points << "\" style=\"fill:none;stroke:" << color
               << ";stroke-width:1.5" << (s.dashed ? ";stroke-dasharray:6 4" : "") << "\"/>\n";
        }
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
        {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            if (i < s.y_lo.size() && i < s.y_hi.size() && std::isfinite(s.y_lo[i])
                && std::isfinite(s.y_hi[i]))
            {
                os << "<line x1=\"" << coord(sx(s.x[i])) << "\" y1=\"" << coord(sy(s.y_lo[i]))
                   << "\" x2=\"" << coord(sx(s.x[i])) << "\" y2=\"" << coord(sy(s.y_hi[i]))
                   << "\" style=\"stroke:" << color << "\"/>\n";
            }
            if (s.markers)
            {
                os << "<circle cx=\"" << coord(sx(s.x[i])) << "\" cy=\"" << coord(sy(s.y[i]))
                   << "\" r=\"3\" style=\"fill:" << color << "\"/>\n";
            }
        }
        double const ly = top + 14 + 18 * static_cast<double>(si);
        os << "<line x1=\"" << coord(left + pw + 12) << "\" y1=\"" << coord(ly - 4) << "\" x2=\""
           << coord(left + pw + 32) << "\" y2=\"" << coord(ly - 4) << "\" style=\"stroke:" << color
           << ";stroke-width:2" << (s.dashed ? ";stroke-dasharray:4 3" : "") << "\"/>\n"
           << "<text x=\"" << coord(left + pw + 38) << "\" y=\"" << coord(ly) << "\">"
           << xml_escape(s.label) << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace levybesov::detail
