// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "levybesov/besov.hpp"

namespace levybesov::detail
{
//! %.17g, with "inf", "-inf" and "nan" spelled out.
std::string format_number(double x);

std::string per_scale_csv(std::span<ScaleContribution const> rows);

struct MomentRow
{
    int j = 0;
    double p = 0;
    double mean_abs_p = 0;
    double stderr_mean = 0;
};
std::string moments_csv(std::span<MomentRow const> rows);

//! Writes text, creating parent directories; throws IoFailure.
void write_text(std::filesystem::path const& path, std::string const& text);

std::string iso_timestamp_utc();

struct Series
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> y_lo;  //!< optional error bars, same length as y
    std::vector<double> y_hi;
    bool line = true;
    bool markers = true;
    bool dashed = false;
};

struct Chart
{
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

//! Standalone SVG with inline styles; non-finite points are dropped.
std::string render_svg(Chart const& chart);

}  // namespace levybesov::detail
