// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "json.hpp"
#include "levybesov/experiment.hpp"

namespace levybesov::detail
{
using json = nlohmann::ordered_json;

//! JSON has no infinity; write it as the string "inf" (NaN as null).
inline json number_or_inf(double x)
{
    if (std::isnan(x))
        return nullptr;
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return x;
}

json config_json(ExperimentConfig const& config);
json model_json(LevyModel const& model);
LevyModel model_from(json const& j);

}  // namespace levybesov::detail
