// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/error.hpp"

namespace levybesov
{
std::string_view to_string(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::invalid_parameter: return "InvalidParameter";
        case ErrorCode::no_closed_form: return "NoClosedForm";
        case ErrorCode::non_convergent_quadrature:
            return "NonConvergentQuadrature";
        case ErrorCode::degenerate_exponent: return "DegenerateExponent";
        case ErrorCode::moment_infinite: return "MomentInfinite";
        case ErrorCode::non_finite_tail_mass: return "NonFiniteTailMass";
        case ErrorCode::unsupported_order: return "UnsupportedOrder";
        case ErrorCode::non_convergence: return "NonConvergence";
        case ErrorCode::shape_mismatch: return "ShapeMismatch";
        case ErrorCode::unsampleable_family: return "UnsampleableFamily";
        case ErrorCode::backend_family_mismatch:
            return "BackendFamilyMismatch";
        case ErrorCode::window_too_small: return "WindowTooSmall";
        case ErrorCode::infinite_moment_requested:
            return "InfiniteMomentRequested";
        case ErrorCode::too_few_samples: return "TooFewSamples";
        case ErrorCode::config_parse: return "ConfigParse";
        case ErrorCode::io_failure: return "IoFailure";
        case ErrorCode::internal: return "Internal";
    }
    return "Unknown";
}

void raise(ErrorCode code, std::string const& message)
{
    throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace levybesov
