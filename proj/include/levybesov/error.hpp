// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levybesov
{
//---------------------------------------------------------------------------//
/*!
 * Error categories raised by the library.
 *
 * The numeric values are part of the C API (see levybesov.h) and must not be
 * reordered.
 */
enum class ErrorCode : int
{
    invalid_argument = 1,
    invalid_parameter,
    no_closed_form,
    non_convergent_quadrature,
    degenerate_exponent,
    moment_infinite,
    non_finite_tail_mass,
    unsupported_order,
    non_convergence,
    shape_mismatch,
    unsampleable_family,
    backend_family_mismatch,
    window_too_small,
    infinite_moment_requested,
    too_few_samples,
    config_parse,
    io_failure,
    internal,
};

std::string_view to_string(ErrorCode code);

//---------------------------------------------------------------------------//
//! Exception carrying an ErrorCode.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, std::string const& message);

}  // namespace levybesov
