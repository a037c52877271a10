// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#include "levybesov/parallel.hpp"

#include <cstdlib>
#include <string>

namespace levybesov
{
int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    if (char const* env = std::getenv("LEVY_BESOV_THREADS"))
    {
        try
        {
            int const n = std::stoi(env);
            if (n > 0)
                return n;
        }
        catch (std::exception const&)
        {
        }
    }
    return 1;
}

}  // namespace levybesov
