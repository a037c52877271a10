// Copyright 2026 levybesov developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace levybesov
{
//! requested > 0 wins, then LEVY_BESOV_THREADS, then 1.
int resolve_threads(int requested);

/*!
 * Run f(i) for i in [0, n) on up to `threads` workers.
 *
 * Work is claimed dynamically, so callers must write results into
 * per-index slots. If any call throws, the exception of the lowest failing
 * index is rethrown after all workers finish.
 */
template<class F>
void parallel_for(std::size_t n, int threads, F&& f)
{
    std::size_t const workers
        = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++)
        {
            try
            {
                f(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    for (auto const& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace levybesov
