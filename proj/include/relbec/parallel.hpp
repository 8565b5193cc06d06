/* Copyright 2026 The relbec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/** @file parallel.hpp
 *  Order-preserving parallel map used by the sweep operations.
 */

#ifndef RELBEC_PARALLEL_HPP
#define RELBEC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace relbec {

/** Evaluates fn(0), ..., fn(n - 1) on up to `threads` workers and returns
 *  the results in index order. If any call throws, the exception from the
 *  lowest failing index is rethrown, so failures are reported the same way
 *  regardless of scheduling. threads == 0 means hardware concurrency. */
template <class Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn &&fn) -> std::vector<std::invoke_result_t<Fn &, std::size_t>>
{
    using Result = std::invoke_result_t<Fn &, std::size_t>;
    std::vector<Result> results(n);
    std::vector<std::exception_ptr> failures(n);

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    for (const auto &failure : failures)
        if (failure)
            std::rethrow_exception(failure);
    return results;
}

}  // namespace relbec

#endif
