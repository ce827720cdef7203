// Copyright 2026-present the opuc project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace opuc {

/// Worker count: OPUC_THREADS if set, else the hardware concurrency.
inline unsigned default_threads() {
    if (const char* env = std::getenv("OPUC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

/**
 * Calls f(i) for i in [0, count) on up to `threads` workers with a strided
 * partition. f must write only to slot i of its outputs; callers merge in
 * index order, so results do not depend on the worker count. The first
 * exception thrown by any f is rethrown.
 */
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(
                                                           std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            f(i);
        }
        return;
    }
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!err) {
                        err = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
}

}  // namespace opuc
