// Copyright 2026 The spectator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPECTATOR_PARALLEL_HPP
#define SPECTATOR_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace spectator {

/// Number of workers used when a caller passes 0.
inline int default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

/// Evaluates f(0..count-1) on up to `workers` threads. Results come back in
/// index order whatever the scheduling. The first exception is rethrown.
template <class F>
auto parallel_map(size_t count, int workers, F &&f) -> std::vector<std::invoke_result_t<F &, size_t>> {
    using R = std::invoke_result_t<F &, size_t>;
    std::vector<R> out(count);
    if (workers <= 0) {
        workers = default_workers();
    }
    size_t threads = std::min<size_t>(static_cast<size_t>(workers), count);
    if (threads <= 1) {
        for (size_t k = 0; k < count; k++) {
            out[k] = f(k);
        }
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (size_t k; (k = next.fetch_add(1)) < count;) {
            try {
                out[k] = f(k);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; t++) {
        pool.emplace_back(work);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

}  // namespace spectator

#endif
