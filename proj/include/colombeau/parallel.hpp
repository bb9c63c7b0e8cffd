// Copyright 2026 The colombeau-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace colombeau
{

/// Worker count for sweeps: hardware concurrency, capped by
/// COLOMBEAU_KIT_THREADS when set to a positive integer.
inline unsigned sweep_threads()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COLOMBEAU_KIT_THREADS"))
    {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

/// Evaluates f(0..count-1) on up to sweep_threads() workers; results keep
/// index order so output never depends on scheduling.
template <typename F>
auto parallel_map(std::size_t count, F f) -> std::vector<decltype(f(std::size_t{}))>
{
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(count);
    const std::size_t workers = std::min<std::size_t>(sweep_threads(), count);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::future<void>> jobs;
    jobs.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
    {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
        }));
    }
    for (auto& job : jobs) job.get();
    return out;
}

}  // namespace colombeau
