// Copyright 2026 The nihobent Authors.
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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nihobent {

// Parses NIHOBENT_THREADS. nullopt when unset; kInvalidArgument unless it is
// a positive integer.
std::optional<int> threads_from_env();

// Worker count: NIHOBENT_THREADS if set, else hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, count) on up to worker_count() threads. Results
// land at their own index, so ordering never depends on scheduling. The
// first exception (by index) is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

template <typename T>
std::vector<T> parallel_map(std::size_t count,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  parallel_for(count, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace nihobent
