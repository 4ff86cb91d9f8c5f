// Copyright 2026 The Emulator Forge Authors
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

#ifndef FORGE_PARALLEL_HPP_
#define FORGE_PARALLEL_HPP_

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace forge {

// Worker count: EMULATOR_FORGE_THREADS if set, else hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("EMULATOR_FORGE_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs body(i) for i in [0, count). Iterations must be independent; the
// per-index outputs make the result deterministic regardless of schedule.
template <typename Body>
void parallel_for(int count, Body&& body) {
  int threads = thread_count();
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  if (threads > count) threads = count;
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace forge

#endif  // FORGE_PARALLEL_HPP_
