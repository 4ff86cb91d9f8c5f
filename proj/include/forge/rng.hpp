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

#ifndef FORGE_RNG_HPP_
#define FORGE_RNG_HPP_

#include <cstdint>

namespace forge {

// Counter-based generator built on the splitmix64 finalizer. Every random
// decision in the project is a pure function of (seed, key...), so any two
// runs (or two implementations) that agree on the keying scheme reproduce
// the same stream. Keys are combined with distinct odd constants before
// mixing.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_key(std::uint64_t seed, std::uint64_t a,
                             std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(seed ^ (a * 0xd1342543de82ef95ULL));
  return splitmix64(h ^ (b * 0xaf251af3b0f025b5ULL));
}

// Uniform draw in [0, 1) from the top 53 bits.
inline double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// One keyed draw, e.g. uniform_draw(seed, vertex, level).
inline double uniform_draw(std::uint64_t seed, std::uint64_t a,
                           std::uint64_t b = 0) {
  return to_unit(mix_key(seed, a, b));
}

// Sequential stream for consumers that need an unbounded number of draws
// (graph generation, pair sampling). Derivation from a base seed is by
// counter so sub-streams never overlap: derive(seed, i) seeds stream i.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(derive(seed, stream)) {}

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix_key(seed, 0x9e6c63d0876a9a67ULL, stream);
  }

  std::uint64_t next_u64() { return mix_key(seed_, counter_++); }

  double next_unit() { return to_unit(next_u64()); }

  // Uniform integer in [0, bound) by rejection (bound > 0).
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~0ULL / bound);
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace forge

#endif  // FORGE_RNG_HPP_
