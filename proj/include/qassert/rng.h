// Copyright 2026 The qassert Authors
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

#ifndef QASSERT_RNG_H
#define QASSERT_RNG_H

#include <cstdint>

namespace qassert {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based deterministic generator. Output k is mix64(key + k * golden),
/// so a stream is fully determined by its seed and how many draws were taken.
class RngStream {
   public:
    using result_type = uint64_t;

    explicit RngStream(uint64_t seed) : key_(mix64(seed)) {
    }

    /// Stream for one shot of a run. Independent of the order in which shots
    /// are executed.
    static RngStream for_shot(uint64_t master_seed, uint64_t shot_index) {
        return RngStream(mix64(master_seed) ^ mix64(~shot_index));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~uint64_t{0}; }

    result_type operator()() {
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * counter_++);
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    /// True with probability p.
    bool bernoulli(double p) {
        return uniform() < p;
    }

    uint64_t draws() const { return counter_; }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace qassert

#endif
