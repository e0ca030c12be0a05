// Copyright 2026 The qloq authors
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

#include <cmath>
#include <cstdint>

#include "qloq/common.hpp"

namespace qloq {

/**
 * Deterministic, platform-stable PRNG (splitmix64).
 *
 * Every randomized routine in this library takes an explicit seed and draws
 * from this generator, so identical (seed, shard count) inputs produce
 * byte-identical outputs on any platform. std::uniform_real_distribution is
 * deliberately avoided: its output is implementation-defined.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [0, hi).
    double uniform(double hi) { return uniform() * hi; }

    /// Uniform angle in [0, 2*pi).
    double angle() { return uniform() * 2.0 * kPi; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // rejection-free modulo is fine here; n is tiny relative to 2^64
        return next_u64() % n;
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 0.0;
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(2.0 * kPi * u2);
        have_cached_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

    /// Independent substream for shard `index` of a seeded computation.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        Rng mix(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
        mix.next_u64();
        return mix;
    }

  private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace qloq
