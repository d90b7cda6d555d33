// Copyright 2026-present the gazekit project
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
#include <random>

namespace gazekit {

/// splitmix64 step; used both as a stream-derivation hash and as the
/// mt19937_64 seeding path so derived streams are decorrelated.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic random stream. Distribution sampling is implemented here
/// rather than through std::*_distribution so that sequences are identical
/// across standard libraries, which the reproducibility contract requires.
class Rng {
public:
    explicit Rng(uint64_t seed) : base_(seed), engine_(splitmix64(seed)) {}

    /// Independent substream identified by a tag (record id, hypothesis
    /// index, epoch, ...). Does not advance this stream.
    Rng derive(uint64_t tag) const {
        return Rng(splitmix64(base_ ^ splitmix64(tag ^ 0xa02cbe1ff0c51d7bULL)));
    }

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t uniform_index(uint64_t n) {
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
        uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    /// Standard normal via Box-Muller. One pair of uniforms per draw; the
    /// spare half is discarded so the stream position is input-independent.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    bool bernoulli(double p) { return uniform() < p; }

private:
    uint64_t base_;
    std::mt19937_64 engine_;
};

}  // namespace gazekit
