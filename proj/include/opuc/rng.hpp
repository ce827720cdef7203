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

#include <cstdint>

namespace opuc::rng {

// SplitMix64 finalizer. Used as a counter-based generator: every draw is a
// pure function of (seed, stream, counter), so results do not depend on the
// order in which indices are visited.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t bits(std::uint64_t key, std::uint64_t counter) {
    return mix64(key + mix64(counter));
}

/// Uniform double in [0, 1) with 53 random bits.
constexpr double uniform(std::uint64_t key, std::uint64_t counter) {
    return static_cast<double>(bits(key, counter) >> 11) * 0x1.0p-53;
}

// Stream tags keep independent uses of one seed apart.
inline constexpr std::uint64_t kStreamAlpha = 1;
inline constexpr std::uint64_t kStreamBeta = 2;
inline constexpr std::uint64_t kStreamTrial = 3;

/// Seed for trial `index` of an ensemble run.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    return derive(derive(seed, kStreamTrial), index);
}

}  // namespace opuc::rng
