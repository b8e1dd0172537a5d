// Copyright 2026 The Qudest Authors
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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string_view>

namespace qudest {

/// SplitMix64 finalizer.
constexpr uint64_t mix64(uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// FNV-1a, used to fold string labels (experiment names, methods) into seed paths.
constexpr uint64_t hash_label(std::string_view label) noexcept {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Splittable seed derivation: each path component is folded through mix64, so a
/// child seed depends only on the master seed and its own path. Adding trials
/// elsewhere never shifts the seed of an existing one.
constexpr uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path) noexcept {
    uint64_t s = mix64(master);
    for (uint64_t p : path) {
        s = mix64(s ^ mix64(p + 0x632BE59BD9B4E019ULL));
    }
    return s;
}

/// Counter-based generator: output k is mix64(key + k * golden-gamma). Satisfies
/// UniformRandomBitGenerator so it plugs into <random> distributions.
class CounterRng {
   public:
    using result_type = uint64_t;

    explicit constexpr CounterRng(uint64_t key) noexcept : key_(key) {
    }

    static constexpr result_type min() noexcept {
        return 0;
    }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()() noexcept {
        return mix64(key_ + 0x9E3779B97F4A7C15ULL * counter_++);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    uint64_t counter() const noexcept {
        return counter_;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace qudest
