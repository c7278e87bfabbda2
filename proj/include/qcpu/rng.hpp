// Copyright 2026 The qcpu Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Seedable, portable random number generation.
 *
 * Sampled outcomes must be reproducible bit-for-bit across runs and across
 * re-implementations in other languages, so the generator is pinned:
 *
 *  - streams are xoshiro256** (Blackman/Vigna), state initialized from four
 *    successive splitmix64 outputs;
 *  - named streams derive their seed as splitmix64(seed ^ fnv1a64(tag));
 *  - uniform doubles in [0,1) are (next() >> 11) * 2^-53;
 *  - categorical sampling walks the cumulative sum in index order and picks
 *    the first index whose cumulative weight exceeds the uniform draw.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace qcpu {

/// splitmix64 step: advances *state and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t *state);

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(std::string_view text);

/// xoshiro256** stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    /// Stream for (seed, tag), independent per tag.
    static Rng stream(std::uint64_t seed, std::string_view tag);

    std::uint64_t next_u64();
    /// Uniform in [0, 1), 53 significant bits.
    double next_double();

    /// Index sampled from an unnormalized weight vector (cumulative walk).
    /// The weights are normalized by their sum; zero-weight entries are
    /// never returned.
    std::size_t sample_index(std::span<const double> weights);

  private:
    std::uint64_t state_[4];
};

} // namespace qcpu
