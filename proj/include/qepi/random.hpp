// Copyright 2026 The qudit-epi Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "qepi/linalg.hpp"

namespace qepi {

/// Reproducible random stream identified by (master_seed, stream_index).
///
/// The engine is mt19937_64 seeded from a SplitMix64 mix of both words, so
/// neighbouring stream indices land on unrelated engine states. Two sources
/// built from the same pair produce the same sequence.
class RandomSource {
  public:
    static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64";

    RandomSource(std::uint64_t master_seed, std::uint64_t stream_index);

    [[nodiscard]] std::uint64_t master_seed() const noexcept { return master_; }
    [[nodiscard]] std::uint64_t stream_index() const noexcept { return stream_; }

    /// Independent child stream; used to hand each optimizer restart its
    /// own randomness regardless of scheduling.
    [[nodiscard]] RandomSource substream(std::uint64_t index) const;

    double normal();
    double uniform(); // [0, 1)
    Complex complex_normal(); // E|z|^2 = 1
    CMatrix ginibre(std::size_t rows, std::size_t cols);
    std::uint64_t next_u64();

  private:
    std::uint64_t master_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace qepi
