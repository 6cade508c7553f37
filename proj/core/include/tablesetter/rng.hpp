// Copyright 2026 The tablesetter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once
// Household random stream.
//
// Algorithm identity: std::mt19937_64 (its output sequence is fixed by the
// C++ standard), seeded with a single 64-bit value. Uniform and normal
// variates are derived here rather than through <random> distributions,
// whose algorithms vary between standard libraries. The full position is
// (seed, draws) where draws counts raw 64-bit outputs consumed.

#include <cstdint>
#include <random>
#include <string_view>

namespace tablesetter {

class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}
  /// Restore a stream at a saved position.
  static Rng at_position(std::uint64_t seed, std::uint64_t draws);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draws() const noexcept { return draws_; }

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform01();
  /// Unbiased uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n);
  /// Standard normal via Box-Muller; consumes exactly two raw outputs.
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace tablesetter
