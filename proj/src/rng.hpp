// Copyright 2026 The iabplan Authors
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

#ifndef IABPLAN_RNG_HPP
#define IABPLAN_RNG_HPP

#include <array>
#include <cstdint>

namespace iabplan {

/// Seedable, platform-independent generator (xoshiro256++ seeded via
/// splitmix64).  All randomness in the toolkit flows through this class so
/// that identical seeds give bit-identical results on every platform and
/// for any worker count.
///
/// Substream rule: the seed of a substream is
///   mix64(master ^ mix64(purpose ^ index))
/// where `purpose` is one of the tags in iabplan::stream and `index` is the
/// iteration index of the consumer (scenario number, flat drop number, ...).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double next_unit();

  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi);

  /// Unit-mean exponential (never negative, never infinite).
  double next_exponential();

  /// True with probability p; p=0 never, p=1 always.
  bool next_bernoulli(double p);

  /// Unbiased uniform integer in [0, bound); bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound);

  /// splitmix64 finalizer, exposed for the substream rule.
  static std::uint64_t mix64(std::uint64_t z);

  /// Substream seed derivation (see class comment).
  static std::uint64_t derive(std::uint64_t master, std::uint64_t purpose,
                              std::uint64_t index);

 private:
  std::array<std::uint64_t, 4> state_;
};

// Purpose tags for substream derivation.  Values are ASCII mnemonics; the
// only requirement is that they are distinct.
namespace stream {
inline constexpr std::uint64_t kMbsPositions = 0x6d62732d706f73ull;   // "mbs-pos"
inline constexpr std::uint64_t kSbsPositions = 0x7362732d706f73ull;   // "sbs-pos"
inline constexpr std::uint64_t kUePositions = 0x75652d706f73ull;      // "ue-pos"
inline constexpr std::uint64_t kDesignOrder = 0x64657369676eull;      // "design"
inline constexpr std::uint64_t kRndPlacement = 0x726e64ull;           // "rnd"
inline constexpr std::uint64_t kScenarioSeed = 0x7363656e2d7364ull;   // "scen-sd"
inline constexpr std::uint64_t kDrop = 0x64726f70ull;                 // "drop"
}  // namespace stream

}  // namespace iabplan

#endif  // IABPLAN_RNG_HPP
