/*
 * Copyright (c) 2026 the rdfbench authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <stdexcept>

namespace rdfbench {

/// Published default seed; fixed so default outputs are comparable everywhere.
inline constexpr uint64_t kDefaultSeed = 0x5150B;

/// State of the 64-bit LCG (Knuth's MMIX constants). A plain value type:
/// copying the state forks the sequence, there is no hidden global state.
struct RngState {
  uint64_t state = kDefaultSeed;
};

/// Advances the state: s' = s*6364136223846793005 + 1442695040888963407
/// (mod 2^64) and returns s' as the drawn value. Wrap-around arithmetic on
/// uint64_t makes the sequence identical on every platform.
inline uint64_t next_u64(RngState& s) {
  s.state = s.state * 6364136223846793005ULL + 1442695040888963407ULL;
  return s.state;
}

/// Uniform real in [0,1): the top 53 bits of next_u64 over 2^53.
inline double next_unit(RngState& s) {
  return static_cast<double>(next_u64(s) >> 11) * (1.0 / 9007199254740992.0);
}

/// True with probability p. p outside [0,1] is a caller bug.
inline bool bernoulli(RngState& s, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("bernoulli: p must be in [0,1]");
  return next_unit(s) < p;
}

/// Uniform integer in [lo, hi], rejection-free scaling of next_unit.
inline int64_t uniform_int(RngState& s, int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  double span = static_cast<double>(hi - lo) + 1.0;
  int64_t off = static_cast<int64_t>(next_unit(s) * span);
  if (off >= hi - lo + 1) off = hi - lo;  // guards against FP edge rounding
  return lo + off;
}

/// splitmix64 finalizer; the documented mixing function for sub-streams.
inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Derives the independent sub-stream for (seed, year, purpose). Purpose tags
/// differ in their high 32 bits, so distinct purposes can never collide via
/// the (small) year bits. Same inputs always yield the same sub-stream.
inline RngState substream(uint64_t seed, int year, uint64_t purpose) {
  return RngState{mix64(seed ^ static_cast<uint64_t>(year) ^ purpose)};
}

}  // namespace rdfbench
