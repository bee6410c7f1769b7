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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "rdfbench/distributions.hpp"
#include "rdfbench/rng.hpp"

namespace rdfbench {

/// Limits and knobs of one generation run. Exactly one of `triple_limit`
/// and `end_year` must be set; everything else has stable defaults so a
/// (seed, limit) pair fully determines the output bytes.
struct GenerationConfig {
  uint64_t seed = kDefaultSeed;
  std::optional<uint64_t> triple_limit;  // stop at the last fitting cluster
  std::optional<int> end_year;           // generate full years through this one
  double untargeted_fraction = 0.5;      // citation slots left dangling
  std::string output_path;               // used by generate_to_file only
};

/// Counters describing what was actually written.
struct GenerationStats {
  uint64_t triples = 0;
  std::array<uint64_t, kNumDocClasses> class_counts{};  // emitted documents
  uint64_t author_edges = 0;      // creator edges written (incl. the fixed person)
  uint64_t distinct_persons = 0;  // persons introduced with type+name triples
  int first_year = 0;
  int last_year = 0;           // last year with any emitted document
  int last_complete_year = 0;  // last year emitted in full (0: none)
  bool truncated = false;      // stopped by the triple limit
  double seconds = 0.0;

  /// Aligned one-stat-per-line text block.
  std::string summary() const;
};

/// Streams the synthetic bibliography as N-Triples to `out`.
/// Deterministic: equal (seed, limit, untargeted_fraction) gives identical
/// bytes, and a smaller triple limit yields a byte prefix of a larger one.
/// Throws std::invalid_argument on a config that violates its invariants or
/// a triple limit too small for the leading schema block.
GenerationStats generate(const GenerationConfig& config, std::ostream& out);

/// Convenience wrapper: opens config.output_path and streams into it.
/// Throws std::runtime_error when the path cannot be opened for writing.
GenerationStats generate_to_file(const GenerationConfig& config);

}  // namespace rdfbench
