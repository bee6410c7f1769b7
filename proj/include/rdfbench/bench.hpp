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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rdfbench/rng.hpp"

namespace rdfbench::bench {

/// Outcome classes in increasing severity; aggregation across runs keeps
/// the worst one.
enum class Status : uint8_t { Success, Timeout, MemoryExhaustion, Error };

/// Matrix letter: + T M E.
char status_char(Status s);
const char* status_name(Status s);
std::optional<Status> status_from_name(const std::string& name);

/// One query execution.
struct QueryOutcome {
  Status status = Status::Error;
  double tme = 0.0;                      // elapsed seconds
  std::optional<double> usr, sys;        // process CPU deltas, best effort
  std::optional<uint64_t> rmem;          // peak resident bytes, best effort
  std::optional<uint64_t> row_count;     // SELECT solutions
  std::optional<bool> ask;               // ASK verdict
  std::string detail;                    // diagnostic for failures
};

struct RunConfig {
  std::vector<uint64_t> sizes = {10'000,    50'000,    250'000,
                                 1'000'000, 5'000'000, 25'000'000};
  int runs = 3;
  double timeout_seconds = 1800.0;
  std::optional<uint64_t> memory_limit;  // evaluation byte budget (builtin)
  std::string endpoint;                  // empty: builtin engine
  uint64_t seed = kDefaultSeed;
  std::string data_dir = "bench-data";   // generated documents cache

  /// Throws std::invalid_argument unless runs >= 1 and sizes are
  /// non-empty and strictly ascending.
  void validate() const;
};

struct SizeReport {
  uint64_t size = 0;
  std::vector<double> load_seconds;             // one entry per run (builtin)
  std::vector<std::vector<QueryOutcome>> outcomes;  // [query][run]
};

struct BenchReport {
  RunConfig config;
  std::vector<SizeReport> sizes;

  bool any_error() const;
};

/// Worst status across runs plus the mean elapsed time; rows from the
/// first successful run.
struct QueryAggregate {
  Status status = Status::Error;
  double mean_tme = 0.0;
  std::optional<uint64_t> rows;
  std::optional<bool> ask;
};
QueryAggregate aggregate_runs(const std::vector<QueryOutcome>& runs);

/// Failures count as 3600 s; geometric = nth root of the product
/// (times floored at 1 ns so a zero cannot null the product).
struct PenalizedMeans {
  double arithmetic = 0.0;
  double geometric = 0.0;
};
PenalizedMeans penalized_means(const std::vector<QueryAggregate>& per_query);

/// Raw outcomes, one line per (size, query, run):
/// size,query,run,status,tme,usr,sys,rmem,rows. Doubles carry full
/// precision so parse_csv() reproduces them bit for bit.
std::string render_csv(const BenchReport& report);

/// Rebuilds a report (outcome fields only) from render_csv output.
/// Throws std::runtime_error on malformed input.
BenchReport parse_csv(const std::string& csv);

/// Per-query mean elapsed times across sizes, failures shown as letters,
/// with penalized means per size.
std::string render_markdown(const BenchReport& report);

/// The compact success matrix: one letter per query in catalog order,
/// one row per size, with the two-line column key above.
std::string render_success_table(const BenchReport& report);

/// Executes the configured grid. The builtin engine reloads the document
/// before each run; an endpoint is queried as-is. `progress`, when set,
/// receives one line per completed cell.
BenchReport run_bench(const RunConfig& config,
                      const std::function<void(const std::string&)>& progress =
                          nullptr);

/// Single query against a SPARQL-protocol endpoint: POST form-encoded
/// `query=`, results JSON back. Network timeout -> Timeout, HTTP >= 400
/// or a malformed payload -> Error.
QueryOutcome query_endpoint(const std::string& url, const std::string& query,
                            double timeout_seconds);

}  // namespace rdfbench::bench
