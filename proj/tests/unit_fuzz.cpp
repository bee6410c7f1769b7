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
#include "doctest.h"
#include "fuzz_common.hpp"

using namespace rdfbench;

TEST_CASE("the engine agrees with brute force on random store/query pairs") {
  fuzz::FuzzStats stats = fuzz::run_engine_oracle_fuzz(kDefaultSeed, 400);
  INFO(stats.failure);
  CHECK(stats.failure.empty());
  CHECK(stats.cases == 400);
  // The generator must exercise real matches, not just empty results.
  CHECK(stats.nonempty > 40);
}

TEST_CASE("fuzz runs are reproducible for a fixed seed") {
  fuzz::FuzzStats a = fuzz::run_engine_oracle_fuzz(1234, 50);
  fuzz::FuzzStats b = fuzz::run_engine_oracle_fuzz(1234, 50);
  CHECK(a.failure.empty());
  CHECK(a.total_rows == b.total_rows);
  CHECK(a.nonempty == b.nonempty);
}
