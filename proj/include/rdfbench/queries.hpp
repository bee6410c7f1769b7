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

#include <string>
#include <vector>

namespace rdfbench::queries {

struct BenchmarkQuery {
  std::string id;     // lowercase key: "q1" ... "q12c"
  std::string label;  // display form: "Q1" ... "Q12c"
  bool is_ask = false;
  std::string text;   // complete query, prefix declarations included
};

/// The seventeen benchmark queries in canonical order:
/// Q1 Q2 Q3a Q3b Q3c Q4 Q5a Q5b Q6 Q7 Q8 Q9 Q10 Q11 Q12a Q12b Q12c.
const std::vector<BenchmarkQuery>& all();

/// Lookup by case-insensitive id ("q4", "Q12a"); throws std::out_of_range
/// for unknown ids.
const BenchmarkQuery& by_id(const std::string& id);

/// The PREFIX block shared by every query.
std::string prefix_preamble();

}  // namespace rdfbench::queries
