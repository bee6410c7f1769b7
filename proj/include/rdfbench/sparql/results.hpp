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

#include "rdfbench/sparql/eval.hpp"

namespace rdfbench::sparql {

/// Header line of variable names, then one line per solution with terms
/// rendered in N-Triples syntax; cells are RFC-4180 quoted as needed.
std::string to_csv(const EvalResult& r);

/// Standard SPARQL results JSON: {"head":{"vars":[...]},"results":
/// {"bindings":[...]}} for SELECT, {"head":{},"boolean":b} for ASK.
std::string to_json(const EvalResult& r);

/// Parses results JSON produced by to_json (or an equivalent endpoint).
/// Throws std::runtime_error when the document has a different shape.
EvalResult from_json(const std::string& body);

/// Canonical multiset fingerprint: one serialized line per row with the
/// cells ordered by variable name, sorted. Two results with equal
/// fingerprints contain the same solutions regardless of row order.
std::string result_fingerprint(const EvalResult& r);

}  // namespace rdfbench::sparql
