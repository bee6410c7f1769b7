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

#include <stdexcept>
#include <string>
#include <string_view>

#include "rdfbench/sparql/ast.hpp"

namespace rdfbench::sparql {

/// Raised for malformed query text and for constructs outside the
/// supported subset; the message names the offending token and its
/// line:column position.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parses a SELECT or ASK query (PREFIX declarations, basic graph
/// patterns, OPTIONAL, UNION, FILTER with =/!=/</>/<=/>=/&&/!/bound(),
/// DISTINCT, ORDER BY, LIMIT, OFFSET).
QueryAst parse_query(std::string_view text);

}  // namespace rdfbench::sparql
