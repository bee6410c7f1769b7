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

#include <vector>

#include "rdfbench/sparql/eval.hpp"

namespace rdfbench::sparql {

/// Definitional evaluator used to cross-check the engine. Basic graph
/// patterns are solved by matching each pattern in written order against
/// every data triple (no indices, no reordering), the algebra operators
/// follow their set definitions literally, and expression/ordering code
/// is written separately from the engine's. `data` is a graph, i.e. a set:
/// duplicate triples are collapsed before matching. Deliberately brute
/// force: only suitable for small inputs, and throws std::runtime_error
/// when the worst-case work bound is exceeded.
EvalResult brute_force_evaluate(const QueryAst& q,
                                const std::vector<Triple>& data);

/// Convenience overload: extracts the store's triples, then defers to the
/// triple-list form above.
EvalResult brute_force_evaluate(const QueryAst& q, const TripleStore& store);

/// True when two results contain the same solutions: exact row sequence
/// when `ordered`, multiset equality otherwise. ASK results compare by
/// boolean value.
bool same_solutions(const EvalResult& a, const EvalResult& b, bool ordered);

}  // namespace rdfbench::sparql
