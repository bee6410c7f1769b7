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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rdfbench/rdfmodel.hpp"

namespace rdfbench::sparql {

using VarId = uint32_t;

/// Variable or constant slot of a triple pattern / expression operand.
struct PatternTerm {
  bool is_var = false;
  VarId var = 0;
  Term term;  // when !is_var

  static PatternTerm variable(VarId v) { return {true, v, {}}; }
  static PatternTerm constant(Term t) { return {false, 0, std::move(t)}; }
};

struct TriplePattern {
  PatternTerm s, p, o;
};

/// Filter expression: comparisons, &&, !, bound().
struct Expr {
  enum class Kind : uint8_t { Compare, And, Not, Bound, True };
  enum class CmpOp : uint8_t { Eq, Ne, Lt, Gt, Le, Ge };

  Kind kind = Kind::True;
  CmpOp op = CmpOp::Eq;            // Compare
  PatternTerm lhs, rhs;            // Compare
  VarId bound_var = 0;             // Bound
  std::vector<Expr> children;      // And: 2.., Not: 1
};

/// Tree-structured graph pattern; TriplePattern lists form BGPs.
struct GraphPattern {
  enum class Kind : uint8_t { Bgp, Join, Optional, Union, Filter };

  Kind kind = Kind::Bgp;
  std::vector<TriplePattern> triples;    // Bgp
  std::vector<GraphPattern> children;    // Join/Optional/Union: 2, Filter: 1
  Expr expr;                             // Optional condition / Filter expr
};

struct QueryAst {
  enum class Form : uint8_t { Select, Ask };

  Form form = Form::Select;
  bool distinct = false;
  std::vector<VarId> projection;         // empty for Ask
  GraphPattern pattern;
  std::vector<VarId> order_by;
  std::optional<uint64_t> limit;
  std::optional<uint64_t> offset;
  std::vector<std::string> var_names;    // VarId -> name (without '?')

  uint32_t var_count() const {
    return static_cast<uint32_t>(var_names.size());
  }
};

}  // namespace rdfbench::sparql
