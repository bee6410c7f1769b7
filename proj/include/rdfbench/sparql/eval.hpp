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

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdfbench/sparql/ast.hpp"
#include "rdfbench/store.hpp"

namespace rdfbench::sparql {

enum class CancelReason : uint8_t { Timeout, Memory };

class CancelledError : public std::runtime_error {
 public:
  CancelledError(CancelReason r, const char* msg)
      : std::runtime_error(msg), reason(r) {}
  CancelReason reason;
};

/// Cooperative cancellation. Evaluation polls the deadline at a fixed
/// stride and charges live materialized rows against the byte budget;
/// exceeding either throws CancelledError from within the hot loops.
class CancelToken {
 public:
  void set_deadline(std::chrono::steady_clock::time_point tp) {
    deadline_ = tp;
  }
  void set_memory_budget(size_t bytes) { budget_ = bytes; }

  void poll() {
    if ((++ticks_ & 0x3FF) == 0) check_deadline();
  }

  void charge(size_t bytes) {
    live_ += bytes;
    if (budget_ && live_ > *budget_)
      throw CancelledError(CancelReason::Memory,
                           "evaluation memory budget exhausted");
  }
  void release(size_t bytes) { live_ -= bytes < live_ ? bytes : live_; }
  size_t live_bytes() const { return live_; }

  void check_deadline() const {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw CancelledError(CancelReason::Timeout, "evaluation deadline exceeded");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::optional<size_t> budget_;
  size_t live_ = 0;
  uint32_t ticks_ = 0;
};

/// Optimizations the engine applies by default; each can be switched off
/// so results can be cross-checked against unoptimized evaluation.
struct EvalOptions {
  bool reorder_patterns = true;  // selectivity-ordered basic graph patterns
  bool push_filters = true;      // evaluate filter conjuncts inside the BGP scan
  bool key_optional = true;      // hash OPTIONAL on equality-condition keys
};

/// Projected solution table; unbound cells stay empty.
struct SelectResult {
  std::vector<std::string> vars;
  std::vector<std::vector<std::optional<Term>>> rows;
};

struct EvalResult {
  bool is_ask = false;
  bool ask_value = false;
  SelectResult table;  // filled for SELECT

  size_t rows() const {
    return is_ask ? static_cast<size_t>(ask_value) : table.rows.size();
  }
};

/// Evaluates a parsed query against the store. Throws CancelledError on
/// timeout/budget, std::runtime_error on unsupported shapes.
EvalResult evaluate(const QueryAst& q, const TripleStore& store,
                    CancelToken* cancel = nullptr,
                    const EvalOptions& opts = {});

/// Total order over optional terms used by ORDER BY: unbound first, then
/// blank < IRI < literal; integer literals numerically, others bytewise.
bool order_less(const std::optional<Term>& a, const std::optional<Term>& b);

}  // namespace rdfbench::sparql
