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
#include <istream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rdfbench/rdfmodel.hpp"

namespace rdfbench {

using TermId = uint32_t;
inline constexpr TermId kNoTermId = 0xFFFFFFFFu;

struct TripleIds {
  TermId s, p, o;
  bool operator==(const TripleIds&) const = default;
};

/// Triple pattern with optional fixed components.
struct IdPattern {
  std::optional<TermId> s, p, o;
};

/// Immutable, dictionary-encoded triple set with three sorted permutation
/// indices (SPO, POS, OSP). Every bound-component combination is a prefix of
/// one of the three orderings, so matching never post-filters.
class TripleStore {
 public:
  /// Reads N-Triples; throws std::runtime_error with a line number on parse
  /// errors. Duplicate triples collapse to one.
  static TripleStore load_stream(std::istream& in);
  static TripleStore load_file(const std::string& path);
  static TripleStore from_triples(const std::vector<Triple>& triples);

  size_t size() const { return spo_.size(); }
  size_t term_count() const { return terms_.size(); }
  const Term& term(TermId id) const { return terms_[id]; }
  std::optional<TermId> find(const Term& t) const;

  /// Seconds spent parsing + indexing in the last load_* call.
  double load_seconds() const { return load_seconds_; }

  /// Iterates matching triples in (s,p,o) orientation.
  class MatchRange {
   public:
    class iterator {
     public:
      iterator(const std::array<TermId, 3>* p, int perm) : p_(p), perm_(perm) {}
      TripleIds operator*() const;
      iterator& operator++() { ++p_; return *this; }
      bool operator!=(const iterator& o) const { return p_ != o.p_; }

     private:
      const std::array<TermId, 3>* p_;
      int perm_;
    };
    MatchRange(const std::array<TermId, 3>* b, const std::array<TermId, 3>* e,
               int perm) : b_(b), e_(e), perm_(perm) {}
    iterator begin() const { return {b_, perm_}; }
    iterator end() const { return {e_, perm_}; }
    size_t size() const { return static_cast<size_t>(e_ - b_); }
    bool empty() const { return b_ == e_; }

   private:
    const std::array<TermId, 3>* b_;
    const std::array<TermId, 3>* e_;
    int perm_;
  };

  /// Index choice by bound prefix: s... -> SPO, (o or s+o) -> OSP,
  /// p-led -> POS, nothing bound -> full scan over SPO.
  MatchRange match(const IdPattern& pattern) const;

  /// Term interning for query constants; returns nothing when absent.
  std::optional<TermId> lookup(TermKind kind, std::string_view lex,
                               std::string_view datatype) const;

 private:
  void index_triples(std::vector<TripleIds>&& triples);
  TermId intern(const Term& t);
  static std::string key_of(TermKind kind, std::string_view lex,
                            std::string_view datatype);

  std::vector<Term> terms_;
  std::unordered_map<std::string, TermId> dict_;
  std::vector<std::array<TermId, 3>> spo_, pos_, osp_;
  double load_seconds_ = 0.0;
};

}  // namespace rdfbench
