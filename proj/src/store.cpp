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
#include "rdfbench/store.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>

namespace rdfbench {

TripleIds TripleStore::MatchRange::iterator::operator*() const {
  const auto& a = *p_;
  switch (perm_) {
    case 0: return {a[0], a[1], a[2]};   // spo
    case 1: return {a[2], a[0], a[1]};   // pos stores (p,o,s)
    default: return {a[1], a[2], a[0]};  // osp stores (o,s,p)
  }
}

std::string TripleStore::key_of(TermKind kind, std::string_view lex,
                                std::string_view datatype) {
  std::string key;
  key.reserve(lex.size() + datatype.size() + 2);
  key += static_cast<char>('0' + static_cast<int>(kind));
  key.append(lex);
  key += '\0';
  key.append(datatype);
  return key;
}

TermId TripleStore::intern(const Term& t) {
  auto key = key_of(t.kind, t.lex, t.datatype);
  auto [it, inserted] = dict_.try_emplace(std::move(key),
                                          static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(t);
  return it->second;
}

std::optional<TermId> TripleStore::find(const Term& t) const {
  return lookup(t.kind, t.lex, t.datatype);
}

std::optional<TermId> TripleStore::lookup(TermKind kind, std::string_view lex,
                                          std::string_view datatype) const {
  auto it = dict_.find(key_of(kind, lex, datatype));
  if (it == dict_.end()) return std::nullopt;
  return it->second;
}

void TripleStore::index_triples(std::vector<TripleIds>&& triples) {
  spo_.clear();
  spo_.reserve(triples.size());
  for (const auto& t : triples) spo_.push_back({t.s, t.p, t.o});
  std::sort(spo_.begin(), spo_.end());
  spo_.erase(std::unique(spo_.begin(), spo_.end()), spo_.end());

  pos_.reserve(spo_.size());
  osp_.reserve(spo_.size());
  for (const auto& a : spo_) {
    pos_.push_back({a[1], a[2], a[0]});
    osp_.push_back({a[2], a[0], a[1]});
  }
  std::sort(pos_.begin(), pos_.end());
  std::sort(osp_.begin(), osp_.end());
}

TripleStore TripleStore::load_stream(std::istream& in) {
  auto start = std::chrono::steady_clock::now();
  TripleStore store;
  std::vector<TripleIds> triples;
  std::string line;
  size_t lineno = 0;
  Triple t;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool got;
    try {
      got = parse_ntriples_line(line, t);
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " +
                               e.what());
    }
    if (!got) continue;
    triples.push_back({store.intern(t.s), store.intern(t.p),
                       store.intern(t.o)});
  }
  store.index_triples(std::move(triples));
  store.load_seconds_ =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return store;
}

TripleStore TripleStore::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_stream(in);
}

TripleStore TripleStore::from_triples(const std::vector<Triple>& triples) {
  TripleStore store;
  std::vector<TripleIds> ids;
  ids.reserve(triples.size());
  for (const auto& t : triples)
    ids.push_back({store.intern(t.s), store.intern(t.p), store.intern(t.o)});
  store.index_triples(std::move(ids));
  return store;
}

TripleStore::MatchRange TripleStore::match(const IdPattern& q) const {
  // A constant that is not in the dictionary matches nothing.
  for (auto part : {q.s, q.p, q.o})
    if (part && *part >= terms_.size())
      return {spo_.data(), spo_.data(), 0};

  const std::vector<std::array<TermId, 3>>* idx;
  int perm;
  std::array<TermId, 3> lo{}, hi{};
  int bound = 0;
  auto push = [&](TermId v) {
    lo[bound] = v;
    hi[bound] = v;
    ++bound;
  };

  if (q.s) {
    idx = &spo_;
    perm = 0;
    push(*q.s);
    if (q.p) {
      push(*q.p);
      if (q.o) push(*q.o);
    } else if (q.o) {
      idx = &osp_;
      perm = 2;
      bound = 0;
      push(*q.o);
      push(*q.s);
    }
  } else if (q.p) {
    idx = &pos_;
    perm = 1;
    push(*q.p);
    if (q.o) push(*q.o);
  } else if (q.o) {
    idx = &osp_;
    perm = 2;
    push(*q.o);
  } else {
    return {spo_.data(), spo_.data() + spo_.size(), 0};
  }

  for (int i = bound; i < 3; ++i) {
    lo[i] = 0;
    hi[i] = kNoTermId;
  }
  auto b = std::lower_bound(idx->begin(), idx->end(), lo);
  auto e = std::upper_bound(b, idx->end(), hi);
  return {idx->data() + (b - idx->begin()), idx->data() + (e - idx->begin()),
          perm};
}

}  // namespace rdfbench
