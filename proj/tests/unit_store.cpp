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
#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "rdfbench/store.hpp"

using namespace rdfbench;

namespace {

Term uri(const std::string& tail) { return make_uri("http://x/" + tail); }

std::vector<Triple> sample_triples() {
  return {
      {uri("s1"), uri("p1"), uri("o1")},
      {uri("s1"), uri("p1"), uri("o2")},
      {uri("s1"), uri("p2"), uri("o1")},
      {uri("s2"), uri("p1"), uri("o1")},
      {uri("s2"), uri("p2"), make_integer_literal(5)},
      {make_blank("b"), uri("p3"), make_string_literal("hi")},
  };
}

size_t count_matches(const TripleStore& st, const IdPattern& q) {
  size_t n = 0;
  for (TripleIds t : st.match(q)) {
    (void)t;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("from_triples keeps one copy of duplicates") {
  std::vector<Triple> triples = sample_triples();
  triples.push_back(triples[0]);
  triples.push_back(triples[3]);
  TripleStore st = TripleStore::from_triples(triples);
  CHECK(st.size() == 6);
}

TEST_CASE("every bound-component combination matches exactly") {
  TripleStore st = TripleStore::from_triples(sample_triples());
  std::vector<Triple> all = sample_triples();

  // Reference counting by exhaustive scan over the input list.
  auto expect = [&](std::optional<Term> s, std::optional<Term> p,
                    std::optional<Term> o) {
    size_t n = 0;
    for (const Triple& t : all)
      if ((!s || t.s == *s) && (!p || t.p == *p) && (!o || t.o == *o)) ++n;
    return n;
  };
  auto id = [&](const Term& t) { return st.find(t); };

  const std::vector<std::optional<Term>> subjects = {std::nullopt, uri("s1"),
                                                     uri("s2")};
  const std::vector<std::optional<Term>> predicates = {std::nullopt, uri("p1"),
                                                       uri("p2"), uri("p3")};
  const std::vector<std::optional<Term>> objects = {
      std::nullopt, uri("o1"), make_integer_literal(5),
      make_string_literal("hi")};

  for (const auto& s : subjects)
    for (const auto& p : predicates)
      for (const auto& o : objects) {
        IdPattern q;
        if (s) q.s = id(*s);
        if (p) q.p = id(*p);
        if (o) q.o = id(*o);
        REQUIRE((!s || q.s));
        REQUIRE((!p || q.p));
        REQUIRE((!o || q.o));
        CHECK(count_matches(st, q) == expect(s, p, o));
      }
}

TEST_CASE("matched ids decode back to the original components") {
  TripleStore st = TripleStore::from_triples(sample_triples());
  IdPattern q;
  q.p = st.find(uri("p1"));
  REQUIRE(q.p);
  size_t n = 0;
  for (TripleIds t : st.match(q)) {
    CHECK(st.term(t.p) == uri("p1"));
    Term s = st.term(t.s);
    CHECK((s == uri("s1") || s == uri("s2")));
    ++n;
  }
  CHECK(n == 3);
}

TEST_CASE("lookup distinguishes term kinds and datatypes") {
  TripleStore st = TripleStore::from_triples(sample_triples());
  CHECK(st.lookup(TermKind::Uri, "http://x/s1", ""));
  CHECK_FALSE(st.lookup(TermKind::Blank, "http://x/s1", ""));
  CHECK(st.lookup(TermKind::Literal, "hi",
                  "http://www.w3.org/2001/XMLSchema#string"));
  CHECK_FALSE(st.lookup(TermKind::Literal, "hi", ""));
  CHECK(st.lookup(TermKind::Literal, "5",
                  "http://www.w3.org/2001/XMLSchema#integer"));
  CHECK_FALSE(st.find(uri("absent")));
}

TEST_CASE("load_stream reads n-triples and reports parse errors by line") {
  std::istringstream ok(
      "# header comment\n"
      "<http://x/a> <http://x/p> <http://x/b> .\n"
      "\n"
      "<http://x/a> <http://x/p> \"v\"^^<http://www.w3.org/2001/XMLSchema#string> .\n");
  TripleStore st = TripleStore::load_stream(ok);
  CHECK(st.size() == 2);
  CHECK(st.load_seconds() >= 0.0);

  std::istringstream bad(
      "<http://x/a> <http://x/p> <http://x/b> .\n"
      "mangled line\n");
  try {
    TripleStore::load_stream(bad);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("load_file on a missing path throws") {
  CHECK_THROWS_AS(TripleStore::load_file("/nonexistent/never.nt"),
                  std::runtime_error);
}

TEST_CASE("unbound pattern scans the whole store in spo order") {
  TripleStore st = TripleStore::from_triples(sample_triples());
  IdPattern all;
  std::vector<TripleIds> seen;
  for (TripleIds t : st.match(all)) seen.push_back(t);
  CHECK(seen.size() == st.size());
  CHECK(std::is_sorted(seen.begin(), seen.end(),
                       [](const TripleIds& a, const TripleIds& b) {
                         return std::tie(a.s, a.p, a.o) <
                                std::tie(b.s, b.p, b.o);
                       }));
}
