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
#include "rdfbench/queries.hpp"
#include "rdfbench/sparql/parser.hpp"

using namespace rdfbench;
using namespace rdfbench::sparql;

TEST_CASE("catalog lists the seventeen queries in canonical order") {
  const auto& all = queries::all();
  REQUIRE(all.size() == 17);
  const char* expected[] = {"Q1",  "Q2",  "Q3a",  "Q3b",  "Q3c", "Q4",
                            "Q5a", "Q5b", "Q6",   "Q7",   "Q8",  "Q9",
                            "Q10", "Q11", "Q12a", "Q12b", "Q12c"};
  for (size_t i = 0; i < all.size(); ++i) CHECK(all[i].label == expected[i]);
  CHECK(queries::by_id("q4").label == "Q4");
  CHECK(queries::by_id("Q12A").label == "Q12a");
  CHECK_THROWS_AS(queries::by_id("q99"), std::out_of_range);
}

TEST_CASE("ask flags match the query forms") {
  for (const auto& q : queries::all()) {
    bool expect_ask =
        q.id == "q12a" || q.id == "q12b" || q.id == "q12c";
    CHECK(q.is_ask == expect_ask);
    QueryAst ast = parse_query(q.text);
    CHECK((ast.form == QueryAst::Form::Ask) == expect_ask);
  }
}

TEST_CASE("every catalog query parses") {
  for (const auto& q : queries::all()) {
    QueryAst ast = parse_query(q.text);
    if (ast.form == QueryAst::Form::Select) CHECK(!ast.projection.empty());
    else CHECK(ast.projection.empty());
    // q12c asks for one fully ground triple, so it binds no variables.
    if (q.id == "q12c") CHECK(ast.var_count() == 0);
    else CHECK(ast.var_count() > 0);
  }
}

TEST_CASE("simple select yields a flat basic graph pattern") {
  QueryAst ast = parse_query(queries::by_id("q1").text);
  CHECK(ast.pattern.kind == GraphPattern::Kind::Bgp);
  CHECK(ast.pattern.triples.size() == 3);
  REQUIRE(ast.projection.size() == 1);
  CHECK(ast.var_names[ast.projection[0]] == "yr");
  CHECK_FALSE(ast.distinct);
  CHECK_FALSE(ast.limit);
  CHECK_FALSE(ast.offset);
}

TEST_CASE("optional groups become left joins with the group filter lifted") {
  QueryAst q2 = parse_query(queries::by_id("q2").text);
  CHECK(q2.pattern.kind == GraphPattern::Kind::Optional);
  REQUIRE(q2.pattern.children.size() == 2);
  CHECK(q2.pattern.children[0].triples.size() == 9);
  CHECK(q2.pattern.children[1].triples.size() == 1);
  REQUIRE(q2.order_by.size() == 1);
  CHECK(q2.var_names[q2.order_by[0]] == "yr");
  CHECK(q2.projection.size() == 10);

  // A filter written inside the optional group turns into the join
  // condition; a group-level filter wraps the whole pattern.
  QueryAst q6 = parse_query(queries::by_id("q6").text);
  REQUIRE(q6.pattern.kind == GraphPattern::Kind::Filter);
  CHECK(q6.pattern.expr.kind == Expr::Kind::Not);
  const GraphPattern& opt = q6.pattern.children[0];
  REQUIRE(opt.kind == GraphPattern::Kind::Optional);
  CHECK(opt.expr.kind == Expr::Kind::And);
  CHECK(opt.children[0].triples.size() == 5);
  CHECK(opt.children[1].triples.size() == 4);
}

TEST_CASE("doubly nested negation-shaped optionals parse as in the algebra") {
  QueryAst q7 = parse_query(queries::by_id("q7").text);
  REQUIRE(q7.pattern.kind == GraphPattern::Kind::Filter);
  CHECK(q7.pattern.expr.kind == Expr::Kind::Not);
  const GraphPattern& outer = q7.pattern.children[0];
  REQUIRE(outer.kind == GraphPattern::Kind::Optional);
  CHECK(outer.expr.kind == Expr::Kind::Not);  // !bound on the inner optional
  CHECK(outer.children[0].triples.size() == 5);
  const GraphPattern& inner = outer.children[1];
  REQUIRE(inner.kind == GraphPattern::Kind::Optional);
  CHECK(inner.expr.kind == Expr::Kind::True);
  CHECK(inner.children[0].triples.size() == 4);
  CHECK(inner.children[1].triples.size() == 4);
  CHECK(q7.distinct);
}

TEST_CASE("union groups parse into two branches") {
  QueryAst ast = parse_query(R"(
    PREFIX dc: <http://purl.org/dc/elements/1.1/>
    SELECT ?x WHERE {
      { ?x dc:title "a"^^<http://www.w3.org/2001/XMLSchema#string> . }
      UNION
      { ?x dc:title "b"^^<http://www.w3.org/2001/XMLSchema#string> . }
    })");
  CHECK(ast.pattern.kind == GraphPattern::Kind::Union);
  REQUIRE(ast.pattern.children.size() == 2);
  CHECK(ast.pattern.children[0].triples.size() == 1);
  CHECK(ast.pattern.children[1].triples.size() == 1);
}

TEST_CASE("modifiers parse: distinct, order by, limit, offset") {
  QueryAst ast = parse_query(R"(
    PREFIX dc: <http://purl.org/dc/elements/1.1/>
    SELECT DISTINCT ?a ?b WHERE { ?a dc:title ?b . }
    ORDER BY ?b LIMIT 10 OFFSET 5)");
  CHECK(ast.distinct);
  REQUIRE(ast.order_by.size() == 1);
  CHECK(ast.var_names[ast.order_by[0]] == "b");
  CHECK(ast.limit == 10);
  CHECK(ast.offset == 5);
}

TEST_CASE("filter comparisons capture operator and operands") {
  QueryAst ast = parse_query(queries::by_id("q3a").text);
  REQUIRE(ast.pattern.kind == GraphPattern::Kind::Filter);
  const Expr& e = ast.pattern.expr;
  REQUIRE(e.kind == Expr::Kind::Compare);
  CHECK(e.op == Expr::CmpOp::Eq);
  CHECK(e.lhs.is_var);
  CHECK_FALSE(e.rhs.is_var);
  CHECK(e.rhs.term.lex.find("swrc.ontoware.org") != std::string::npos);
}

TEST_CASE("fully ground ask patterns parse with no variables") {
  // Q12c asks for a type edge on a publication that is never generated.
  QueryAst ast = parse_query(queries::by_id("q12c").text);
  REQUIRE(ast.pattern.kind == GraphPattern::Kind::Bgp);
  REQUIRE(ast.pattern.triples.size() == 1);
  const TriplePattern& t = ast.pattern.triples[0];
  CHECK_FALSE(t.s.is_var);
  CHECK_FALSE(t.p.is_var);
  CHECK(t.p.term.lex ==
        "http://www.w3.org/1999/02/22-rdf-syntax-ns#type");
  CHECK_FALSE(t.o.is_var);
}

TEST_CASE("malformed queries are rejected with errors") {
  CHECK_THROWS_AS(parse_query("SELECT"), std::runtime_error);
  CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { ?x }"), std::runtime_error);
  CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { ?x unknown:p ?y . }"),
                  std::runtime_error);
  CHECK_THROWS_AS(
      parse_query("PREFIX dc: <http://purl.org/dc/elements/1.1/> "
                  "SELECT ?x WHERE { ?x dc:title ?y . "),
      std::runtime_error);  // unterminated group
  CHECK_THROWS_AS(parse_query(""), std::runtime_error);
}

TEST_CASE("shared prefix block declares all vocabularies") {
  std::string p = queries::prefix_preamble();
  for (const char* ns :
       {"rdf:", "rdfs:", "xsd:", "dc:", "dcterms:", "foaf:", "swrc:",
        "bench:", "person:"})
    CHECK(p.find(ns) != std::string::npos);
  for (const auto& q : queries::all())
    CHECK(q.text.find("PREFIX") != std::string::npos);
}
