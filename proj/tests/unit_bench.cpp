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
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rdfbench/bench.hpp"
#include "rdfbench/queries.hpp"
#include "rdfbench/server.hpp"
#include "rdfbench/sparql/eval.hpp"
#include "rdfbench/sparql/parser.hpp"
#include "rdfbench/store.hpp"
#include "rdfbench/worldsim.hpp"

using namespace rdfbench;
using namespace rdfbench::bench;

namespace {

QueryOutcome ok(double tme, uint64_t rows) {
  QueryOutcome o;
  o.status = Status::Success;
  o.tme = tme;
  o.row_count = rows;
  return o;
}

QueryOutcome failed(Status s, double tme) {
  QueryOutcome o;
  o.status = s;
  o.tme = tme;
  o.detail = "boom";
  return o;
}

QueryAggregate success_agg(double mean) {
  QueryAggregate a;
  a.status = Status::Success;
  a.mean_tme = mean;
  return a;
}

// A report over the full catalog with the given per-query statuses for one
// size; all times 0.25 s.
BenchReport catalog_report(uint64_t size, const std::string& letters) {
  const auto& catalog = queries::all();
  REQUIRE(letters.size() == catalog.size());
  BenchReport r;
  r.sizes.emplace_back();
  r.sizes.back().size = size;
  for (char c : letters) {
    QueryOutcome o;
    switch (c) {
      case '+': o = ok(0.25, 1); break;
      case 'T': o = failed(Status::Timeout, 60.0); break;
      case 'M': o = failed(Status::MemoryExhaustion, 0.5); break;
      default: o = failed(Status::Error, 0.01); break;
    }
    r.sizes.back().outcomes.push_back({o});
  }
  return r;
}

}  // namespace

TEST_CASE("status letters, names, and parsing agree") {
  CHECK(status_char(Status::Success) == '+');
  CHECK(status_char(Status::Timeout) == 'T');
  CHECK(status_char(Status::MemoryExhaustion) == 'M');
  CHECK(status_char(Status::Error) == 'E');
  for (Status s : {Status::Success, Status::Timeout, Status::MemoryExhaustion,
                   Status::Error})
    CHECK(status_from_name(status_name(s)) == s);
  CHECK_FALSE(status_from_name("Fine"));
}

TEST_CASE("aggregation keeps the worst status and averages elapsed time") {
  std::vector<QueryOutcome> runs = {ok(1.0, 7), failed(Status::Timeout, 60.0),
                                    ok(2.0, 7)};
  QueryAggregate a = aggregate_runs(runs);
  CHECK(a.status == Status::Timeout);
  CHECK(a.mean_tme == doctest::Approx(21.0));
  CHECK(a.rows == 7);  // from the first successful run

  runs[1] = failed(Status::Error, 0.1);
  CHECK(aggregate_runs(runs).status == Status::Error);
  runs[1] = failed(Status::MemoryExhaustion, 0.1);
  CHECK(aggregate_runs(runs).status == Status::MemoryExhaustion);
  runs[1] = ok(4.0, 7);
  CHECK(aggregate_runs(runs).status == Status::Success);

  CHECK(aggregate_runs({}).status == Status::Error);
}

TEST_CASE("penalized means match an independent computation") {
  std::vector<QueryAggregate> qs = {success_agg(1.0), success_agg(100.0),
                                    success_agg(3600.0)};
  PenalizedMeans m = penalized_means(qs);
  CHECK(m.arithmetic ==
        doctest::Approx(1233.6666666666667).epsilon(1e-9));
  CHECK(m.geometric == doctest::Approx(71.13786608980125).epsilon(1e-9));

  // A failure enters both means as the 3600 s penalty regardless of its
  // recorded time.
  QueryAggregate bad;
  bad.status = Status::Timeout;
  bad.mean_tme = 60.0;
  qs = {success_agg(0.5), bad, success_agg(2.0)};
  m = penalized_means(qs);
  CHECK(m.arithmetic ==
        doctest::Approx(1200.8333333333333).epsilon(1e-9));
  CHECK(m.geometric == doctest::Approx(15.32618864787106).epsilon(1e-9));

  // The same failure distorts the arithmetic mean far more.
  PenalizedMeans clean = penalized_means(
      {success_agg(0.5), success_agg(60.0), success_agg(2.0)});
  CHECK(m.arithmetic / clean.arithmetic > m.geometric / clean.geometric);

  // Zero times survive the geometric mean via the 1 ns floor.
  m = penalized_means({success_agg(0.0), success_agg(1.0)});
  CHECK(m.arithmetic == doctest::Approx(0.5));
  CHECK(m.geometric == doctest::Approx(3.16227766016838e-05).epsilon(1e-9));

  m = penalized_means({success_agg(0.125), success_agg(0.125)});
  CHECK(m.arithmetic == 0.125);
  CHECK(m.geometric == doctest::Approx(0.125).epsilon(1e-12));

  CHECK(penalized_means({}).arithmetic == 0.0);
}

TEST_CASE("the success matrix uses the fixed key, one letter per query") {
  BenchReport r = catalog_report(10'000, "+++++++++++++++++");
  r.sizes.push_back(catalog_report(1'000'000, "++T+++M++++E+++++").sizes[0]);

  std::string got = render_success_table(r);
  std::string want =
      "Query 123  45 6789ABC\n"
      "        abc ab\n"
      "10k   +++++++++++++++++\n"
      "1M    ++T+++M++++E+++++\n"
      "+:=Success, T:=Timeout, M:=Memory Exhaustion, and E:=Error\n";
  CHECK(got == want);
}

TEST_CASE("csv output round-trips bit for bit") {
  BenchReport r = catalog_report(10'000, "++++++++T++++++E+");
  // Exercise awkward doubles and the optional columns.
  r.sizes[0].outcomes[0][0].tme = 0.1 + 0.2;
  r.sizes[0].outcomes[0][0].usr = 1.0 / 3.0;
  r.sizes[0].outcomes[0][0].sys = 1e-9;
  r.sizes[0].outcomes[0][0].rmem = 123'456'789;
  r.sizes[0].outcomes[1][0].row_count.reset();
  r.sizes[0].outcomes[2][0].ask = true;
  r.sizes[0].outcomes[2][0].row_count.reset();

  std::string csv = render_csv(r);
  CHECK(csv.rfind("size,query,run,status,tme,usr,sys,rmem,rows\n", 0) == 0);
  BenchReport back = parse_csv(csv);
  CHECK(render_csv(back) == csv);

  // Check a couple of parsed fields directly.
  REQUIRE(back.sizes.size() == 1);
  CHECK(back.sizes[0].size == 10'000);
  CHECK(back.sizes[0].outcomes[0][0].tme == 0.1 + 0.2);
  CHECK(back.sizes[0].outcomes[0][0].usr == 1.0 / 3.0);
  CHECK(back.sizes[0].outcomes[0][0].rmem == 123'456'789);
  CHECK_FALSE(back.sizes[0].outcomes[1][0].row_count);
  CHECK(back.sizes[0].outcomes[2][0].ask == true);
  CHECK(back.sizes[0].outcomes[8][0].status == Status::Timeout);
  CHECK(back.any_error());  // the E at position 15
}

TEST_CASE("csv parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_csv("nope\n"), std::runtime_error);
  std::string header = "size,query,run,status,tme,usr,sys,rmem,rows\n";
  CHECK_THROWS_AS(parse_csv(header + "10,q1,1,Success,0.1\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_csv(header + "10,qX,1,Success,0.1,,,,\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_csv(header + "10,q1,0,Success,0.1,,,,\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_csv(header + "10,q1,1,Fine,0.1,,,,\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_csv(header + "10,q1,1,Success,fast,,,,\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_csv(header + "10,q1,1,Success,0.1,,,many,\n"),
                  std::runtime_error);
  // The header alone is fine and yields an empty report.
  CHECK(parse_csv(header).sizes.empty());
}

TEST_CASE("markdown summary lists every query and both means") {
  BenchReport r = catalog_report(50'000, "+++++++++++++++T+");
  std::string md = render_markdown(r);
  for (const auto& q : queries::all())
    CHECK(md.find("| " + std::string(q.label) + " |") != std::string::npos);
  CHECK(md.find("| arithmetic mean |") != std::string::npos);
  CHECK(md.find("| geometric mean |") != std::string::npos);
  CHECK(md.find(" 50k |") != std::string::npos);
  CHECK(md.find(" T |") != std::string::npos);   // the failed cell
  CHECK(md.find(" 0.250s |") != std::string::npos);
}

TEST_CASE("run configuration invariants") {
  RunConfig c;
  c.sizes = {10'000, 50'000};
  c.runs = 1;
  CHECK_NOTHROW(c.validate());

  RunConfig bad = c;
  bad.runs = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.sizes = {};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.sizes = {50'000, 10'000};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.sizes = {10'000, 10'000};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.timeout_seconds = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("querying an unreachable endpoint reports an error") {
  // Reserved TEST-NET-1 address; nothing listens there.
  QueryOutcome o =
      query_endpoint("http://127.0.0.1:1/sparql",
                     queries::by_id("q1").text, 5.0);
  CHECK(o.status == Status::Error);
  CHECK_FALSE(o.detail.empty());
}

TEST_CASE("the endpoint answers with the engine's exact results") {
  std::ostringstream os;
  GenerationConfig cfg;
  cfg.triple_limit = 12'000;
  generate(cfg, os);
  std::istringstream is(os.str());
  TripleStore store = TripleStore::load_stream(is);

  SparqlServer server(store);
  int port = server.start("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::string base = "http://127.0.0.1:" + std::to_string(port);

  for (const char* id : {"q1", "q3a", "q5a", "q10", "q12a", "q12c"}) {
    CAPTURE(id);
    const auto& entry = queries::by_id(id);
    QueryOutcome remote = query_endpoint(base, entry.text, 30.0);
    REQUIRE(remote.status == Status::Success);

    sparql::EvalResult local =
        sparql::evaluate(sparql::parse_query(entry.text), store);
    if (local.is_ask) {
      CHECK(remote.ask == local.ask_value);
    } else {
      CHECK(remote.row_count == local.table.rows.size());
    }
  }

  // Malformed query: HTTP 400 surfaces as Error with the parser's message.
  QueryOutcome bad = query_endpoint(base, "SELECT WHERE {", 30.0);
  CHECK(bad.status == Status::Error);
  CHECK_FALSE(bad.detail.empty());

  server.stop();
}
