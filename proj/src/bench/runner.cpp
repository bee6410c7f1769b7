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
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include <sys/resource.h>
#include <sys/time.h>

#include "httplib.h"
#include "rdfbench/bench.hpp"
#include "rdfbench/queries.hpp"
#include "rdfbench/sparql/eval.hpp"
#include "rdfbench/sparql/parser.hpp"
#include "rdfbench/sparql/results.hpp"
#include "rdfbench/store.hpp"
#include "rdfbench/worldsim.hpp"

namespace rdfbench::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CpuTimes {
  double usr = 0, sys = 0;
  bool ok = false;
};

CpuTimes cpu_times() {
  CpuTimes t;
  rusage ru{};
  if (getrusage(RUSAGE_SELF, &ru) == 0) {
    t.usr = double(ru.ru_utime.tv_sec) + double(ru.ru_utime.tv_usec) * 1e-6;
    t.sys = double(ru.ru_stime.tv_sec) + double(ru.ru_stime.tv_usec) * 1e-6;
    t.ok = true;
  }
  return t;
}

// Peak resident set of this process, from the proc filesystem.
std::optional<uint64_t> peak_rss_bytes() {
  std::ifstream in("/proc/self/status");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("VmHWM:", 0) != 0) continue;
    std::istringstream fields(line.substr(6));
    uint64_t kb = 0;
    if (fields >> kb) return kb * 1024;
    break;
  }
  return std::nullopt;
}

std::string size_tag(uint64_t n) {
  if (n % 1'000'000 == 0 && n > 0) return std::to_string(n / 1'000'000) + "M";
  if (n % 1'000 == 0 && n > 0) return std::to_string(n / 1'000) + "k";
  return std::to_string(n);
}

// Generated documents are cached per (size, seed) and reused across runs;
// reloading, not regeneration, is what makes a run cold.
std::string ensure_document(const RunConfig& config, uint64_t size,
                            const std::function<void(const std::string&)>& log) {
  namespace fs = std::filesystem;
  fs::create_directories(config.data_dir);
  std::ostringstream name;
  name << "doc-" << size_tag(size) << "-seed" << config.seed << ".nt";
  fs::path path = fs::path(config.data_dir) / name.str();
  if (!fs::exists(path)) {
    if (log) log("generating " + path.string());
    GenerationConfig g;
    g.seed = config.seed;
    g.triple_limit = size;
    g.output_path = path.string();
    generate_to_file(g);
  }
  return path.string();
}

QueryOutcome run_builtin_query(const std::string& text,
                               const TripleStore& store,
                               const RunConfig& config) {
  QueryOutcome outcome;
  CpuTimes before = cpu_times();
  Clock::time_point start = Clock::now();

  sparql::CancelToken token;
  token.set_deadline(start + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(
                                     config.timeout_seconds)));
  if (config.memory_limit) token.set_memory_budget(*config.memory_limit);

  // Cooperative worker: the token is polled inside the evaluation loops,
  // so the future resolves shortly after the deadline at the latest.
  std::future<sparql::EvalResult> worker =
      std::async(std::launch::async, [&]() -> sparql::EvalResult {
        sparql::QueryAst ast = sparql::parse_query(text);
        return sparql::evaluate(ast, store, &token);
      });

  try {
    sparql::EvalResult result = worker.get();
    outcome.status = Status::Success;
    outcome.tme = seconds_since(start);
    if (result.is_ask) outcome.ask = result.ask_value;
    else outcome.row_count = result.table.rows.size();
  } catch (const sparql::CancelledError& e) {
    if (e.reason == sparql::CancelReason::Timeout) {
      outcome.status = Status::Timeout;
      outcome.tme = config.timeout_seconds;
    } else {
      outcome.status = Status::MemoryExhaustion;
      outcome.tme = seconds_since(start);
    }
    outcome.detail = e.what();
  } catch (const std::exception& e) {
    outcome.status = Status::Error;
    outcome.tme = seconds_since(start);
    outcome.detail = e.what();
  }

  CpuTimes after = cpu_times();
  if (before.ok && after.ok) {
    outcome.usr = after.usr - before.usr;
    outcome.sys = after.sys - before.sys;
  }
  outcome.rmem = peak_rss_bytes();
  return outcome;
}

// scheme://host[:port][/path] -> (base for the client, request path)
std::pair<std::string, std::string> split_endpoint(const std::string& url) {
  size_t scheme = url.find("://");
  size_t path_at = scheme == std::string::npos
                       ? url.find('/')
                       : url.find('/', scheme + 3);
  if (path_at == std::string::npos) return {url, "/sparql"};
  std::string path = url.substr(path_at);
  return {url.substr(0, path_at), path.empty() ? "/sparql" : path};
}

}  // namespace

QueryOutcome query_endpoint(const std::string& url, const std::string& query,
                            double timeout_seconds) {
  QueryOutcome outcome;
  auto [base, path] = split_endpoint(url);

  httplib::Client client(base);
  auto whole = std::llround(std::floor(timeout_seconds));
  auto micros = std::llround((timeout_seconds - double(whole)) * 1e6);
  client.set_connection_timeout(time_t(whole), micros);
  client.set_read_timeout(time_t(whole), micros);
  client.set_write_timeout(time_t(whole), micros);

  Clock::time_point start = Clock::now();
  httplib::Headers headers{{"Accept", "application/sparql-results+json"}};
  httplib::Result response =
      client.Post(path, headers, httplib::Params{{"query", query}});
  outcome.tme = seconds_since(start);

  if (!response) {
    bool timed_out = response.error() == httplib::Error::ConnectionTimeout ||
                     outcome.tme >= timeout_seconds;
    outcome.status = timed_out ? Status::Timeout : Status::Error;
    if (timed_out) outcome.tme = timeout_seconds;
    outcome.detail = httplib::to_string(response.error());
    return outcome;
  }
  if (response->status >= 400) {
    outcome.status = Status::Error;
    outcome.detail = "HTTP " + std::to_string(response->status) + ": " +
                     response->body.substr(0, 200);
    return outcome;
  }
  try {
    sparql::EvalResult result = sparql::from_json(response->body);
    outcome.status = Status::Success;
    if (result.is_ask) outcome.ask = result.ask_value;
    else outcome.row_count = result.table.rows.size();
  } catch (const std::exception& e) {
    outcome.status = Status::Error;
    outcome.detail = std::string("malformed results payload: ") + e.what();
  }
  return outcome;
}

BenchReport run_bench(const RunConfig& config,
                      const std::function<void(const std::string&)>& progress) {
  config.validate();
  const auto& catalog = queries::all();
  const bool builtin = config.endpoint.empty();

  BenchReport report;
  report.config = config;
  for (uint64_t size : config.sizes) {
    SizeReport sr;
    sr.size = size;
    sr.outcomes.assign(catalog.size(), {});

    std::string doc;
    if (builtin) doc = ensure_document(config, size, progress);

    for (int run = 1; run <= config.runs; ++run) {
      std::optional<TripleStore> store;
      if (builtin) {
        Clock::time_point t0 = Clock::now();
        store.emplace(TripleStore::load_file(doc));
        sr.load_seconds.push_back(seconds_since(t0));
        if (progress) {
          std::ostringstream msg;
          msg << size_tag(size) << " run " << run << ": loaded "
              << store->size() << " triples in " << sr.load_seconds.back()
              << "s";
          progress(msg.str());
        }
      }

      for (size_t q = 0; q < catalog.size(); ++q) {
        QueryOutcome outcome =
            builtin ? run_builtin_query(catalog[q].text, *store, config)
                    : query_endpoint(config.endpoint, catalog[q].text,
                                     config.timeout_seconds);
        if (progress) {
          std::ostringstream msg;
          msg << size_tag(size) << ' ' << catalog[q].label << " run " << run
              << ": " << status_name(outcome.status) << ' ' << outcome.tme
              << "s";
          if (outcome.row_count) msg << ' ' << *outcome.row_count << " rows";
          if (outcome.ask) msg << ' ' << (*outcome.ask ? "true" : "false");
          if (!outcome.detail.empty()) msg << " (" << outcome.detail << ')';
          progress(msg.str());
        }
        sr.outcomes[q].push_back(std::move(outcome));
      }
    }
    report.sizes.push_back(std::move(sr));
  }
  return report;
}

}  // namespace rdfbench::bench
