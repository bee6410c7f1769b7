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

// End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
// process exits non-zero when any check fails. Values asserted here were
// computed independently of the implementation (closed forms, hand counts,
// or external scripts) and are frozen as constants.

#include <fcntl.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz_common.hpp"
#include "rdfbench/bench.hpp"
#include "rdfbench/queries.hpp"
#include "rdfbench/rdfmodel.hpp"
#include "rdfbench/rng.hpp"
#include "rdfbench/sparql/eval.hpp"
#include "rdfbench/sparql/oracle.hpp"
#include "rdfbench/sparql/parser.hpp"
#include "rdfbench/store.hpp"
#include "rdfbench/worldsim.hpp"

#ifndef RDFBENCH_CLI
#error "RDFBENCH_CLI (path to the command-line binary) must be defined"
#endif

namespace fs = std::filesystem;
using namespace rdfbench;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& label, bool pass,
            const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << index << ". " << label;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << std::endl;
  if (!pass) g_failures++;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << std::fixed << v;
  return os.str();
}

// ---------------------------------------------------------------- processes

struct ChildResult {
  int exit_code = -1;
  double wall_seconds = 0.0;
  uint64_t max_rss_bytes = 0;  // from wait4
  std::string output;          // stdout + stderr
};

ChildResult run_cli(const std::vector<std::string>& args) {
  int pipefd[2];
  if (pipe(pipefd) != 0) throw std::runtime_error("pipe() failed");

  std::vector<std::string> all;
  all.push_back(RDFBENCH_CLI);
  all.insert(all.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : all) argv.push_back(a.data());
  argv.push_back(nullptr);

  Clock::time_point t0 = Clock::now();
  pid_t pid = fork();
  if (pid < 0) throw std::runtime_error("fork() failed");
  if (pid == 0) {
    dup2(pipefd[1], STDOUT_FILENO);
    dup2(pipefd[1], STDERR_FILENO);
    close(pipefd[0]);
    close(pipefd[1]);
    execv(argv[0], argv.data());
    _exit(127);
  }
  close(pipefd[1]);

  ChildResult r;
  char buf[4096];
  ssize_t n;
  while ((n = read(pipefd[0], buf, sizeof buf)) > 0) r.output.append(buf, size_t(n));
  close(pipefd[0]);

  int status = 0;
  struct rusage ru{};
  if (wait4(pid, &status, 0, &ru) < 0) throw std::runtime_error("wait4() failed");
  r.wall_seconds = seconds_since(t0);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.max_rss_bytes = uint64_t(ru.ru_maxrss) * 1024;  // ru_maxrss is in KiB
  return r;
}

// Background server process; stdout is read line by line.
struct ServerProc {
  pid_t pid = -1;
  FILE* out = nullptr;

  ~ServerProc() { terminate(); }

  void terminate() {
    if (pid > 0) {
      kill(pid, SIGTERM);
      int status = 0;
      waitpid(pid, &status, 0);
      pid = -1;
    }
    if (out) {
      fclose(out);
      out = nullptr;
    }
  }
};

ServerProc spawn_serve(const std::string& doc, int& port_out) {
  int pipefd[2];
  if (pipe(pipefd) != 0) throw std::runtime_error("pipe() failed");

  std::vector<std::string> all = {RDFBENCH_CLI, "serve", "--doc", doc,
                                  "--port", "0"};
  std::vector<char*> argv;
  for (std::string& a : all) argv.push_back(a.data());
  argv.push_back(nullptr);

  ServerProc sp;
  sp.pid = fork();
  if (sp.pid < 0) throw std::runtime_error("fork() failed");
  if (sp.pid == 0) {
    dup2(pipefd[1], STDOUT_FILENO);
    close(pipefd[0]);
    close(pipefd[1]);
    execv(argv[0], argv.data());
    _exit(127);
  }
  close(pipefd[1]);
  sp.out = fdopen(pipefd[0], "r");

  port_out = -1;
  char line[512];
  while (fgets(line, sizeof line, sp.out)) {
    std::string s(line);
    auto at = s.find("listening on ");
    if (at != std::string::npos) {
      port_out = std::atoi(s.c_str() + at + strlen("listening on "));
      break;
    }
  }
  if (port_out <= 0) throw std::runtime_error("server did not report a port");
  return sp;
}

// --------------------------------------------------------------- generation

std::string generate_string(uint64_t triples, uint64_t seed,
                            GenerationStats* stats = nullptr) {
  GenerationConfig cfg;
  cfg.seed = seed;
  cfg.triple_limit = triples;
  std::ostringstream os;
  GenerationStats st = generate(cfg, os);
  if (stats) *stats = st;
  return std::move(os).str();
}

TripleStore store_from(const std::string& text) {
  std::istringstream is(text);
  return TripleStore::load_stream(is);
}

size_t row_count(const TripleStore& store, const char* id) {
  sparql::EvalResult r =
      sparql::evaluate(sparql::parse_query(queries::by_id(id).text), store);
  return r.table.rows.size();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- criteria

void criterion1_determinism(const fs::path& tmp) {
  fs::path a = tmp / "det-a.nt", b = tmp / "det-b.nt", c = tmp / "det-c.nt";
  ChildResult r1 = run_cli({"generate", "--triples", "250000", "--out", a.string()});
  ChildResult r2 = run_cli({"generate", "--triples", "250000", "--out", b.string()});
  ChildResult r3 = run_cli({"generate", "--triples", "250000", "--seed", "99",
                            "--out", c.string()});
  bool ok_exit = r1.exit_code == 0 && r2.exit_code == 0 && r3.exit_code == 0;
  bool identical = read_file(a) == read_file(b);
  bool differs = read_file(a) != read_file(c);
  bool fast = r1.wall_seconds < 30.0 && r2.wall_seconds < 30.0;
  report(1, "equal seeds reproduce 250k byte-identically, other seeds differ",
         ok_exit && identical && differs && fast,
         "runs " + fmt(r1.wall_seconds) + "s/" + fmt(r2.wall_seconds) +
             "s, identical=" + (identical ? "yes" : "no") +
             ", seed 99 differs=" + (differs ? "yes" : "no"));
}

void criterion2_prefix(const fs::path& tmp) {
  fs::path small = tmp / "pre-10k.nt", large = tmp / "pre-50k.nt";
  ChildResult r1 = run_cli({"generate", "--triples", "10000", "--out", small.string()});
  ChildResult r2 = run_cli({"generate", "--triples", "50000", "--out", large.string()});
  std::string s = read_file(small), l = read_file(large);
  bool prefix = r1.exit_code == 0 && r2.exit_code == 0 && !s.empty() &&
                l.size() > s.size() && l.compare(0, s.size(), s) == 0;
  report(2, "the 10k document is a byte prefix of the 50k document", prefix,
         std::to_string(s.size()) + " bytes lead " + std::to_string(l.size()));
}

void criterion3_scaling(const fs::path&) {
  auto timed_gen = [](const char* n) {
    ChildResult best = run_cli({"generate", "--triples", n, "--out", "/dev/null"});
    ChildResult again = run_cli({"generate", "--triples", n, "--out", "/dev/null"});
    if (again.exit_code == 0 && again.wall_seconds < best.wall_seconds)
      best.wall_seconds = again.wall_seconds;
    if (again.max_rss_bytes > best.max_rss_bytes)
      best.max_rss_bytes = again.max_rss_bytes;
    return best;
  };
  ChildResult small = timed_gen("100000");
  ChildResult large = timed_gen("1000000");
  bool ok_exit = small.exit_code == 0 && large.exit_code == 0;
  bool under_limit = large.wall_seconds < 120.0;
  bool near_linear = large.wall_seconds <= 15.0 * small.wall_seconds;
  bool memory_flat = large.max_rss_bytes <= 2 * small.max_rss_bytes;
  report(3, "1e6 generation is fast, near-linear, and memory-flat vs 1e5",
         ok_exit && under_limit && near_linear && memory_flat,
         "1e5 " + fmt(small.wall_seconds) + "s/" +
             std::to_string(small.max_rss_bytes / 1024 / 1024) + "MiB, 1e6 " +
             fmt(large.wall_seconds) + "s/" +
             std::to_string(large.max_rss_bytes / 1024 / 1024) +
             "MiB (time x" + fmt(large.wall_seconds / small.wall_seconds, 1) +
             ", mem x" +
             fmt(double(large.max_rss_bytes) / double(small.max_rss_bytes), 2) +
             ")");
}

void criterion4_fidelity() {
  GenerationStats st;
  std::string doc = generate_string(1'000'000, kDefaultSeed, &st);

  const std::string doc_prefix = "http://localhost/publications/";
  uint64_t articles = 0, art_pages = 0, art_month = 0, art_isbn = 0;
  uint64_t total_docs = 0, art_plus_inproc = 0;
  std::map<int, uint64_t> inproc_year, proc_year;

  auto classify = [&](const std::string& uri, std::string& cls, int& year) {
    if (uri.compare(0, doc_prefix.size(), doc_prefix) != 0) return false;
    size_t a = doc_prefix.size();
    size_t b = uri.find('/', a);
    size_t c = uri.find('/', b + 1);
    if (b == std::string::npos || c == std::string::npos) return false;
    cls = uri.substr(a, b - a);
    year = std::atoi(uri.c_str() + b + 1);
    return true;
  };

  std::istringstream is(doc);
  std::string line, cls;
  int year = 0;
  Triple t;
  while (std::getline(is, line)) {
    if (!parse_ntriples_line(line, t)) continue;
    if (t.s.kind != TermKind::Uri || !classify(t.s.lex, cls, year)) continue;
    if (t.p == vocab::kRdfType && t.o.kind == TermKind::Uri &&
        t.o.lex.rfind("http://localhost/vocabulary/bench/", 0) == 0) {
      total_docs++;
      if (cls == "article") articles++;
      if (cls == "article" || cls == "inproc") art_plus_inproc++;
      if (cls == "inproc") inproc_year[year]++;
      if (cls == "proc") proc_year[year]++;
    } else if (cls == "article") {
      if (t.p == vocab::kSwrcPages) art_pages++;
      if (t.p == vocab::kSwrcMonth) art_month++;
      if (t.p == vocab::kSwrcIsbn) art_isbn++;
    }
  }

  double p_pages = double(art_pages) / double(articles);
  double p_month = double(art_month) / double(articles);
  int last = st.last_complete_year;
  uint64_t ip = inproc_year[last - 1] + inproc_year[last];
  uint64_t pr = proc_year[last - 1] + proc_year[last];
  double ratio = pr ? double(ip) / double(pr) : 0.0;
  double share = double(art_plus_inproc) / double(total_docs);

  bool ok = std::abs(p_pages - 0.9261) <= 0.01 &&
            std::abs(p_month - 0.0065) <= 0.003 && art_isbn == 0 &&
            ratio >= 40.0 && ratio <= 80.0 && share > 0.70;
  report(4, "1e6-document attribute and class-mix statistics hit their bands",
         ok,
         "pages|article " + fmt(p_pages, 4) + ", month|article " +
             fmt(p_month, 4) + ", isbn|article " + std::to_string(art_isbn) +
             ", inproc/proc@" + std::to_string(last - 1) + "-" +
             std::to_string(last) + " " + fmt(ratio, 1) +
             ", article+inproc share " + fmt(share, 3));
}

void criterion5_fixed_invariants() {
  std::string doc = generate_string(12'000, kDefaultSeed);
  TripleStore store = store_from(doc);
  std::vector<std::string> problems;

  auto expect_rows = [&](const char* id, size_t want) {
    size_t got = row_count(store, id);
    if (got != want)
      problems.push_back(std::string(id) + "=" + std::to_string(got) +
                         " want " + std::to_string(want));
  };
  expect_rows("q1", 1);
  expect_rows("q3c", 0);
  expect_rows("q9", 4);
  expect_rows("q11", 10);

  auto expect_ask = [&](const char* id, bool want) {
    sparql::EvalResult r = sparql::evaluate(
        sparql::parse_query(queries::by_id(id).text), store);
    if (!r.is_ask || r.ask_value != want)
      problems.push_back(std::string(id) + "=" +
                         (r.ask_value ? "true" : "false") + " want " +
                         (want ? "true" : "false"));
  };
  expect_ask("q12a", true);
  expect_ask("q12b", true);
  expect_ask("q12c", false);

  sparql::EvalResult q5a = sparql::evaluate(
      sparql::parse_query(queries::by_id("q5a").text), store);
  sparql::EvalResult q5b = sparql::evaluate(
      sparql::parse_query(queries::by_id("q5b").text), store);
  if (!sparql::same_solutions(q5a, q5b, false))
    problems.push_back("q5a and q5b rows differ (" +
                       std::to_string(q5a.table.rows.size()) + " vs " +
                       std::to_string(q5b.table.rows.size()) + ")");

  // Complete-year documents: 12 mentions per year from 1940; size-stable
  // once the mention window [1940, 1996] lies inside the data.
  GenerationConfig y;
  y.end_year = 1950;
  std::ostringstream os50;
  generate(y, os50);
  size_t rows1950 = row_count(store_from(os50.str()), "q10");
  if (rows1950 != 12 * (1950 - 1940 + 1))
    problems.push_back("q10@1950=" + std::to_string(rows1950) + " want 132");

  y.end_year = 1997;
  std::ostringstream os97;
  generate(y, os97);
  size_t rows1997 = row_count(store_from(os97.str()), "q10");
  y.end_year = 1998;
  std::ostringstream os98;
  generate(y, os98);
  size_t rows1998 = row_count(store_from(os98.str()), "q10");
  if (rows1997 != 12 * (1996 - 1940 + 1))
    problems.push_back("q10@1997=" + std::to_string(rows1997) + " want 684");
  if (rows1998 != rows1997)
    problems.push_back("q10 not constant past 1996 (" +
                       std::to_string(rows1997) + " vs " +
                       std::to_string(rows1998) + ")");

  std::string detail = "q1/q3c/q9/q11 rows, q12 verdicts, q5a=q5b, q10 132@1950 and 684 past 1996";
  if (!problems.empty()) {
    detail.clear();
    for (const std::string& p : problems) detail += p + "; ";
  }
  report(5, "fixed query invariants hold on generated documents", problems.empty(),
         detail);
}

void criterion6_growth() {
  TripleStore small = store_from(generate_string(10'000, kDefaultSeed));
  TripleStore large = store_from(generate_string(250'000, kDefaultSeed));
  std::vector<std::string> problems;
  std::string counts;

  for (const char* id : {"q2", "q3a", "q4", "q5b", "q6"}) {
    size_t a = row_count(small, id);
    size_t b = row_count(large, id);
    counts += std::string(id) + " " + std::to_string(a) + "->" +
              std::to_string(b) + " ";
    if (b <= a)
      problems.push_back(std::string(id) + " did not grow (" +
                         std::to_string(a) + " -> " + std::to_string(b) + ")");
  }

  double q3a_rows = double(row_count(large, "q3a"));
  double q3b_rows = double(row_count(large, "q3b"));
  double got = q3b_rows > 0 ? q3a_rows / q3b_rows : 0.0;
  double want = 0.9261 / 0.0065;
  if (!(got >= want / 3.0 && got <= want * 3.0))
    problems.push_back("q3a/q3b ratio " + fmt(got, 1) + " outside [" +
                       fmt(want / 3.0, 1) + ", " + fmt(want * 3.0, 1) + "]");

  std::string detail = counts + "| q3a/q3b@250k " + fmt(got, 1) +
                       " vs fitted " + fmt(want, 1);
  if (!problems.empty()) {
    detail.clear();
    for (const std::string& p : problems) detail += p + "; ";
  }
  report(6, "selective query results grow strictly from 10k to 250k",
         problems.empty(), detail);
}

void criterion7_fuzz() {
  Clock::time_point t0 = Clock::now();
  fuzz::FuzzStats stats = fuzz::run_engine_oracle_fuzz(kDefaultSeed, 1200);
  double secs = seconds_since(t0);
  bool ok = stats.failure.empty() && stats.cases == 1200 && secs < 60.0;
  std::string detail = std::to_string(stats.cases) + " cases, " +
                       std::to_string(stats.nonempty) + " non-empty, " +
                       std::to_string(stats.total_rows) + " rows, " +
                       fmt(secs) + "s";
  if (!stats.failure.empty()) detail += "\n" + stats.failure;
  report(7, "engine matches the brute-force evaluator on randomized cases", ok,
         detail);
}

void criterion8_metrics() {
  using bench::QueryAggregate;
  using bench::Status;

  auto success = [](double t) {
    QueryAggregate a;
    a.status = Status::Success;
    a.mean_tme = t;
    return a;
  };

  // {1, 100, penalty} -> arithmetic 3701/3, geometric cbrt(360000).
  bench::PenalizedMeans m =
      bench::penalized_means({success(1.0), success(100.0), success(3600.0)});
  double want_arith = 3701.0 / 3.0;
  double want_geo = std::cbrt(360000.0);
  bool means_ok =
      std::abs(m.arithmetic - want_arith) <= 1e-9 * want_arith &&
      std::abs(m.geometric - want_geo) <= 1e-9 * want_geo;

  QueryAggregate timeout;
  timeout.status = Status::Timeout;
  timeout.mean_tme = 60.0;
  bench::PenalizedMeans with_failure =
      bench::penalized_means({success(0.5), timeout, success(2.0)});
  bench::PenalizedMeans without =
      bench::penalized_means({success(0.5), success(60.0), success(2.0)});
  bool moderation_ok = with_failure.arithmetic / without.arithmetic >
                       with_failure.geometric / without.geometric;

  bench::PenalizedMeans flat = bench::penalized_means(
      {success(0.37), success(0.37), success(0.37)});
  bool flat_ok = std::abs(flat.arithmetic - 0.37) <= 1e-9 &&
                 std::abs(flat.geometric - 0.37) <= 1e-9;

  // Exact matrix rendering, including the legend line.
  bench::BenchReport r;
  const auto& catalog = queries::all();
  const std::string letters = "++T+++M++++E+++++";
  r.sizes.emplace_back();
  r.sizes.back().size = 10'000;
  for (char c : letters) {
    bench::QueryOutcome o;
    o.status = c == '+'   ? Status::Success
               : c == 'T' ? Status::Timeout
               : c == 'M' ? Status::MemoryExhaustion
                          : Status::Error;
    o.tme = 0.1;
    r.sizes.back().outcomes.push_back({o});
  }
  (void)catalog;
  std::string want_table =
      "Query 123  45 6789ABC\n"
      "        abc ab\n"
      "10k   ++T+++M++++E+++++\n"
      "+:=Success, T:=Timeout, M:=Memory Exhaustion, and E:=Error\n";
  bool table_ok = bench::render_success_table(r) == want_table;

  report(8, "penalized means and the success matrix match hand-computed forms",
         means_ok && moderation_ok && flat_ok && table_ok,
         "arith " + fmt(m.arithmetic, 10) + " geo " + fmt(m.geometric, 10) +
             ", matrix " + (table_ok ? "exact" : "WRONG"));
}

void criterion9_end_to_end(const fs::path& tmp) {
  fs::path data_dir = tmp / "bench-data";
  fs::path builtin_csv = tmp / "builtin.csv";

  ChildResult bench_run = run_cli(
      {"bench", "--sizes", "10k,50k", "--runs", "2", "--timeout", "60s",
       "--data-dir", data_dir.string(), "--csv", builtin_csv.string(),
       "--quiet"});
  if (bench_run.exit_code != 0) {
    report(9, "builtin bench plus endpoint parity", false,
           "bench exited " + std::to_string(bench_run.exit_code) + ": " +
               bench_run.output.substr(0, 300));
    return;
  }

  bench::BenchReport builtin = bench::parse_csv(read_file(builtin_csv));
  uint64_t cells = 0, successes = 0;
  for (const auto& s : builtin.sizes)
    for (const auto& runs : s.outcomes)
      for (const auto& o : runs) {
        cells++;
        if (o.status == bench::Status::Success) successes++;
      }
  if (cells != 2 * 17 * 2 || successes != cells) {
    report(9, "builtin bench plus endpoint parity", false,
           std::to_string(successes) + "/" + std::to_string(cells) +
               " cells succeeded");
    return;
  }

  // Serve each cached document and re-run the grid through the endpoint.
  std::vector<std::string> problems;
  for (const auto& size_report : builtin.sizes) {
    std::string tag = size_report.size % 1'000'000 == 0
                          ? std::to_string(size_report.size / 1'000'000) + "M"
                          : std::to_string(size_report.size / 1'000) + "k";
    fs::path doc = data_dir / ("doc-" + tag + "-seed" +
                               std::to_string(kDefaultSeed) + ".nt");
    int port = -1;
    ServerProc server = spawn_serve(doc.string(), port);

    fs::path remote_csv = tmp / ("endpoint-" + tag + ".csv");
    ChildResult remote_run = run_cli(
        {"bench", "--sizes", tag, "--runs", "2", "--timeout", "60s",
         "--endpoint", "http://127.0.0.1:" + std::to_string(port) + "/sparql",
         "--data-dir", data_dir.string(), "--csv", remote_csv.string(),
         "--quiet"});
    server.terminate();
    if (remote_run.exit_code != 0) {
      problems.push_back(tag + ": endpoint bench exited " +
                         std::to_string(remote_run.exit_code));
      continue;
    }

    bench::BenchReport remote = bench::parse_csv(read_file(remote_csv));
    if (remote.sizes.size() != 1) {
      problems.push_back(tag + ": unexpected endpoint report shape");
      continue;
    }
    const auto& catalog = queries::all();
    for (size_t q = 0; q < catalog.size(); ++q) {
      const auto& local_runs = size_report.outcomes[q];
      const auto& remote_runs = remote.sizes[0].outcomes[q];
      for (size_t run = 0; run < local_runs.size() && run < remote_runs.size();
           ++run) {
        const auto& lo = local_runs[run];
        const auto& ro = remote_runs[run];
        if (ro.status != bench::Status::Success)
          problems.push_back(tag + " " + std::string(catalog[q].label) +
                             ": endpoint run failed");
        else if (lo.row_count != ro.row_count || lo.ask != ro.ask)
          problems.push_back(tag + " " + std::string(catalog[q].label) +
                             ": rows differ");
      }
    }
  }

  std::string detail = "68 builtin cells all Success; endpoint row counts identical";
  if (!problems.empty()) {
    detail.clear();
    for (const std::string& p : problems) detail += p + "; ";
  }
  report(9, "builtin bench plus endpoint parity", problems.empty(), detail);
}

}  // namespace

int main() {
  fs::path tmp = fs::temp_directory_path() / "rdfbench-acceptance";
  std::error_code ec;
  fs::remove_all(tmp, ec);
  fs::create_directories(tmp);

  try {
    criterion1_determinism(tmp);
    criterion2_prefix(tmp);
    criterion3_scaling(tmp);
    criterion4_fidelity();
    criterion5_fixed_invariants();
    criterion6_growth();
    criterion7_fuzz();
    criterion8_metrics();
    criterion9_end_to_end(tmp);
  } catch (const std::exception& e) {
    std::cout << "FAIL  aborted by exception: " << e.what() << std::endl;
    g_failures++;
  }

  fs::remove_all(tmp, ec);
  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criteria failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
