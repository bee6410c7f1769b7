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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <unordered_set>

#include "CLI11.hpp"
#include "rdfbench/bench.hpp"
#include "rdfbench/distributions.hpp"
#include "rdfbench/queries.hpp"
#include "rdfbench/rdfmodel.hpp"
#include "rdfbench/server.hpp"
#include "rdfbench/sparql/eval.hpp"
#include "rdfbench/sparql/parser.hpp"
#include "rdfbench/sparql/results.hpp"
#include "rdfbench/store.hpp"
#include "rdfbench/worldsim.hpp"

namespace {

using namespace rdfbench;

uint64_t parse_size(const std::string& text) {
  if (text.empty()) throw CLI::ValidationError("empty size");
  uint64_t scale = 1;
  std::string digits = text;
  char suffix = digits.back();
  if (suffix == 'k' || suffix == 'K') scale = 1'000;
  if (suffix == 'm' || suffix == 'M') scale = 1'000'000;
  if (suffix == 'g' || suffix == 'G') scale = 1'000'000'000;
  if (scale != 1) digits.pop_back();
  try {
    size_t pos = 0;
    uint64_t value = std::stoull(digits, &pos);
    if (pos != digits.size()) throw std::invalid_argument(digits);
    return value * scale;
  } catch (const std::exception&) {
    throw CLI::ValidationError("bad size: " + text);
  }
}

std::vector<uint64_t> parse_size_list(const std::string& text) {
  std::vector<uint64_t> sizes;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) sizes.push_back(parse_size(item));
  if (sizes.empty()) throw CLI::ValidationError("no sizes in: " + text);
  return sizes;
}

double parse_duration(const std::string& text) {
  if (text.empty()) throw CLI::ValidationError("empty duration");
  double scale = 1;
  std::string digits = text;
  switch (digits.back()) {
    case 's': scale = 1; digits.pop_back(); break;
    case 'm': scale = 60; digits.pop_back(); break;
    case 'h': scale = 3600; digits.pop_back(); break;
    default: break;
  }
  try {
    size_t pos = 0;
    double value = std::stod(digits, &pos);
    if (pos != digits.size() || !(value > 0)) throw std::invalid_argument(digits);
    return value * scale;
  } catch (const std::exception&) {
    throw CLI::ValidationError("bad duration: " + text);
  }
}

int cmd_generate(const std::string& triples, int year, uint64_t seed,
                 double untargeted, const std::string& out) {
  GenerationConfig config;
  config.seed = seed;
  config.untargeted_fraction = untargeted;
  config.output_path = out;
  if (!triples.empty()) config.triple_limit = parse_size(triples);
  if (year != 0) config.end_year = year;
  GenerationStats stats = generate_to_file(config);
  std::cout << stats.summary();
  return 0;
}

int cmd_stats(const std::string& path) {
  TripleStore store = TripleStore::load_file(path);

  auto count_type = [&](DocClass c) -> uint64_t {
    std::optional<TermId> p = store.find(vocab::kRdfType);
    std::optional<TermId> o = store.find(vocab::class_uri(c));
    if (!p || !o) return 0;
    return store.match({std::nullopt, p, o}).size();
  };

  uint64_t total_authors = 0, distinct_authors = 0;
  if (std::optional<TermId> creator = store.find(vocab::kDcCreator)) {
    std::unordered_set<TermId> seen;
    for (TripleIds t : store.match({std::nullopt, creator, std::nullopt})) {
      ++total_authors;
      seen.insert(t.o);
    }
    distinct_authors = seen.size();
  }

  long long last_year = 0;
  if (std::optional<TermId> issued = store.find(vocab::kDctermsIssued)) {
    for (TripleIds t : store.match({std::nullopt, issued, std::nullopt})) {
      const Term& o = store.term(t.o);
      if (o.kind != TermKind::Literal) continue;
      try {
        last_year = std::max(last_year, std::stoll(o.lex));
      } catch (const std::exception&) {
      }
    }
  }

  std::error_code ec;
  uintmax_t bytes = std::filesystem::file_size(path, ec);

  std::ostringstream out;
  out << "triples            " << store.size() << '\n';
  if (!ec) out << "file size [MB]     " << double(bytes) / 1e6 << '\n';
  out << "data up to         " << last_year << '\n';
  out << "total authors      " << total_authors << '\n';
  out << "distinct authors   " << distinct_authors << '\n';
  const std::pair<const char*, DocClass> classes[] = {
      {"journals", DocClass::Journal},
      {"articles", DocClass::Article},
      {"proceedings", DocClass::Proceedings},
      {"inproceedings", DocClass::Inproceedings},
      {"incollections", DocClass::Incollection},
      {"books", DocClass::Book},
      {"phd theses", DocClass::PhdThesis},
      {"masters theses", DocClass::MastersThesis},
      {"www docs", DocClass::Www},
  };
  for (auto [label, cls] : classes) {
    out << label;
    for (size_t i = std::string(label).size(); i < 19; ++i) out << ' ';
    out << count_type(cls) << '\n';
  }
  std::cout << out.str();
  return 0;
}

int cmd_query(const std::string& doc, const std::string& id,
              const std::string& file, const std::string& format,
              const std::string& timeout) {
  std::string text;
  if (!id.empty()) {
    text = queries::by_id(id).text;
  } else {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read query file: " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  TripleStore store = TripleStore::load_file(doc);
  sparql::QueryAst ast = sparql::parse_query(text);

  sparql::CancelToken token;
  sparql::CancelToken* token_ptr = nullptr;
  if (!timeout.empty()) {
    token.set_deadline(std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<
                           std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(
                               parse_duration(timeout))));
    token_ptr = &token;
  }
  sparql::EvalResult result = sparql::evaluate(ast, store, token_ptr);
  std::string text_out =
      format == "json" ? sparql::to_json(result) : sparql::to_csv(result);
  if (text_out.empty() || text_out.back() != '\n') text_out += '\n';
  std::cout << text_out;
  return 0;
}

int cmd_bench(const bench::RunConfig& config, const std::string& csv_path,
              bool quiet) {
  auto progress = [quiet](const std::string& line) {
    if (!quiet) std::cerr << line << '\n';
  };
  bench::BenchReport report = bench::run_bench(config, progress);

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot write " + csv_path);
    out << bench::render_csv(report);
    std::cerr << "raw outcomes written to " << csv_path << '\n';
  }

  std::cout << bench::render_success_table(report) << '\n'
            << bench::render_markdown(report);
  for (const bench::SizeReport& s : report.sizes) {
    if (s.load_seconds.empty()) continue;
    double total = 0;
    for (double v : s.load_seconds) total += v;
    std::cout << "load time " << s.size << " triples: mean "
              << total / double(s.load_seconds.size()) << "s over "
              << s.load_seconds.size() << " runs\n";
  }
  return report.any_error() ? 1 : 0;
}

int cmd_serve(const std::string& doc, const std::string& host, int port) {
  TripleStore store = TripleStore::load_file(doc);
  std::cout << "loaded " << store.size() << " triples from " << doc
            << std::endl;
  bench::SparqlServer server(store);
  int bound = server.start(host, port);
  std::cout << "listening on " << bound << std::endl;
  server.wait();
  return 0;
}

int cmd_export_queries(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const queries::BenchmarkQuery& q : queries::all()) {
    std::filesystem::path path = std::filesystem::path(dir) / (q.id + ".rq");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << q.text;
    if (!q.text.empty() && q.text.back() != '\n') out << '\n';
    std::cout << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rdfbench: synthetic bibliographic RDF generator, SPARQL "
               "engine, and benchmark harness"};
  app.require_subcommand(1);
  app.set_config("--config");

  // generate
  auto* gen = app.add_subcommand("generate", "produce an N-Triples document");
  std::string gen_triples, gen_out;
  int gen_year = 0;
  uint64_t gen_seed = kDefaultSeed;
  double gen_untargeted = 0.5;
  gen->add_option("--triples", gen_triples,
                  "triple budget (suffixes k/M/G), e.g. 250k");
  gen->add_option("--year", gen_year, "generate full years through this one");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--untargeted-fraction", gen_untargeted,
                  "fraction of citation slots left dangling")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", gen_out, "output path")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "summarize an N-Triples document");
  std::string stats_file;
  stats->add_option("file", stats_file, "N-Triples document")->required();

  // query
  auto* query = app.add_subcommand("query", "run one query against a document");
  std::string q_doc, q_id, q_file, q_format = "csv", q_timeout;
  query->add_option("--doc", q_doc, "N-Triples document")->required();
  query->add_option("--id", q_id, "catalog query id, e.g. Q4");
  query->add_option("--file", q_file, "file with query text");
  query->add_option("--format", q_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  query->add_option("--timeout", q_timeout, "e.g. 30s, 5m");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "run the benchmark grid");
  std::string b_sizes = "10k,50k,250k,1M,5M,25M", b_timeout = "30m";
  std::string b_memlimit, b_endpoint, b_datadir = "bench-data", b_csv;
  int b_runs = 3;
  uint64_t b_seed = kDefaultSeed;
  bool b_quiet = false;
  bench_cmd->add_option("--sizes", b_sizes, "comma list, e.g. 10k,50k");
  bench_cmd->add_option("--runs", b_runs, "runs per (size, query)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--timeout", b_timeout, "per query, e.g. 60s, 30m");
  bench_cmd->add_option("--memory-limit", b_memlimit,
                        "evaluation byte budget, e.g. 512M");
  bench_cmd->add_option("--endpoint", b_endpoint,
                        "HTTP endpoint; omit for the builtin engine");
  bench_cmd->add_option("--seed", b_seed, "generator seed");
  bench_cmd->add_option("--data-dir", b_datadir, "generated document cache");
  bench_cmd->add_option("--csv", b_csv, "write raw outcomes to this file");
  bench_cmd->add_flag("--quiet", b_quiet, "suppress progress lines");

  // serve
  auto* serve = app.add_subcommand(
      "serve", "expose a document over the SPARQL HTTP protocol");
  std::string s_doc, s_host = "127.0.0.1";
  int s_port = 8080;
  serve->add_option("--doc", s_doc, "N-Triples document")->required();
  serve->add_option("--host", s_host, "bind address");
  serve->add_option("--port", s_port, "TCP port (0 picks a free one)");

  // export-queries
  auto* exportq =
      app.add_subcommand("export-queries", "write the query catalog to files");
  std::string e_dir = "queries";
  exportq->add_option("--dir", e_dir, "output directory");

  // dump-params
  auto* dump = app.add_subcommand("dump-params",
                                  "print the distribution parameter manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (gen_triples.empty() == (gen_year == 0)) {
        std::cerr << "generate needs exactly one of --triples / --year\n";
        return 2;
      }
      return cmd_generate(gen_triples, gen_year, gen_seed, gen_untargeted,
                          gen_out);
    }
    if (stats->parsed()) return cmd_stats(stats_file);
    if (query->parsed()) {
      if (q_id.empty() == q_file.empty()) {
        std::cerr << "query needs exactly one of --id / --file\n";
        return 2;
      }
      return cmd_query(q_doc, q_id, q_file, q_format, q_timeout);
    }
    if (bench_cmd->parsed()) {
      bench::RunConfig config;
      config.sizes = parse_size_list(b_sizes);
      config.runs = b_runs;
      config.timeout_seconds = parse_duration(b_timeout);
      if (!b_memlimit.empty()) config.memory_limit = parse_size(b_memlimit);
      config.endpoint = b_endpoint;
      config.seed = b_seed;
      config.data_dir = b_datadir;
      config.validate();
      return cmd_bench(config, b_csv, b_quiet);
    }
    if (serve->parsed()) return cmd_serve(s_doc, s_host, s_port);
    if (exportq->parsed()) return cmd_export_queries(e_dir);
    if (dump->parsed()) {
      std::cout << params_manifest();
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
