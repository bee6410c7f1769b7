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
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rdfbench/bench.hpp"
#include "rdfbench/queries.hpp"

namespace rdfbench::bench {

namespace {

constexpr double kPenaltySeconds = 3600.0;
constexpr double kGeoFloorSeconds = 1e-9;

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string human_size(uint64_t n) {
  if (n % 1'000'000 == 0 && n > 0) return std::to_string(n / 1'000'000) + "M";
  if (n % 1'000 == 0 && n > 0) return std::to_string(n / 1'000) + "k";
  return std::to_string(n);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

double parse_double(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad ") + what + " value: " + s);
  }
}

uint64_t parse_u64(const std::string& s, const char* what) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error(std::string("bad ") + what + " value: " + s);
  return v;
}

}  // namespace

char status_char(Status s) {
  switch (s) {
    case Status::Success: return '+';
    case Status::Timeout: return 'T';
    case Status::MemoryExhaustion: return 'M';
    case Status::Error: return 'E';
  }
  return '?';
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Success: return "Success";
    case Status::Timeout: return "Timeout";
    case Status::MemoryExhaustion: return "MemoryExhaustion";
    case Status::Error: return "Error";
  }
  return "?";
}

std::optional<Status> status_from_name(const std::string& name) {
  for (Status s : {Status::Success, Status::Timeout, Status::MemoryExhaustion,
                   Status::Error})
    if (name == status_name(s)) return s;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (sizes.empty()) throw std::invalid_argument("at least one size required");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw std::invalid_argument("sizes must be strictly ascending");
  if (!(timeout_seconds > 0))
    throw std::invalid_argument("timeout must be positive");
}

bool BenchReport::any_error() const {
  for (const SizeReport& s : sizes)
    for (const auto& runs : s.outcomes)
      for (const QueryOutcome& o : runs)
        if (o.status == Status::Error) return true;
  return false;
}

QueryAggregate aggregate_runs(const std::vector<QueryOutcome>& runs) {
  QueryAggregate agg;
  if (runs.empty()) return agg;
  agg.status = Status::Success;
  double total = 0;
  for (const QueryOutcome& o : runs) {
    agg.status = std::max(agg.status, o.status);
    total += o.tme;
    if (o.status == Status::Success) {
      if (!agg.rows && !agg.ask) {
        agg.rows = o.row_count;
        agg.ask = o.ask;
      }
    }
  }
  agg.mean_tme = total / double(runs.size());
  return agg;
}

PenalizedMeans penalized_means(const std::vector<QueryAggregate>& per_query) {
  PenalizedMeans m;
  if (per_query.empty()) return m;
  double sum = 0, log_sum = 0;
  for (const QueryAggregate& q : per_query) {
    double t = q.status == Status::Success ? q.mean_tme : kPenaltySeconds;
    sum += t;
    log_sum += std::log(std::max(t, kGeoFloorSeconds));
  }
  m.arithmetic = sum / double(per_query.size());
  m.geometric = std::exp(log_sum / double(per_query.size()));
  return m;
}

std::string render_csv(const BenchReport& report) {
  const auto& catalog = queries::all();
  std::string out = "size,query,run,status,tme,usr,sys,rmem,rows\n";
  for (const SizeReport& s : report.sizes) {
    for (size_t q = 0; q < s.outcomes.size(); ++q) {
      for (size_t r = 0; r < s.outcomes[q].size(); ++r) {
        const QueryOutcome& o = s.outcomes[q][r];
        out += std::to_string(s.size);
        out += ',';
        out += catalog[q].label;
        out += ',';
        out += std::to_string(r + 1);
        out += ',';
        out += status_name(o.status);
        out += ',';
        out += full_precision(o.tme);
        out += ',';
        if (o.usr) out += full_precision(*o.usr);
        out += ',';
        if (o.sys) out += full_precision(*o.sys);
        out += ',';
        if (o.rmem) out += std::to_string(*o.rmem);
        out += ',';
        if (o.ask) out += *o.ask ? "true" : "false";
        else if (o.row_count) out += std::to_string(*o.row_count);
        out += '\n';
      }
    }
  }
  return out;
}

BenchReport parse_csv(const std::string& csv) {
  const auto& catalog = queries::all();
  std::map<std::string, size_t> query_index;
  for (size_t i = 0; i < catalog.size(); ++i)
    query_index[catalog[i].label] = i;

  BenchReport report;
  std::map<uint64_t, size_t> size_index;
  std::istringstream in(csv);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line != "size,query,run,status,tme,usr,sys,rmem,rows")
        throw std::runtime_error("unexpected CSV header: " + line);
      continue;
    }
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != 9)
      throw std::runtime_error("expected 9 CSV cells, got " +
                               std::to_string(cells.size()) + ": " + line);

    uint64_t size = parse_u64(cells[0], "size");
    auto qit = query_index.find(cells[1]);
    if (qit == query_index.end())
      throw std::runtime_error("unknown query label: " + cells[1]);
    size_t run = parse_u64(cells[2], "run");
    if (run < 1) throw std::runtime_error("run numbers are 1-based");

    QueryOutcome o;
    std::optional<Status> st = status_from_name(cells[3]);
    if (!st) throw std::runtime_error("unknown status: " + cells[3]);
    o.status = *st;
    o.tme = parse_double(cells[4], "tme");
    if (!cells[5].empty()) o.usr = parse_double(cells[5], "usr");
    if (!cells[6].empty()) o.sys = parse_double(cells[6], "sys");
    if (!cells[7].empty()) o.rmem = parse_u64(cells[7], "rmem");
    if (!cells[8].empty()) {
      if (cells[8] == "true" || cells[8] == "false") o.ask = cells[8] == "true";
      else o.row_count = parse_u64(cells[8], "rows");
    }

    auto sit = size_index.find(size);
    if (sit == size_index.end()) {
      sit = size_index.emplace(size, report.sizes.size()).first;
      report.sizes.emplace_back();
      report.sizes.back().size = size;
      report.sizes.back().outcomes.resize(catalog.size());
    }
    auto& runs = report.sizes[sit->second].outcomes[qit->second];
    if (runs.size() < run) runs.resize(run);
    runs[run - 1] = std::move(o);
  }
  return report;
}

std::string render_markdown(const BenchReport& report) {
  const auto& catalog = queries::all();
  std::ostringstream out;
  out << "| Query |";
  for (const SizeReport& s : report.sizes) out << ' ' << human_size(s.size) << " |";
  out << "\n|---|";
  for (size_t i = 0; i < report.sizes.size(); ++i) out << "---|";
  out << '\n';

  std::vector<std::vector<QueryAggregate>> aggs(report.sizes.size());
  for (size_t si = 0; si < report.sizes.size(); ++si)
    for (const auto& runs : report.sizes[si].outcomes)
      aggs[si].push_back(aggregate_runs(runs));

  for (size_t q = 0; q < catalog.size(); ++q) {
    out << "| " << catalog[q].label << " |";
    for (size_t si = 0; si < report.sizes.size(); ++si) {
      if (q >= aggs[si].size()) {
        out << " |";
        continue;
      }
      const QueryAggregate& a = aggs[si][q];
      char buf[32];
      if (a.status == Status::Success) {
        std::snprintf(buf, sizeof buf, " %.3fs |", a.mean_tme);
        out << buf;
      } else {
        out << ' ' << status_char(a.status) << " |";
      }
    }
    out << '\n';
  }

  out << "| arithmetic mean |";
  std::vector<PenalizedMeans> means;
  for (const auto& a : aggs) means.push_back(penalized_means(a));
  for (const PenalizedMeans& m : means) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3fs |", m.arithmetic);
    out << buf;
  }
  out << "\n| geometric mean |";
  for (const PenalizedMeans& m : means) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3fs |", m.geometric);
    out << buf;
  }
  out << '\n';
  return out.str();
}

std::string render_success_table(const BenchReport& report) {
  // Column key, one character per query: Q10..Q12 appear as hex digits
  // A..C, the letter row carries the a/b/c variants of Q3 and Q5.
  std::ostringstream out;
  out << "Query 123  45 6789ABC\n";
  out << "        abc ab\n";
  for (const SizeReport& s : report.sizes) {
    std::string label = human_size(s.size);
    if (label.size() < 6) label.resize(6, ' ');
    out << label;
    for (const auto& runs : s.outcomes)
      out << status_char(aggregate_runs(runs).status);
    out << '\n';
  }
  out << "+:=Success, T:=Timeout, M:=Memory Exhaustion, and E:=Error\n";
  return out.str();
}

}  // namespace rdfbench::bench
