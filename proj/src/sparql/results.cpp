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
#include "rdfbench/sparql/results.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace rdfbench::sparql {
namespace {

using nlohmann::json;

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string render_term(const Term& t) {
  std::string out;
  serialize_term(t, out);
  return out;
}

json term_to_json(const Term& t) {
  json b;
  switch (t.kind) {
    case TermKind::Uri:
      b["type"] = "uri";
      b["value"] = t.lex;
      break;
    case TermKind::Blank:
      b["type"] = "bnode";
      b["value"] = t.lex;
      break;
    case TermKind::Literal:
      b["type"] = "literal";
      b["value"] = t.lex;
      if (!t.datatype.empty()) {
        if (t.datatype[0] == '@') b["xml:lang"] = t.datatype.substr(1);
        else b["datatype"] = t.datatype;
      }
      break;
  }
  return b;
}

Term term_from_json(const json& b) {
  const std::string type = b.at("type").get<std::string>();
  const std::string value = b.at("value").get<std::string>();
  if (type == "uri") return make_uri(value);
  if (type == "bnode") return make_blank(value);
  if (type == "literal" || type == "typed-literal") {
    Term t{TermKind::Literal, value, ""};
    if (b.contains("datatype")) t.datatype = b["datatype"].get<std::string>();
    else if (b.contains("xml:lang"))
      t.datatype = "@" + b["xml:lang"].get<std::string>();
    return t;
  }
  throw std::runtime_error("unknown binding type in results JSON: " + type);
}

}  // namespace

std::string to_csv(const EvalResult& r) {
  if (r.is_ask) return std::string("boolean\n") + (r.ask_value ? "true" : "false") + "\n";
  std::string out;
  for (size_t i = 0; i < r.table.vars.size(); ++i) {
    if (i) out.push_back(',');
    out += csv_cell(r.table.vars[i]);
  }
  out.push_back('\n');
  for (const auto& row : r.table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(',');
      if (row[i]) out += csv_cell(render_term(*row[i]));
    }
    out.push_back('\n');
  }
  return out;
}

std::string to_json(const EvalResult& r) {
  json doc;
  if (r.is_ask) {
    doc["head"] = json::object();
    doc["boolean"] = r.ask_value;
    return doc.dump();
  }
  doc["head"]["vars"] = r.table.vars;
  json bindings = json::array();
  for (const auto& row : r.table.rows) {
    json b = json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i]) b[r.table.vars[i]] = term_to_json(*row[i]);
    }
    bindings.push_back(std::move(b));
  }
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump();
}

EvalResult from_json(const std::string& body) {
  try {
    json doc = json::parse(body);
    EvalResult r;
    if (doc.contains("boolean")) {
      r.is_ask = true;
      r.ask_value = doc["boolean"].get<bool>();
      return r;
    }
    if (!doc.contains("head") || !doc["head"].contains("vars") ||
        !doc.contains("results") || !doc["results"].contains("bindings"))
      throw std::runtime_error("results JSON missing head/results sections");
    r.table.vars = doc["head"]["vars"].get<std::vector<std::string>>();
    for (const json& b : doc["results"]["bindings"]) {
      std::vector<std::optional<Term>> row(r.table.vars.size());
      for (size_t i = 0; i < r.table.vars.size(); ++i) {
        auto it = b.find(r.table.vars[i]);
        if (it != b.end()) row[i] = term_from_json(*it);
      }
      r.table.rows.push_back(std::move(row));
    }
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed results JSON: ") +
                             e.what());
  }
}

std::string result_fingerprint(const EvalResult& r) {
  if (r.is_ask) return r.ask_value ? "ask:true" : "ask:false";
  // Column order must not matter: sort variables, then rows.
  std::vector<size_t> cols(r.table.vars.size());
  std::iota(cols.begin(), cols.end(), size_t{0});
  std::sort(cols.begin(), cols.end(), [&](size_t a, size_t b) {
    return r.table.vars[a] < r.table.vars[b];
  });
  std::vector<std::string> lines;
  lines.reserve(r.table.rows.size());
  for (const auto& row : r.table.rows) {
    std::string line;
    for (size_t c : cols) {
      line += r.table.vars[c];
      line.push_back('=');
      if (row[c]) line += render_term(*row[c]);
      line.push_back('\x1f');
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out.push_back('\n');
  }
  return out;
}

}  // namespace rdfbench::sparql
