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
#include "rdfbench/queries.hpp"

#include <cctype>
#include <stdexcept>

namespace rdfbench::queries {
namespace {

constexpr const char* kPreamble =
    "PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n"
    "PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n"
    "PREFIX xsd: <http://www.w3.org/2001/XMLSchema#>\n"
    "PREFIX dc: <http://purl.org/dc/elements/1.1/>\n"
    "PREFIX dcterms: <http://purl.org/dc/terms/>\n"
    "PREFIX foaf: <http://xmlns.com/foaf/0.1/>\n"
    "PREFIX swrc: <http://swrc.ontoware.org/ontology#>\n"
    "PREFIX bench: <http://localhost/vocabulary/bench/>\n"
    "PREFIX person: <http://localhost/persons/>\n";

constexpr const char* kQ1 =
    "SELECT ?yr\n"
    "WHERE {\n"
    " ?journal rdf:type bench:Journal.\n"
    " ?journal dc:title \"Journal 1 (1940)\"^^xsd:string.\n"
    " ?journal dcterms:issued ?yr }\n";

constexpr const char* kQ2 =
    "SELECT ?inproc ?author ?booktitle ?title\n"
    "       ?proc ?ee ?page ?url ?yr ?abstract\n"
    "WHERE {\n"
    "  ?inproc rdf:type bench:Inproceedings.\n"
    "  ?inproc dc:creator ?author.\n"
    "  ?inproc bench:booktitle ?booktitle.\n"
    "  ?inproc dc:title ?title.\n"
    "  ?inproc dcterms:partOf ?proc.\n"
    "  ?inproc rdfs:seeAlso ?ee.\n"
    "  ?inproc swrc:pages ?page.\n"
    "  ?inproc foaf:homepage ?url.\n"
    "  ?inproc dcterms:issued ?yr\n"
    "  OPTIONAL { ?inproc bench:abstract ?abstract }\n"
    "} ORDER BY ?yr\n";

// Q3a/b/c differ only in the predicate the filter selects.
std::string q3_with(const char* predicate) {
  std::string t =
      "SELECT ?article\n"
      "WHERE { ?article rdf:type bench:Article.\n"
      "        ?article ?property ?value\n"
      "        FILTER (?property=";
  t += predicate;
  t += ") }\n";
  return t;
}

constexpr const char* kQ4 =
    "SELECT DISTINCT ?name1 ?name2\n"
    "WHERE { ?article1 rdf:type bench:Article.\n"
    "        ?article2 rdf:type bench:Article.\n"
    "        ?article1 dc:creator ?author1.\n"
    "        ?author1 foaf:name ?name1.\n"
    "        ?article2 dc:creator ?author2.\n"
    "        ?author2 foaf:name ?name2.\n"
    "        ?article1 swrc:journal ?journal.\n"
    "        ?article2 swrc:journal ?journal\n"
    "        FILTER (?name1<?name2) }\n";

constexpr const char* kQ5a =
    "SELECT DISTINCT ?person ?name\n"
    "WHERE { ?article rdf:type bench:Article.\n"
    "        ?article dc:creator ?person.\n"
    "        ?inproc rdf:type bench:Inproceedings.\n"
    "        ?inproc dc:creator ?person2.\n"
    "        ?person foaf:name ?name.\n"
    "        ?person2 foaf:name ?name2\n"
    "        FILTER(?name=?name2) }\n";

constexpr const char* kQ5b =
    "SELECT DISTINCT ?person ?name\n"
    "WHERE { ?article rdf:type bench:Article.\n"
    "        ?article dc:creator ?person.\n"
    "        ?inproc rdf:type bench:Inproceedings.\n"
    "        ?inproc dc:creator ?person.\n"
    "        ?person foaf:name ?name }\n";

constexpr const char* kQ6 =
    "SELECT ?yr ?name ?doc\n"
    "WHERE {\n"
    "  ?class rdfs:subClassOf foaf:Document.\n"
    "  ?doc rdf:type ?class.\n"
    "  ?doc dcterms:issued ?yr.\n"
    "  ?doc dc:creator ?author.\n"
    "  ?author foaf:name ?name\n"
    "  OPTIONAL {\n"
    "    ?class2 rdfs:subClassOf foaf:Document.\n"
    "    ?doc2 rdf:type ?class2.\n"
    "    ?doc2 dcterms:issued ?yr2.\n"
    "    ?doc2 dc:creator ?author2\n"
    "    FILTER (?author=?author2 && ?yr2<?yr) }\n"
    "  FILTER (!bound(?author2)) }\n";

constexpr const char* kQ7 =
    "SELECT DISTINCT ?title\n"
    "WHERE {\n"
    "  ?class rdfs:subClassOf foaf:Document.\n"
    "  ?doc rdf:type ?class.\n"
    "  ?doc dc:title ?title.\n"
    "  ?bag2 ?member2 ?doc.\n"
    "  ?doc2 dcterms:references ?bag2\n"
    "  OPTIONAL {\n"
    "    ?class3 rdfs:subClassOf foaf:Document.\n"
    "    ?doc3 rdf:type ?class3.\n"
    "    ?doc3 dcterms:references ?bag3.\n"
    "    ?bag3 ?member3 ?doc\n"
    "    OPTIONAL {\n"
    "      ?class4 rdfs:subClassOf foaf:Document.\n"
    "      ?doc4 rdf:type ?class4.\n"
    "      ?doc4 dcterms:references ?bag4.\n"
    "      ?bag4 ?member4 ?doc3 }\n"
    "    FILTER (!bound(?doc4)) }\n"
    "  FILTER (!bound(?doc3)) }\n";

constexpr const char* kQ8 =
    "SELECT DISTINCT ?name\n"
    "WHERE {\n"
    "  ?erdoes rdf:type foaf:Person.\n"
    "  ?erdoes foaf:name \"Paul Erdoes\"^^xsd:string.\n"
    "  { ?doc dc:creator ?erdoes.\n"
    "    ?doc dc:creator ?author.\n"
    "    ?doc2 dc:creator ?author.\n"
    "    ?doc2 dc:creator ?author2.\n"
    "    ?author2 foaf:name ?name\n"
    "    FILTER (?author!=?erdoes &&\n"
    "            ?doc2!=?doc &&\n"
    "            ?author2!=?erdoes &&\n"
    "            ?author2!=?author)\n"
    "  } UNION {\n"
    "    ?doc dc:creator ?erdoes.\n"
    "    ?doc dc:creator ?author.\n"
    "    ?author foaf:name ?name\n"
    "    FILTER (?author!=?erdoes) } }\n";

constexpr const char* kQ9 =
    "SELECT DISTINCT ?predicate\n"
    "WHERE {\n"
    "  { ?person rdf:type foaf:Person.\n"
    "    ?subject ?predicate ?person } UNION\n"
    "  { ?person rdf:type foaf:Person.\n"
    "    ?person ?predicate ?object } }\n";

constexpr const char* kQ10 =
    "SELECT ?subj ?pred\n"
    "WHERE { ?subj ?pred person:Paul_Erdoes }\n";

constexpr const char* kQ11 =
    "SELECT ?ee\n"
    "WHERE { ?publication rdfs:seeAlso ?ee }\n"
    "ORDER BY ?ee LIMIT 10 OFFSET 50\n";

// The predicate here is normalized: the original statement of this query
// circulates with an "rfd:" typo that no SPARQL processor would accept.
constexpr const char* kQ12c =
    "ASK {person:John_Q_Public rdf:type foaf:Person}\n";

/// Rewrites a SELECT query as the ASK form of the same pattern by
/// replacing everything up to and including the WHERE keyword.
std::string ask_form(const std::string& select_text) {
  size_t pos = select_text.find("\nWHERE");
  if (pos == std::string::npos)
    throw std::logic_error("ask_form: no WHERE clause found");
  return "ASK" + select_text.substr(pos + 6);
}

std::vector<BenchmarkQuery> build_catalog() {
  auto full = [](std::string body) { return std::string(kPreamble) + body; };
  std::vector<BenchmarkQuery> out;
  out.push_back({"q1", "Q1", false, full(kQ1)});
  out.push_back({"q2", "Q2", false, full(kQ2)});
  out.push_back({"q3a", "Q3a", false, full(q3_with("swrc:pages"))});
  out.push_back({"q3b", "Q3b", false, full(q3_with("swrc:month"))});
  out.push_back({"q3c", "Q3c", false, full(q3_with("swrc:isbn"))});
  out.push_back({"q4", "Q4", false, full(kQ4)});
  out.push_back({"q5a", "Q5a", false, full(kQ5a)});
  out.push_back({"q5b", "Q5b", false, full(kQ5b)});
  out.push_back({"q6", "Q6", false, full(kQ6)});
  out.push_back({"q7", "Q7", false, full(kQ7)});
  out.push_back({"q8", "Q8", false, full(kQ8)});
  out.push_back({"q9", "Q9", false, full(kQ9)});
  out.push_back({"q10", "Q10", false, full(kQ10)});
  out.push_back({"q11", "Q11", false, full(kQ11)});
  out.push_back({"q12a", "Q12a", true, full(ask_form(kQ5a))});
  out.push_back({"q12b", "Q12b", true, full(ask_form(kQ8))});
  out.push_back({"q12c", "Q12c", true, full(kQ12c)});
  return out;
}

}  // namespace

const std::vector<BenchmarkQuery>& all() {
  static const std::vector<BenchmarkQuery> catalog = build_catalog();
  return catalog;
}

const BenchmarkQuery& by_id(const std::string& id) {
  std::string key;
  for (char c : id)
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const BenchmarkQuery& q : all())
    if (q.id == key) return q;
  throw std::out_of_range("unknown benchmark query id: " + id);
}

std::string prefix_preamble() { return kPreamble; }

}  // namespace rdfbench::queries
