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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rdfbench/distributions.hpp"

namespace rdfbench {

enum class TermKind : uint8_t { Uri, Blank, Literal };

/// One RDF node. For literals, `datatype` holds the datatype URI (empty for
/// plain literals; a leading '@' marks a language tag instead).
struct Term {
  TermKind kind = TermKind::Uri;
  std::string lex;
  std::string datatype;

  bool operator==(const Term&) const = default;
};

struct Triple {
  Term s, p, o;
  bool operator==(const Triple&) const = default;
};

Term make_uri(std::string uri);
Term make_blank(std::string label);
Term make_string_literal(std::string value);
Term make_integer_literal(long long value);

namespace ns {
inline constexpr std::string_view kRdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view kFoaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view kSwrc = "http://swrc.ontoware.org/ontology#";
inline constexpr std::string_view kBench = "http://localhost/vocabulary/bench/";
inline constexpr std::string_view kPerson = "http://localhost/persons/";
}  // namespace ns

namespace vocab {
extern const std::string kXsdString;
extern const std::string kXsdInteger;
extern const Term kRdfType;
extern const Term kRdfBag;
extern const Term kRdfsSubClassOf;
extern const Term kRdfsSeeAlso;
extern const Term kFoafDocument;
extern const Term kFoafPerson;
extern const Term kFoafName;
extern const Term kFoafHomepage;
extern const Term kDcTitle;
extern const Term kDcCreator;
extern const Term kDcPublisher;
extern const Term kDctermsIssued;
extern const Term kDctermsReferences;
extern const Term kDctermsPartOf;
extern const Term kSwrcEditor;
extern const Term kSwrcJournal;
extern const Term kSwrcPages;
extern const Term kSwrcMonth;
extern const Term kSwrcIsbn;
extern const Term kErdoes;           // person:Paul_Erdoes (fixed URI)
extern const Term kUnknownDocument;  // target of untargeted citations

/// rdf:_n container membership property.
Term bag_member(int n);
/// bench: class URI for a document class.
const Term& class_uri(DocClass c);
/// Property URI an attribute maps to.
const Term& attribute_property(Attribute a);
/// True when the attribute's range is xsd:integer (else string or a node).
bool attribute_is_integer(Attribute a);
}  // namespace vocab

/// Document URI: http://localhost/publications/<class>/<year>/<ordinal>.
Term doc_uri(DocClass c, int year, uint32_t ordinal);

/// The 9 rdfs:subClassOf foaf:Document triples, emitted before any instance.
std::vector<Triple> schema_triples();

/// Person reference inside a document; `introduce` asks for the rdf:type /
/// foaf:name triples to be emitted with this document (first reference).
struct PersonRef {
  Term node;         // blank node, or the fixed URI
  std::string name;  // foaf:name literal value
  bool introduce = false;
};

/// A fully resolved document, ready to be turned into triples. Values are
/// final terms (literals or URIs); no randomness happens past this point.
struct EmittableDoc {
  DocClass cls = DocClass::Article;
  int year = 0;
  uint32_t ordinal = 0;
  std::vector<std::pair<Attribute, Term>> scalars;  // in emission order
  std::vector<PersonRef> creators;
  std::vector<PersonRef> editors;
  std::vector<Term> citations;  // rdf:_1.. targets; empty = no references bag
  std::string bag_label;        // blank label for the bag when citations exist
  std::optional<std::string> abstract_text;
};

/// Triples for one document: type triple, scalar attributes, creators and
/// editors (with person introductions), the citations bag, the abstract.
std::vector<Triple> document_triples(const EmittableDoc& doc);

/// Canonical N-Triples line (no trailing newline): `<s> <p> <o> .` with
/// \n, \t, \r, \", \\ escaped and other bytes passed through as UTF-8.
std::string serialize(const Triple& t);
void serialize_append(std::string& out, const Triple& t);  // adds newline
void serialize_term(const Term& t, std::string& out);

/// Parses one N-Triples line. Returns false for blank/comment lines; throws
/// std::runtime_error with a descriptive message on malformed input.
bool parse_ntriples_line(std::string_view line, Triple& out);

}  // namespace rdfbench
