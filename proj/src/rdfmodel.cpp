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
#include "rdfbench/rdfmodel.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace rdfbench {

Term make_uri(std::string uri) {
  return Term{TermKind::Uri, std::move(uri), {}};
}
Term make_blank(std::string label) {
  return Term{TermKind::Blank, std::move(label), {}};
}
Term make_string_literal(std::string value) {
  return Term{TermKind::Literal, std::move(value), vocab::kXsdString};
}
Term make_integer_literal(long long value) {
  return Term{TermKind::Literal, std::to_string(value), vocab::kXsdInteger};
}

namespace vocab {

static std::string cat(std::string_view a, std::string_view b) {
  std::string r;
  r.reserve(a.size() + b.size());
  r.append(a).append(b);
  return r;
}

const std::string kXsdString = cat(ns::kXsd, "string");
const std::string kXsdInteger = cat(ns::kXsd, "integer");
const Term kRdfType = make_uri(cat(ns::kRdf, "type"));
const Term kRdfBag = make_uri(cat(ns::kRdf, "Bag"));
const Term kRdfsSubClassOf = make_uri(cat(ns::kRdfs, "subClassOf"));
const Term kRdfsSeeAlso = make_uri(cat(ns::kRdfs, "seeAlso"));
const Term kFoafDocument = make_uri(cat(ns::kFoaf, "Document"));
const Term kFoafPerson = make_uri(cat(ns::kFoaf, "Person"));
const Term kFoafName = make_uri(cat(ns::kFoaf, "name"));
const Term kFoafHomepage = make_uri(cat(ns::kFoaf, "homepage"));
const Term kDcTitle = make_uri(cat(ns::kDc, "title"));
const Term kDcCreator = make_uri(cat(ns::kDc, "creator"));
const Term kDcPublisher = make_uri(cat(ns::kDc, "publisher"));
const Term kDctermsIssued = make_uri(cat(ns::kDcterms, "issued"));
const Term kDctermsReferences = make_uri(cat(ns::kDcterms, "references"));
const Term kDctermsPartOf = make_uri(cat(ns::kDcterms, "partOf"));
const Term kSwrcEditor = make_uri(cat(ns::kSwrc, "editor"));
const Term kSwrcJournal = make_uri(cat(ns::kSwrc, "journal"));
const Term kSwrcPages = make_uri(cat(ns::kSwrc, "pages"));
const Term kSwrcMonth = make_uri(cat(ns::kSwrc, "month"));
const Term kSwrcIsbn = make_uri(cat(ns::kSwrc, "isbn"));
const Term kErdoes = make_uri(cat(ns::kPerson, "Paul_Erdoes"));
const Term kUnknownDocument =
    make_uri("http://localhost/misc/UnknownDocument");

Term bag_member(int n) {
  return make_uri(cat(ns::kRdf, "_" + std::to_string(n)));
}

const Term& class_uri(DocClass c) {
  static const std::array<Term, kNumDocClasses> uris = {
      make_uri(cat(ns::kBench, "Article")),
      make_uri(cat(ns::kBench, "Inproceedings")),
      make_uri(cat(ns::kBench, "Proceedings")),
      make_uri(cat(ns::kBench, "Book")),
      make_uri(cat(ns::kBench, "Incollection")),
      make_uri(cat(ns::kBench, "PhDThesis")),
      make_uri(cat(ns::kBench, "MastersThesis")),
      make_uri(cat(ns::kBench, "Www")),
      make_uri(cat(ns::kBench, "Journal")),
  };
  return uris[static_cast<size_t>(c)];
}

// school maps to dc:publisher just like publisher does; the source mapping
// table prints it that way.
const Term& attribute_property(Attribute a) {
  static const std::array<Term, kNumAttributes> props = {
      make_uri(cat(ns::kSwrc, "address")),   // address
      kDcCreator,                            // author
      make_uri(cat(ns::kBench, "booktitle")),// booktitle
      make_uri(cat(ns::kBench, "cdrom")),    // cdrom
      make_uri(cat(ns::kSwrc, "chapter")),   // chapter
      kDctermsReferences,                    // cite
      kDctermsPartOf,                        // crossref
      kSwrcEditor,                           // editor
      kRdfsSeeAlso,                          // ee
      kSwrcIsbn,                             // isbn
      kSwrcJournal,                          // journal
      kSwrcMonth,                            // month
      make_uri(cat(ns::kBench, "note")),     // note
      make_uri(cat(ns::kSwrc, "number")),    // number
      kSwrcPages,                            // pages
      kDcPublisher,                          // publisher
      kDcPublisher,                          // school
      make_uri(cat(ns::kSwrc, "series")),    // series
      kDcTitle,                              // title
      kFoafHomepage,                         // url
      make_uri(cat(ns::kSwrc, "volume")),    // volume
      kDctermsIssued,                        // year
  };
  return props[static_cast<size_t>(a)];
}

bool attribute_is_integer(Attribute a) {
  switch (a) {
    case Attribute::Chapter:
    case Attribute::Month:
    case Attribute::Number:
    case Attribute::Series:
    case Attribute::Volume:
    case Attribute::Year:
      return true;
    default:
      return false;
  }
}

}  // namespace vocab

Term doc_uri(DocClass c, int year, uint32_t ordinal) {
  std::string u = "http://localhost/publications/";
  switch (c) {
    case DocClass::Article: u += "article"; break;
    case DocClass::Inproceedings: u += "inproc"; break;
    case DocClass::Proceedings: u += "proc"; break;
    case DocClass::Book: u += "book"; break;
    case DocClass::Incollection: u += "incoll"; break;
    case DocClass::PhdThesis: u += "phd"; break;
    case DocClass::MastersThesis: u += "masters"; break;
    case DocClass::Www: u += "www"; break;
    case DocClass::Journal: u += "journal"; break;
  }
  u += "/" + std::to_string(year) + "/" + std::to_string(ordinal);
  return make_uri(std::move(u));
}

std::vector<Triple> schema_triples() {
  std::vector<Triple> out;
  out.reserve(kNumDocClasses);
  for (int i = 0; i < kNumDocClasses; ++i)
    out.push_back(Triple{vocab::class_uri(static_cast<DocClass>(i)),
                         vocab::kRdfsSubClassOf, vocab::kFoafDocument});
  return out;
}

static void append_person(std::vector<Triple>& out, const Term& subject,
                          const Term& property, const PersonRef& p) {
  if (p.introduce) {
    out.push_back(Triple{p.node, vocab::kRdfType, vocab::kFoafPerson});
    out.push_back(Triple{p.node, vocab::kFoafName,
                         make_string_literal(p.name)});
  }
  out.push_back(Triple{subject, property, p.node});
}

std::vector<Triple> document_triples(const EmittableDoc& doc) {
  std::vector<Triple> out;
  Term subject = doc_uri(doc.cls, doc.year, doc.ordinal);
  out.push_back(Triple{subject, vocab::kRdfType, vocab::class_uri(doc.cls)});
  for (const auto& [attr, value] : doc.scalars)
    out.push_back(Triple{subject, vocab::attribute_property(attr), value});
  if (doc.abstract_text)
    out.push_back(Triple{subject,
                         make_uri(std::string(ns::kBench) + "abstract"),
                         make_string_literal(*doc.abstract_text)});
  for (const auto& p : doc.creators)
    append_person(out, subject, vocab::kDcCreator, p);
  for (const auto& p : doc.editors)
    append_person(out, subject, vocab::kSwrcEditor, p);
  if (!doc.citations.empty()) {
    Term bag = make_blank(doc.bag_label);
    out.push_back(Triple{subject, vocab::kDctermsReferences, bag});
    out.push_back(Triple{bag, vocab::kRdfType, vocab::kRdfBag});
    for (size_t i = 0; i < doc.citations.size(); ++i)
      out.push_back(Triple{bag, vocab::bag_member(static_cast<int>(i) + 1),
                           doc.citations[i]});
  }
  return out;
}

static void escape_into(std::string& out, const std::string& s) {
  for (char ch : s) {
    switch (ch) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
}

void serialize_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case TermKind::Uri:
      out += '<';
      out += t.lex;
      out += '>';
      break;
    case TermKind::Blank:
      out += "_:";
      out += t.lex;
      break;
    case TermKind::Literal:
      out += '"';
      escape_into(out, t.lex);
      out += '"';
      if (!t.datatype.empty()) {
        if (t.datatype[0] == '@') {
          out += t.datatype;  // language tag, kept verbatim
        } else {
          out += "^^<";
          out += t.datatype;
          out += '>';
        }
      }
      break;
  }
}

std::string serialize(const Triple& t) {
  std::string out;
  out.reserve(128);
  serialize_term(t.s, out);
  out += ' ';
  serialize_term(t.p, out);
  out += ' ';
  serialize_term(t.o, out);
  out += " .";
  return out;
}

void serialize_append(std::string& out, const Triple& t) {
  serialize_term(t.s, out);
  out += ' ';
  serialize_term(t.p, out);
  out += ' ';
  serialize_term(t.o, out);
  out += " .\n";
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("N-Triples parse error at column " +
                             std::to_string(pos + 1) + ": " + what);
  }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  void skip_ws() {
    while (!eof() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
};

std::string parse_iri(Cursor& c) {
  if (c.eof() || c.peek() != '<') c.fail("expected '<'");
  ++c.pos;
  std::string out;
  while (!c.eof() && c.peek() != '>') out += c.s[c.pos++];
  if (c.eof()) c.fail("unterminated IRI");
  ++c.pos;
  return out;
}

std::string parse_blank_label(Cursor& c) {
  c.pos += 2;  // "_:"
  std::string out;
  while (!c.eof()) {
    char ch = c.peek();
    if ((ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
        (ch >= '0' && ch <= '9') || ch == '_') {
      out += ch;
      ++c.pos;
    } else {
      break;
    }
  }
  if (out.empty()) c.fail("empty blank node label");
  return out;
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

uint32_t parse_hex(Cursor& c, int digits) {
  uint32_t v = 0;
  for (int i = 0; i < digits; ++i) {
    if (c.eof()) c.fail("truncated \\u escape");
    char ch = c.s[c.pos++];
    v <<= 4;
    if (ch >= '0' && ch <= '9') v |= static_cast<uint32_t>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') v |= static_cast<uint32_t>(ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'F') v |= static_cast<uint32_t>(ch - 'A' + 10);
    else c.fail("bad hex digit in escape");
  }
  return v;
}

Term parse_literal(Cursor& c) {
  ++c.pos;  // opening quote
  std::string value;
  for (;;) {
    if (c.eof()) c.fail("unterminated literal");
    char ch = c.s[c.pos++];
    if (ch == '"') break;
    if (ch == '\\') {
      if (c.eof()) c.fail("dangling escape");
      char esc = c.s[c.pos++];
      switch (esc) {
        case 't': value += '\t'; break;
        case 'b': value += '\b'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        case 'u': append_utf8(value, parse_hex(c, 4)); break;
        case 'U': append_utf8(value, parse_hex(c, 8)); break;
        default: c.fail("unknown escape sequence");
      }
    } else {
      value += ch;
    }
  }
  Term t{TermKind::Literal, std::move(value), {}};
  if (!c.eof() && c.peek() == '^') {
    if (c.pos + 1 >= c.s.size() || c.s[c.pos + 1] != '^')
      c.fail("expected '^^'");
    c.pos += 2;
    t.datatype = parse_iri(c);
  } else if (!c.eof() && c.peek() == '@') {
    std::string tag = "@";
    ++c.pos;
    while (!c.eof()) {
      char ch = c.peek();
      if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
          (ch >= '0' && ch <= '9') || ch == '-') {
        tag += ch;
        ++c.pos;
      } else {
        break;
      }
    }
    if (tag.size() == 1) c.fail("empty language tag");
    t.datatype = std::move(tag);
  }
  return t;
}

Term parse_term(Cursor& c, bool allow_literal) {
  if (c.eof()) c.fail("unexpected end of line");
  char ch = c.peek();
  if (ch == '<') return make_uri(parse_iri(c));
  if (ch == '_' && c.pos + 1 < c.s.size() && c.s[c.pos + 1] == ':')
    return make_blank(parse_blank_label(c));
  if (ch == '"' && allow_literal) return parse_literal(c);
  c.fail("unexpected character");
}

}  // namespace

bool parse_ntriples_line(std::string_view line, Triple& out) {
  Cursor c{line};
  c.skip_ws();
  if (c.eof() || c.peek() == '#') return false;
  out.s = parse_term(c, false);
  c.skip_ws();
  if (c.eof() || c.peek() != '<') c.fail("predicate must be an IRI");
  out.p = make_uri(parse_iri(c));
  c.skip_ws();
  out.o = parse_term(c, true);
  c.skip_ws();
  if (c.eof() || c.peek() != '.') c.fail("expected terminating '.'");
  ++c.pos;
  c.skip_ws();
  if (!c.eof() && c.peek() != '#') c.fail("trailing content after '.'");
  return true;
}

}  // namespace rdfbench
