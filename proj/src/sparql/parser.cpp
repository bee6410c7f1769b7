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
#include "rdfbench/sparql/parser.hpp"

#include <cctype>
#include <unordered_map>
#include <utility>

namespace rdfbench::sparql {
namespace {

enum class Tok : uint8_t {
  LBrace, RBrace, LParen, RParen, Dot,
  Var, Iri, Pname, String, Integer, LangTag, HatHat,
  Eq, Ne, Lt, Gt, Le, Ge, And, Bang,
  Name,  // bare word, keyword-checked by the parser
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;    // var name / IRI / literal body / word / integer
  std::string prefix;  // Pname prefix part
  int line = 1;
  int col = 1;
};

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t = next();
      bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) return out;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("query syntax error at line " + std::to_string(line_) +
                     " col " + std::to_string(col_) + ": " + msg);
  }

  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '#') {
        while (peek() != '\0' && peek() != '\n') take();
      } else {
        return;
      }
    }
  }

  // '<' begins an IRI when a '>' closes it before any whitespace.
  bool lt_starts_iri() const {
    for (size_t i = pos_ + 1; i < src_.size(); ++i) {
      char c = src_[i];
      if (c == '>') return true;
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '?' ||
          c == '"' || c == '=') {
        return false;
      }
    }
    return false;
  }

  Token next() {
    Token t;
    t.line = line_;
    t.col = col_;
    char c = peek();
    if (c == '\0') {
      t.kind = Tok::End;
      return t;
    }
    if (c == '{') { take(); t.kind = Tok::LBrace; return t; }
    if (c == '}') { take(); t.kind = Tok::RBrace; return t; }
    if (c == '(') { take(); t.kind = Tok::LParen; return t; }
    if (c == ')') { take(); t.kind = Tok::RParen; return t; }
    if (c == '.') { take(); t.kind = Tok::Dot; return t; }
    if (c == '=') { take(); t.kind = Tok::Eq; return t; }
    if (c == '&') {
      take();
      if (peek() != '&') fail("expected '&&'");
      take();
      t.kind = Tok::And;
      return t;
    }
    if (c == '!') {
      take();
      if (peek() == '=') {
        take();
        t.kind = Tok::Ne;
      } else {
        t.kind = Tok::Bang;
      }
      return t;
    }
    if (c == '<') {
      if (lt_starts_iri()) {
        take();
        while (peek() != '>' && peek() != '\0') t.text.push_back(take());
        if (peek() != '>') fail("unterminated IRI");
        take();
        t.kind = Tok::Iri;
        return t;
      }
      take();
      if (peek() == '=') {
        take();
        t.kind = Tok::Le;
      } else {
        t.kind = Tok::Lt;
      }
      return t;
    }
    if (c == '>') {
      take();
      if (peek() == '=') {
        take();
        t.kind = Tok::Ge;
      } else {
        t.kind = Tok::Gt;
      }
      return t;
    }
    if (c == '?' || c == '$') {
      take();
      if (!name_char(peek())) fail("expected variable name after '?'");
      while (name_char(peek())) t.text.push_back(take());
      t.kind = Tok::Var;
      return t;
    }
    if (c == '^') {
      take();
      if (peek() != '^') fail("expected '^^'");
      take();
      t.kind = Tok::HatHat;
      return t;
    }
    if (c == '@') {
      take();
      while (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '-')
        t.text.push_back(take());
      if (t.text.empty()) fail("expected language tag after '@'");
      t.kind = Tok::LangTag;
      return t;
    }
    if (c == '"') {
      take();
      for (;;) {
        char d = peek();
        if (d == '\0') fail("unterminated string literal");
        if (d == '"') {
          take();
          break;
        }
        if (d == '\\') {
          take();
          char e = take();
          switch (e) {
            case 't': t.text.push_back('\t'); break;
            case 'n': t.text.push_back('\n'); break;
            case 'r': t.text.push_back('\r'); break;
            case '"': t.text.push_back('"'); break;
            case '\\': t.text.push_back('\\'); break;
            case '\'': t.text.push_back('\''); break;
            default: fail("unsupported string escape");
          }
        } else {
          t.text.push_back(take());
        }
      }
      t.kind = Tok::String;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek())))
        t.text.push_back(take());
      t.kind = Tok::Integer;
      return t;
    }
    if (name_start(c)) {
      while (name_char(peek()) || peek() == '-') t.text.push_back(take());
      if (peek() == ':') {
        take();
        t.prefix = std::move(t.text);
        t.text.clear();
        while (name_char(peek())) t.text.push_back(take());
        t.kind = Tok::Pname;
        return t;
      }
      t.kind = Tok::Name;
      return t;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string upper(std::string_view s) {
  std::string r(s);
  for (char& c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return r;
}

GraphPattern unit_pattern() {
  return GraphPattern{};  // empty BGP: the identity solution
}

bool is_unit(const GraphPattern& g) {
  return g.kind == GraphPattern::Kind::Bgp && g.triples.empty();
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  QueryAst parse() {
    parse_prologue();
    const Token& t = peek();
    std::string kw = t.kind == Tok::Name ? upper(t.text) : "";
    if (kw == "SELECT") {
      take();
      parse_select_header();
    } else if (kw == "ASK") {
      take();
      ast_.form = QueryAst::Form::Ask;
    } else if (kw == "CONSTRUCT" || kw == "DESCRIBE") {
      fail(t, kw + " queries are not supported");
    } else {
      fail(t, "expected SELECT or ASK");
    }
    if (peek_keyword("WHERE")) take();
    GroupResult g = parse_group();
    ast_.pattern = wrap_filters(std::move(g));
    if (ast_.form == QueryAst::Form::Select) parse_modifiers();
    if (peek().kind != Tok::End) fail(peek(), "trailing content after query");
    return std::move(ast_);
  }

 private:
  struct GroupResult {
    GraphPattern pat;
    std::vector<Expr> filters;
  };

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError("query syntax error at line " + std::to_string(t.line) +
                     " col " + std::to_string(t.col) + ": " + msg);
  }

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool peek_keyword(const char* kw, size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Name && upper(t.text) == kw;
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(peek(), std::string("expected ") + what);
    take();
  }

  void parse_prologue() {
    while (peek_keyword("PREFIX")) {
      take();
      const Token& name = peek();
      if (name.kind != Tok::Pname || !name.text.empty())
        fail(name, "expected prefix name ending in ':'");
      std::string pfx = name.prefix;
      take();
      const Token& iri = peek();
      if (iri.kind != Tok::Iri) fail(iri, "expected IRI after prefix name");
      prefixes_[pfx] = iri.text;
      take();
    }
  }

  void parse_select_header() {
    if (peek_keyword("DISTINCT")) {
      take();
      ast_.distinct = true;
    }
    if (peek().kind != Tok::Var) fail(peek(), "expected projection variables");
    while (peek().kind == Tok::Var) {
      ast_.projection.push_back(var_id(take().text));
    }
  }

  VarId var_id(const std::string& name) {
    auto it = var_ids_.find(name);
    if (it != var_ids_.end()) return it->second;
    VarId id = static_cast<VarId>(ast_.var_names.size());
    ast_.var_names.push_back(name);
    var_ids_.emplace(name, id);
    return id;
  }

  Term resolve_pname(const Token& t) {
    auto it = prefixes_.find(t.prefix);
    if (it == prefixes_.end())
      fail(t, "undeclared prefix '" + t.prefix + ":'");
    return make_uri(it->second + t.text);
  }

  // Variable or RDF term usable in triple patterns and expressions.
  PatternTerm parse_term(bool allow_literal) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var:
        take();
        return PatternTerm::variable(var_id(t.text));
      case Tok::Iri:
        take();
        return PatternTerm::constant(make_uri(t.text));
      case Tok::Pname: {
        Term u = resolve_pname(t);
        take();
        return PatternTerm::constant(std::move(u));
      }
      case Tok::Integer: {
        take();
        return PatternTerm::constant(Term{TermKind::Literal, t.text,
                                          std::string(vocab::kXsdInteger)});
      }
      case Tok::String: {
        if (!allow_literal) fail(t, "literal not allowed here");
        std::string body = t.text;
        take();
        if (peek().kind == Tok::HatHat) {
          take();
          const Token& dt = peek();
          std::string dtype;
          if (dt.kind == Tok::Iri) {
            dtype = dt.text;
          } else if (dt.kind == Tok::Pname) {
            dtype = resolve_pname(dt).lex;
          } else {
            fail(dt, "expected datatype after '^^'");
          }
          take();
          return PatternTerm::constant(
              Term{TermKind::Literal, std::move(body), std::move(dtype)});
        }
        if (peek().kind == Tok::LangTag) {
          std::string lang = "@" + peek().text;
          take();
          return PatternTerm::constant(
              Term{TermKind::Literal, std::move(body), std::move(lang)});
        }
        return PatternTerm::constant(
            Term{TermKind::Literal, std::move(body), ""});
      }
      default:
        fail(t, "expected variable or RDF term");
    }
  }

  TriplePattern parse_triple() {
    TriplePattern tp;
    tp.s = parse_term(false);
    tp.p = parse_term(false);
    tp.o = parse_term(true);
    return tp;
  }

  Expr parse_operand_or_bound() {
    const Token& t = peek();
    if (t.kind == Tok::Name) {
      std::string kw = upper(t.text);
      if (kw == "BOUND") {
        take();
        expect(Tok::LParen, "'(' after bound");
        const Token& v = peek();
        if (v.kind != Tok::Var) fail(v, "expected variable in bound()");
        Expr e;
        e.kind = Expr::Kind::Bound;
        e.bound_var = var_id(v.text);
        take();
        expect(Tok::RParen, "')' after bound()");
        return e;
      }
      fail(t, "unsupported function '" + t.text + "'");
    }
    PatternTerm lhs = parse_term(true);
    Expr::CmpOp op;
    switch (peek().kind) {
      case Tok::Eq: op = Expr::CmpOp::Eq; break;
      case Tok::Ne: op = Expr::CmpOp::Ne; break;
      case Tok::Lt: op = Expr::CmpOp::Lt; break;
      case Tok::Gt: op = Expr::CmpOp::Gt; break;
      case Tok::Le: op = Expr::CmpOp::Le; break;
      case Tok::Ge: op = Expr::CmpOp::Ge; break;
      default: fail(peek(), "expected comparison operator");
    }
    take();
    PatternTerm rhs = parse_term(true);
    Expr e;
    e.kind = Expr::Kind::Compare;
    e.op = op;
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    return e;
  }

  Expr parse_unary_expr() {
    const Token& t = peek();
    if (t.kind == Tok::Bang) {
      take();
      Expr e;
      e.kind = Expr::Kind::Not;
      e.children.push_back(parse_unary_expr());
      return e;
    }
    if (t.kind == Tok::LParen) {
      take();
      Expr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    return parse_operand_or_bound();
  }

  Expr parse_expr() {
    Expr first = parse_unary_expr();
    if (peek().kind != Tok::And) return first;
    Expr e;
    e.kind = Expr::Kind::And;
    e.children.push_back(std::move(first));
    while (peek().kind == Tok::And) {
      take();
      e.children.push_back(parse_unary_expr());
    }
    return e;
  }

  Expr parse_filter() {
    expect(Tok::LParen, "'(' after FILTER");
    Expr e = parse_expr();
    expect(Tok::RParen, "')' closing FILTER");
    return e;
  }

  static GraphPattern join(GraphPattern a, GraphPattern b) {
    if (is_unit(a)) return b;
    if (is_unit(b)) return a;
    // Adjacent basic patterns merge; filters were already scoped.
    if (a.kind == GraphPattern::Kind::Bgp &&
        b.kind == GraphPattern::Kind::Bgp) {
      for (auto& t : b.triples) a.triples.push_back(std::move(t));
      return a;
    }
    GraphPattern j;
    j.kind = GraphPattern::Kind::Join;
    j.children.push_back(std::move(a));
    j.children.push_back(std::move(b));
    return j;
  }

  static Expr and_all(std::vector<Expr> exprs) {
    if (exprs.empty()) {
      Expr t;
      t.kind = Expr::Kind::True;
      return t;
    }
    if (exprs.size() == 1) return std::move(exprs[0]);
    Expr e;
    e.kind = Expr::Kind::And;
    e.children = std::move(exprs);
    return e;
  }

  static GraphPattern wrap_filters(GroupResult g) {
    if (g.filters.empty()) return std::move(g.pat);
    GraphPattern f;
    f.kind = GraphPattern::Kind::Filter;
    f.expr = and_all(std::move(g.filters));
    f.children.push_back(std::move(g.pat));
    return f;
  }

  GroupResult parse_group() {
    expect(Tok::LBrace, "'{'");
    GroupResult out;
    out.pat = unit_pattern();
    std::vector<TriplePattern> bgp;
    auto flush = [&] {
      if (bgp.empty()) return;
      GraphPattern g;
      g.kind = GraphPattern::Kind::Bgp;
      g.triples = std::move(bgp);
      bgp.clear();
      out.pat = join(std::move(out.pat), std::move(g));
    };
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::RBrace) {
        take();
        break;
      }
      if (t.kind == Tok::End) fail(t, "unterminated group: expected '}'");
      if (t.kind == Tok::Dot) {
        take();
        continue;
      }
      if (peek_keyword("OPTIONAL")) {
        take();
        flush();
        GroupResult inner = parse_group();
        GraphPattern opt;
        opt.kind = GraphPattern::Kind::Optional;
        opt.expr = and_all(std::move(inner.filters));
        opt.children.push_back(std::move(out.pat));
        opt.children.push_back(std::move(inner.pat));
        out.pat = std::move(opt);
        continue;
      }
      if (peek_keyword("FILTER")) {
        take();
        out.filters.push_back(parse_filter());
        continue;
      }
      if (t.kind == Tok::LBrace) {
        flush();
        GraphPattern branch = wrap_filters(parse_group());
        while (peek_keyword("UNION")) {
          take();
          GraphPattern next = wrap_filters(parse_group());
          GraphPattern u;
          u.kind = GraphPattern::Kind::Union;
          u.children.push_back(std::move(branch));
          u.children.push_back(std::move(next));
          branch = std::move(u);
        }
        out.pat = join(std::move(out.pat), std::move(branch));
        continue;
      }
      if (t.kind == Tok::Name && upper(t.text) != "BOUND") {
        std::string kw = upper(t.text);
        if (kw == "GRAPH" || kw == "SERVICE" || kw == "MINUS" ||
            kw == "EXISTS" || kw == "BIND" || kw == "VALUES") {
          fail(t, kw + " is not supported");
        }
      }
      bgp.push_back(parse_triple());
    }
    flush();
    return out;
  }

  void parse_modifiers() {
    if (peek_keyword("ORDER")) {
      take();
      if (!peek_keyword("BY")) fail(peek(), "expected BY after ORDER");
      take();
      if (peek().kind != Tok::Var) {
        if (peek_keyword("ASC") || peek_keyword("DESC"))
          fail(peek(), "ASC/DESC sort directions are not supported");
        fail(peek(), "expected sort variables after ORDER BY");
      }
      while (peek().kind == Tok::Var) ast_.order_by.push_back(var_id(take().text));
    }
    for (int i = 0; i < 2; ++i) {
      if (peek_keyword("LIMIT")) {
        take();
        if (ast_.limit) fail(peek(), "duplicate LIMIT");
        if (peek().kind != Tok::Integer) fail(peek(), "expected LIMIT count");
        ast_.limit = std::stoull(take().text);
      } else if (peek_keyword("OFFSET")) {
        take();
        if (ast_.offset) fail(peek(), "duplicate OFFSET");
        if (peek().kind != Tok::Integer) fail(peek(), "expected OFFSET count");
        ast_.offset = std::stoull(take().text);
      }
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::unordered_map<std::string, std::string> prefixes_;
  std::unordered_map<std::string, VarId> var_ids_;
  QueryAst ast_;
};

}  // namespace

QueryAst parse_query(std::string_view text) { return Parser(text).parse(); }

}  // namespace rdfbench::sparql
