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
#include "rdfbench/sparql/oracle.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "rdfbench/sparql/results.hpp"

namespace rdfbench::sparql {
namespace {

// The oracle keeps its own representations end to end: bindings are maps
// from variable id to Term, and all comparisons are re-derived from the
// semantics rather than shared with the engine.

using OBinding = std::map<VarId, Term>;

enum class OTri { False, True, Error };

bool o_is_int(const Term& t) {
  return t.kind == TermKind::Literal && t.datatype == vocab::kXsdInteger;
}

bool o_is_str(const Term& t) {
  return t.kind == TermKind::Literal &&
         (t.datatype.empty() || t.datatype == vocab::kXsdString);
}

bool o_int_value(const Term& t, long long& v) {
  try {
    size_t used = 0;
    v = std::stoll(t.lex, &used);
    return used == t.lex.size() && !t.lex.empty();
  } catch (...) {
    return false;
  }
}

OTri o_equal(const Term& a, const Term& b) {
  if (a == b) return OTri::True;
  if (a.kind != b.kind) return OTri::False;
  if (a.kind != TermKind::Literal) return OTri::False;
  if (o_is_int(a) && o_is_int(b)) {
    long long x, y;
    if (!o_int_value(a, x) || !o_int_value(b, y)) return OTri::Error;
    return x == y ? OTri::True : OTri::False;
  }
  if (a.datatype == b.datatype) return OTri::False;
  return OTri::Error;
}

OTri o_compare(Expr::CmpOp op, const Term& a, const Term& b) {
  if (op == Expr::CmpOp::Eq || op == Expr::CmpOp::Ne) {
    OTri eq = o_equal(a, b);
    if (op == Expr::CmpOp::Eq || eq == OTri::Error) return eq;
    return eq == OTri::True ? OTri::False : OTri::True;
  }
  if (a.kind != TermKind::Literal || b.kind != TermKind::Literal)
    return OTri::Error;
  bool lt, eq;
  if (o_is_int(a) && o_is_int(b)) {
    long long x, y;
    if (!o_int_value(a, x) || !o_int_value(b, y)) return OTri::Error;
    lt = x < y;
    eq = x == y;
  } else if (o_is_str(a) && o_is_str(b) && a.datatype == b.datatype) {
    lt = a.lex < b.lex;
    eq = a.lex == b.lex;
  } else {
    return OTri::Error;
  }
  bool r = false;
  switch (op) {
    case Expr::CmpOp::Lt: r = lt; break;
    case Expr::CmpOp::Le: r = lt || eq; break;
    case Expr::CmpOp::Gt: r = !lt && !eq; break;
    case Expr::CmpOp::Ge: r = !lt; break;
    default: break;
  }
  return r ? OTri::True : OTri::False;
}

OTri o_eval_expr(const Expr& e, const OBinding& row) {
  switch (e.kind) {
    case Expr::Kind::True:
      return OTri::True;
    case Expr::Kind::Bound:
      return row.count(e.bound_var) ? OTri::True : OTri::False;
    case Expr::Kind::Not: {
      OTri t = o_eval_expr(e.children[0], row);
      if (t == OTri::Error) return t;
      return t == OTri::True ? OTri::False : OTri::True;
    }
    case Expr::Kind::And: {
      bool error = false;
      for (const Expr& c : e.children) {
        OTri t = o_eval_expr(c, row);
        if (t == OTri::False) return OTri::False;
        if (t == OTri::Error) error = true;
      }
      return error ? OTri::Error : OTri::True;
    }
    case Expr::Kind::Compare: {
      const Term* a = nullptr;
      const Term* b = nullptr;
      if (e.lhs.is_var) {
        auto it = row.find(e.lhs.var);
        if (it == row.end()) return OTri::Error;
        a = &it->second;
      } else {
        a = &e.lhs.term;
      }
      if (e.rhs.is_var) {
        auto it = row.find(e.rhs.var);
        if (it == row.end()) return OTri::Error;
        b = &it->second;
      } else {
        b = &e.rhs.term;
      }
      return o_compare(e.op, *a, *b);
    }
  }
  return OTri::Error;
}

bool o_compatible(const OBinding& a, const OBinding& b) {
  for (const auto& [v, t] : a) {
    auto it = b.find(v);
    if (it != b.end() && !(it->second == t)) return false;
  }
  return true;
}

OBinding o_merge(const OBinding& a, const OBinding& b) {
  OBinding m = a;
  for (const auto& [v, t] : b) m.emplace(v, t);
  return m;
}

// Total order used for ORDER BY, re-derived: unbound < blank < IRI <
// literal; integer literals numerically, everything else bytewise.
int o_term_rank(const Term& t) {
  if (t.kind == TermKind::Blank) return 0;
  if (t.kind == TermKind::Uri) return 1;
  return 2;
}

int o_order_cmp(const Term* a, const Term* b) {
  if (!a || !b) {
    if (!a && !b) return 0;
    return !a ? -1 : 1;
  }
  if (o_term_rank(*a) != o_term_rank(*b))
    return o_term_rank(*a) < o_term_rank(*b) ? -1 : 1;
  if (a->kind != TermKind::Literal)
    return a->lex < b->lex ? -1 : (b->lex < a->lex ? 1 : 0);
  long long x, y;
  if (o_is_int(*a) && o_is_int(*b) && o_int_value(*a, x) && o_int_value(*b, y))
    return x < y ? -1 : (x > y ? 1 : 0);
  if (a->datatype != b->datatype) return a->datatype < b->datatype ? -1 : 1;
  return a->lex < b->lex ? -1 : (b->lex < a->lex ? 1 : 0);
}

class Oracle {
 public:
  Oracle(const QueryAst& q, const std::vector<Triple>& data)
      : q_(q), data_(data) {}

  EvalResult run() {
    std::vector<OBinding> rows = eval(q_.pattern);
    EvalResult r;
    if (q_.form == QueryAst::Form::Ask) {
      r.is_ask = true;
      r.ask_value = !rows.empty();
      return r;
    }

    if (!q_.order_by.empty()) {
      // Insertion sort: stable by construction.
      std::vector<OBinding> sorted;
      for (const OBinding& row : rows) {
        size_t pos = sorted.size();
        while (pos > 0 && order_after(sorted[pos - 1], row)) --pos;
        sorted.insert(sorted.begin() + pos, row);
      }
      rows = std::move(sorted);
    }

    for (VarId v : q_.projection) r.table.vars.push_back(q_.var_names[v]);

    std::vector<std::vector<std::optional<Term>>> projected;
    for (const OBinding& row : rows) {
      std::vector<std::optional<Term>> out;
      for (VarId v : q_.projection) {
        auto it = row.find(v);
        if (it == row.end()) out.emplace_back();
        else out.emplace_back(it->second);
      }
      projected.push_back(std::move(out));
    }

    if (q_.distinct) {
      std::vector<std::vector<std::optional<Term>>> unique;
      for (const auto& row : projected) {
        bool dup = false;
        for (const auto& seen : unique) {
          if (seen == row) {
            dup = true;
            break;
          }
        }
        if (!dup) unique.push_back(row);
      }
      projected = std::move(unique);
    }

    size_t begin = q_.offset.value_or(0);
    if (begin > projected.size()) begin = projected.size();
    size_t end = projected.size();
    if (q_.limit && begin + *q_.limit < end) end = begin + *q_.limit;
    for (size_t i = begin; i < end; ++i)
      r.table.rows.push_back(std::move(projected[i]));
    return r;
  }

 private:
  // strictly greater on the ORDER BY key tuple
  bool order_after(const OBinding& a, const OBinding& b) const {
    for (VarId v : q_.order_by) {
      auto ia = a.find(v);
      auto ib = b.find(v);
      const Term* ta = ia == a.end() ? nullptr : &ia->second;
      const Term* tb = ib == b.end() ? nullptr : &ib->second;
      int c = o_order_cmp(ta, tb);
      if (c != 0) return c > 0;
    }
    return false;
  }

  std::vector<OBinding> eval(const GraphPattern& g) {
    switch (g.kind) {
      case GraphPattern::Kind::Bgp:
        return eval_bgp(g.triples);
      case GraphPattern::Kind::Join: {
        std::vector<OBinding> a = eval(g.children[0]);
        std::vector<OBinding> b = eval(g.children[1]);
        std::vector<OBinding> out;
        for (const OBinding& x : a)
          for (const OBinding& y : b)
            if (o_compatible(x, y)) out.push_back(o_merge(x, y));
        return out;
      }
      case GraphPattern::Kind::Optional: {
        std::vector<OBinding> a = eval(g.children[0]);
        std::vector<OBinding> b = eval(g.children[1]);
        std::vector<OBinding> out;
        for (const OBinding& x : a) {
          bool matched = false;
          for (const OBinding& y : b) {
            if (!o_compatible(x, y)) continue;
            OBinding m = o_merge(x, y);
            if (o_eval_expr(g.expr, m) == OTri::True) {
              matched = true;
              out.push_back(std::move(m));
            }
          }
          if (!matched) out.push_back(x);
        }
        return out;
      }
      case GraphPattern::Kind::Union: {
        std::vector<OBinding> a = eval(g.children[0]);
        std::vector<OBinding> b = eval(g.children[1]);
        for (OBinding& y : b) a.push_back(std::move(y));
        return a;
      }
      case GraphPattern::Kind::Filter: {
        std::vector<OBinding> a = eval(g.children[0]);
        std::vector<OBinding> out;
        for (OBinding& x : a)
          if (o_eval_expr(g.expr, x) == OTri::True) out.push_back(std::move(x));
        return out;
      }
    }
    throw std::runtime_error("unreachable pattern kind");
  }

  // Definitional basic-graph-pattern semantics: match patterns in written
  // order against every data triple, keeping assignments that unify. No
  // indices, no reordering; a hard work bound guards against blowup.
  std::vector<OBinding> eval_bgp(const std::vector<TriplePattern>& pats) {
    double worst = 1.0;
    for (size_t i = 0; i < pats.size(); ++i) worst *= double(data_.size());
    if (worst > 2e8)
      throw std::runtime_error("oracle input too large for exhaustive search");

    std::vector<OBinding> out;
    OBinding row;
    match_from(pats, 0, row, out);
    return out;
  }

  static bool unify(const PatternTerm& p, const Term& t, OBinding& b) {
    if (!p.is_var) return p.term == t;
    auto it = b.find(p.var);
    if (it != b.end()) return it->second == t;
    b.emplace(p.var, t);
    return true;
  }

  void match_from(const std::vector<TriplePattern>& pats, size_t i,
                  OBinding& row, std::vector<OBinding>& out) const {
    if (i == pats.size()) {
      out.push_back(row);
      return;
    }
    const TriplePattern& p = pats[i];
    for (const Triple& t : data_) {
      OBinding saved = row;
      if (unify(p.s, t.s, row) && unify(p.p, t.p, row) && unify(p.o, t.o, row))
        match_from(pats, i + 1, row, out);
      row = std::move(saved);
    }
  }

  const QueryAst& q_;
  const std::vector<Triple>& data_;
};

}  // namespace

EvalResult brute_force_evaluate(const QueryAst& q,
                                const std::vector<Triple>& data) {
  // A graph is a set of triples; repeated input lines must not create
  // extra solutions.
  std::set<std::string> seen;
  std::vector<Triple> graph;
  graph.reserve(data.size());
  for (const Triple& t : data)
    if (seen.insert(serialize(t)).second) graph.push_back(t);
  return Oracle(q, graph).run();
}

EvalResult brute_force_evaluate(const QueryAst& q, const TripleStore& store) {
  std::vector<Triple> data;
  data.reserve(store.size());
  for (TripleIds t : store.match(IdPattern{})) {
    data.push_back(
        Triple{store.term(t.s), store.term(t.p), store.term(t.o)});
  }
  return brute_force_evaluate(q, data);
}

bool same_solutions(const EvalResult& a, const EvalResult& b, bool ordered) {
  if (a.is_ask != b.is_ask) return false;
  if (a.is_ask) return a.ask_value == b.ask_value;
  if (ordered) {
    return a.table.vars == b.table.vars && a.table.rows == b.table.rows;
  }
  return result_fingerprint(a) == result_fingerprint(b);
}

}  // namespace rdfbench::sparql
