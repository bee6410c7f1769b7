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
#include "rdfbench/sparql/eval.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "rdfbench/rng.hpp"

namespace rdfbench::sparql {
namespace {

constexpr size_t kNoCap = std::numeric_limits<size_t>::max();

// ---------------------------------------------------------------- rows --

/// Flat solution table of TermId cells (kNoTermId = unbound); charges its
/// backing capacity against the cancellation token's memory budget.
class Rows {
 public:
  Rows(size_t width, CancelToken* tok) : width_(width), tok_(tok) {}
  Rows(Rows&& o) noexcept
      : width_(o.width_), tok_(o.tok_), count_(o.count_),
        data_(std::move(o.data_)) {
    o.tok_ = nullptr;
    o.count_ = 0;
    o.data_.clear();
  }
  Rows& operator=(Rows&& o) noexcept {
    if (this != &o) {
      release();
      width_ = o.width_;
      tok_ = o.tok_;
      count_ = o.count_;
      data_ = std::move(o.data_);
      o.tok_ = nullptr;
      o.count_ = 0;
      o.data_.clear();
    }
    return *this;
  }
  Rows(const Rows&) = delete;
  Rows& operator=(const Rows&) = delete;
  ~Rows() { release(); }

  size_t width() const { return width_; }
  size_t size() const { return count_; }
  const TermId* row(size_t i) const { return data_.data() + i * width_; }

  void push(const TermId* row) {
    size_t before = data_.capacity();
    data_.insert(data_.end(), row, row + width_);
    ++count_;
    if (tok_) {
      size_t after = data_.capacity();
      if (after != before) tok_->charge((after - before) * sizeof(TermId));
      tok_->poll();
    }
  }

 private:
  void release() {
    if (tok_) tok_->release(data_.capacity() * sizeof(TermId));
    tok_ = nullptr;
  }

  size_t width_;
  CancelToken* tok_;
  size_t count_ = 0;
  std::vector<TermId> data_;
};

// ------------------------------------------------------ variable masks --

uint64_t bit(VarId v) { return uint64_t{1} << v; }

struct NodeInfo {
  uint64_t certain = 0;   // bound in every solution
  uint64_t possible = 0;  // bound in some solution
};

void collect_pattern_vars(const TriplePattern& t, uint64_t& mask) {
  for (const PatternTerm* pt : {&t.s, &t.p, &t.o})
    if (pt->is_var) mask |= bit(pt->var);
}

uint64_t expr_vars(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::True:
      return 0;
    case Expr::Kind::Bound:
      return bit(e.bound_var);
    case Expr::Kind::Compare: {
      uint64_t m = 0;
      if (e.lhs.is_var) m |= bit(e.lhs.var);
      if (e.rhs.is_var) m |= bit(e.rhs.var);
      return m;
    }
    default: {
      uint64_t m = 0;
      for (const Expr& c : e.children) m |= expr_vars(c);
      return m;
    }
  }
}

bool expr_has_bound(const Expr& e) {
  if (e.kind == Expr::Kind::Bound) return true;
  for (const Expr& c : e.children)
    if (expr_has_bound(c)) return true;
  return false;
}

NodeInfo analyze(const GraphPattern& g) {
  switch (g.kind) {
    case GraphPattern::Kind::Bgp: {
      uint64_t m = 0;
      for (const TriplePattern& t : g.triples) collect_pattern_vars(t, m);
      return {m, m};
    }
    case GraphPattern::Kind::Join: {
      NodeInfo a = analyze(g.children[0]), b = analyze(g.children[1]);
      return {a.certain | b.certain, a.possible | b.possible};
    }
    case GraphPattern::Kind::Optional: {
      NodeInfo a = analyze(g.children[0]), b = analyze(g.children[1]);
      return {a.certain, a.possible | b.possible};
    }
    case GraphPattern::Kind::Union: {
      NodeInfo a = analyze(g.children[0]), b = analyze(g.children[1]);
      return {a.certain & b.certain, a.possible | b.possible};
    }
    case GraphPattern::Kind::Filter:
      return analyze(g.children[0]);
  }
  return {};
}

// ------------------------------------------------------- expressions ----

enum class Tri : uint8_t { False, True, Err };

Tri tri_not(Tri t) {
  if (t == Tri::Err) return Tri::Err;
  return t == Tri::True ? Tri::False : Tri::True;
}

bool parse_int(const std::string& lex, long long& out) {
  if (lex.empty()) return false;
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(lex.c_str(), &end, 10);
  if (errno != 0 || end != lex.c_str() + lex.size()) return false;
  out = v;
  return true;
}

bool is_integer_type(const Term& t) {
  return t.kind == TermKind::Literal && t.datatype == vocab::kXsdInteger;
}

bool is_string_type(const Term& t) {
  return t.kind == TermKind::Literal &&
         (t.datatype.empty() || t.datatype == vocab::kXsdString);
}

/// Three-valued comparison over RDF terms: integer literals compare
/// numerically, string literals bytewise; mixing unrelated datatypes or
/// ordering non-literals is an error.
Tri compare_terms(Expr::CmpOp op, const Term& a, const Term& b) {
  const bool equality = op == Expr::CmpOp::Eq || op == Expr::CmpOp::Ne;
  if (equality) {
    Tri eq;
    if (a == b) {
      eq = Tri::True;
    } else if (a.kind != b.kind) {
      eq = Tri::False;
    } else if (a.kind != TermKind::Literal) {
      eq = Tri::False;  // distinct IRIs / blank labels
    } else if (is_integer_type(a) && is_integer_type(b)) {
      long long x, y;
      eq = (parse_int(a.lex, x) && parse_int(b.lex, y))
               ? (x == y ? Tri::True : Tri::False)
               : Tri::Err;
    } else if (a.datatype == b.datatype) {
      eq = Tri::False;  // same datatype, different lexical form
    } else {
      eq = Tri::Err;  // incomparable datatypes
    }
    return op == Expr::CmpOp::Eq ? eq : tri_not(eq);
  }

  if (a.kind != TermKind::Literal || b.kind != TermKind::Literal)
    return Tri::Err;
  int cmp;
  if (is_integer_type(a) && is_integer_type(b)) {
    long long x, y;
    if (!parse_int(a.lex, x) || !parse_int(b.lex, y)) return Tri::Err;
    cmp = x < y ? -1 : (x > y ? 1 : 0);
  } else if (is_string_type(a) && is_string_type(b) &&
             a.datatype == b.datatype) {
    int c = a.lex.compare(b.lex);
    cmp = c < 0 ? -1 : (c > 0 ? 1 : 0);
  } else {
    return Tri::Err;
  }
  bool r;
  switch (op) {
    case Expr::CmpOp::Lt: r = cmp < 0; break;
    case Expr::CmpOp::Gt: r = cmp > 0; break;
    case Expr::CmpOp::Le: r = cmp <= 0; break;
    case Expr::CmpOp::Ge: r = cmp >= 0; break;
    default: r = false; break;
  }
  return r ? Tri::True : Tri::False;
}

Tri eval_expr(const Expr& e, const TermId* binding, const TripleStore& store) {
  switch (e.kind) {
    case Expr::Kind::True:
      return Tri::True;
    case Expr::Kind::Bound:
      return binding[e.bound_var] != kNoTermId ? Tri::True : Tri::False;
    case Expr::Kind::Not:
      return tri_not(eval_expr(e.children[0], binding, store));
    case Expr::Kind::And: {
      bool err = false;
      for (const Expr& c : e.children) {
        Tri t = eval_expr(c, binding, store);
        if (t == Tri::False) return Tri::False;
        if (t == Tri::Err) err = true;
      }
      return err ? Tri::Err : Tri::True;
    }
    case Expr::Kind::Compare: {
      const Term* a;
      const Term* b;
      if (e.lhs.is_var) {
        TermId id = binding[e.lhs.var];
        if (id == kNoTermId) return Tri::Err;
        a = &store.term(id);
      } else {
        a = &e.lhs.term;
      }
      if (e.rhs.is_var) {
        TermId id = binding[e.rhs.var];
        if (id == kNoTermId) return Tri::Err;
        b = &store.term(id);
      } else {
        b = &e.rhs.term;
      }
      return compare_terms(e.op, *a, *b);
    }
  }
  return Tri::Err;
}

void split_conjuncts(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == Expr::Kind::And) {
    for (const Expr& c : e.children) split_conjuncts(c, out);
  } else if (e.kind != Expr::Kind::True) {
    out.push_back(&e);
  }
}

uint64_t hash_masked(const TermId* row, uint64_t mask, uint64_t seed) {
  uint64_t h = seed;
  while (mask) {
    unsigned v = static_cast<unsigned>(__builtin_ctzll(mask));
    mask &= mask - 1;
    h = mix64(h ^ row[v]);
  }
  return h;
}

// ---------------------------------------------------------- evaluator ---

class Evaluator {
 public:
  Evaluator(const QueryAst& q, const TripleStore& store, CancelToken* tok,
            const EvalOptions& opts)
      : store_(store), tok_(tok), opts_(opts), width_(q.var_count()) {
    if (q.var_count() > 64)
      throw std::runtime_error(
          "queries with more than 64 variables are not supported");
  }

  Rows eval(const GraphPattern& g, size_t cap) {
    switch (g.kind) {
      case GraphPattern::Kind::Bgp:
        return eval_bgp(g.triples, {}, cap);
      case GraphPattern::Kind::Join:
        return eval_join(g, cap);
      case GraphPattern::Kind::Optional:
        return eval_optional(g, cap);
      case GraphPattern::Kind::Union: {
        Rows out = eval(g.children[0], cap);
        if (out.size() >= cap) return out;
        Rows right = eval(g.children[1], cap - out.size());
        for (size_t i = 0; i < right.size(); ++i) out.push(right.row(i));
        return out;
      }
      case GraphPattern::Kind::Filter:
        return eval_filter(g, cap);
    }
    throw std::runtime_error("unreachable pattern kind");
  }

 private:
  struct Step {
    const TriplePattern* pat = nullptr;
    std::optional<TermId> cs, cp, co;  // pre-resolved constant slots
    std::vector<const Expr*> filters;  // evaluable once this step binds
  };

  void poll() {
    if (tok_) tok_->poll();
  }

  Rows eval_filter(const GraphPattern& g, size_t cap) {
    std::vector<const Expr*> conjuncts;
    split_conjuncts(g.expr, conjuncts);
    const bool child_is_bgp = g.children[0].kind == GraphPattern::Kind::Bgp;
    uint64_t child_vars = analyze(g.children[0]).possible;
    std::vector<const Expr*> push, residual;
    for (const Expr* c : conjuncts) {
      // Early evaluation must not change bound()'s view of a solution.
      bool pushable = opts_.push_filters && child_is_bgp &&
                      !expr_has_bound(*c) &&
                      (expr_vars(*c) & ~child_vars) == 0;
      (pushable ? push : residual).push_back(c);
    }
    Rows base = child_is_bgp
                    ? eval_bgp(g.children[0].triples, push,
                               residual.empty() ? cap : kNoCap)
                    : eval(g.children[0], kNoCap);
    if (child_is_bgp && residual.empty()) return base;
    const std::vector<const Expr*>& checks = child_is_bgp ? residual : conjuncts;
    Rows out(width_, tok_);
    for (size_t i = 0; i < base.size() && out.size() < cap; ++i) {
      poll();
      bool pass = true;
      for (const Expr* c : checks) {
        if (eval_expr(*c, base.row(i), store_) != Tri::True) {
          pass = false;
          break;
        }
      }
      if (pass) out.push(base.row(i));
    }
    return out;
  }

  // Greedy join order: cheapest pattern first, then always prefer a
  // pattern sharing a variable with what is already bound.
  std::vector<size_t> plan_order(const std::vector<TriplePattern>& pats) {
    size_t n = pats.size();
    std::vector<size_t> order;
    order.reserve(n);
    if (!opts_.reorder_patterns) {
      for (size_t i = 0; i < n; ++i) order.push_back(i);
      return order;
    }
    std::vector<size_t> counts(n);
    std::vector<uint64_t> vars(n, 0);
    for (size_t i = 0; i < n; ++i) {
      IdPattern ip;
      bool dead = false;
      auto slot = [&](const PatternTerm& pt, std::optional<TermId>& out_id) {
        if (pt.is_var) return;
        auto id = store_.find(pt.term);
        if (!id) dead = true;
        else out_id = *id;
      };
      slot(pats[i].s, ip.s);
      slot(pats[i].p, ip.p);
      slot(pats[i].o, ip.o);
      counts[i] = dead ? 0 : store_.match(ip).size();
      collect_pattern_vars(pats[i], vars[i]);
    }
    std::vector<bool> used(n, false);
    uint64_t bound = 0;
    for (size_t k = 0; k < n; ++k) {
      size_t best = n;
      bool best_conn = false;
      for (size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        bool conn = k > 0 && (vars[i] & bound) != 0;
        if (best == n || (conn && !best_conn) ||
            (conn == best_conn && counts[i] < counts[best])) {
          best = i;
          best_conn = conn;
        }
      }
      used[best] = true;
      bound |= vars[best];
      order.push_back(best);
    }
    return order;
  }

  Rows eval_bgp(const std::vector<TriplePattern>& pats,
                std::vector<const Expr*> filters, size_t cap) {
    Rows out(width_, tok_);
    std::vector<TermId> binding(width_, kNoTermId);
    if (pats.empty()) {
      bool pass = true;
      for (const Expr* f : filters)
        if (eval_expr(*f, binding.data(), store_) != Tri::True) pass = false;
      if (pass && cap > 0) out.push(binding.data());
      return out;
    }

    std::vector<size_t> order = plan_order(pats);
    std::vector<Step> steps;
    steps.reserve(order.size());
    uint64_t bound = 0;
    std::vector<uint64_t> bound_after;
    for (size_t idx : order) {
      Step st;
      st.pat = &pats[idx];
      bool dead = false;
      auto slot = [&](const PatternTerm& pt, std::optional<TermId>& out_id) {
        if (pt.is_var) return;
        auto id = store_.find(pt.term);
        if (!id) dead = true;
        else out_id = *id;
      };
      slot(pats[idx].s, st.cs);
      slot(pats[idx].p, st.cp);
      slot(pats[idx].o, st.co);
      if (dead) return out;  // constant absent from the data: no matches
      uint64_t vs = 0;
      collect_pattern_vars(pats[idx], vs);
      bound |= vs;
      bound_after.push_back(bound);
      steps.push_back(std::move(st));
    }
    for (const Expr* f : filters) {
      uint64_t need = expr_vars(*f);
      bool placed = false;
      for (size_t s = 0; s < steps.size(); ++s) {
        if ((need & ~bound_after[s]) == 0) {
          steps[s].filters.push_back(f);
          placed = true;
          break;
        }
      }
      if (!placed) steps.back().filters.push_back(f);  // stays Err: drops row
    }

    dfs(steps, 0, binding, out, cap);
    return out;
  }

  void dfs(const std::vector<Step>& steps, size_t depth,
           std::vector<TermId>& binding, Rows& out, size_t cap) {
    if (out.size() >= cap) return;
    if (depth == steps.size()) {
      out.push(binding.data());
      return;
    }
    const Step& st = steps[depth];
    const TriplePattern& pat = *st.pat;
    IdPattern ip;
    auto fill = [&](const PatternTerm& pt, const std::optional<TermId>& cid,
                    std::optional<TermId>& slot) {
      if (!pt.is_var) {
        slot = cid;
      } else if (binding[pt.var] != kNoTermId) {
        slot = binding[pt.var];
      }
    };
    fill(pat.s, st.cs, ip.s);
    fill(pat.p, st.cp, ip.p);
    fill(pat.o, st.co, ip.o);

    for (TripleIds t : store_.match(ip)) {
      poll();
      TermId comps[3] = {t.s, t.p, t.o};
      const PatternTerm* slots[3] = {&pat.s, &pat.p, &pat.o};
      VarId fresh[3];
      size_t nfresh = 0;
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) {
        if (!slots[k]->is_var) continue;
        VarId v = slots[k]->var;
        if (binding[v] == kNoTermId) {
          binding[v] = comps[k];
          fresh[nfresh++] = v;
        } else if (binding[v] != comps[k]) {
          ok = false;  // repeated variable mismatch within the pattern
        }
      }
      if (ok) {
        for (const Expr* f : st.filters) {
          if (eval_expr(*f, binding.data(), store_) != Tri::True) {
            ok = false;
            break;
          }
        }
      }
      if (ok) dfs(steps, depth + 1, binding, out, cap);
      for (size_t k = 0; k < nfresh; ++k) binding[fresh[k]] = kNoTermId;
      if (out.size() >= cap) return;
    }
  }

  bool rows_compatible(const TermId* ra, const TermId* rb, uint64_t mask) {
    while (mask) {
      unsigned v = static_cast<unsigned>(__builtin_ctzll(mask));
      mask &= mask - 1;
      if (ra[v] != kNoTermId && rb[v] != kNoTermId && ra[v] != rb[v])
        return false;
    }
    return true;
  }

  Rows eval_join(const GraphPattern& g, size_t cap) {
    Rows a = eval(g.children[0], kNoCap);
    Rows b = eval(g.children[1], kNoCap);
    NodeInfo ia = analyze(g.children[0]);
    NodeInfo ib = analyze(g.children[1]);
    uint64_t shared = ia.possible & ib.possible;
    uint64_t key = ia.certain & ib.certain;

    Rows out(width_, tok_);
    std::vector<TermId> merged(width_, kNoTermId);
    auto merge_push = [&](const TermId* ra, const TermId* rb) {
      for (size_t v = 0; v < width_; ++v)
        merged[v] = ra[v] != kNoTermId ? ra[v] : rb[v];
      out.push(merged.data());
    };

    if (key != 0) {
      const bool build_is_a = a.size() <= b.size();
      const Rows& build = build_is_a ? a : b;
      const Rows& probe = build_is_a ? b : a;
      std::unordered_multimap<uint64_t, size_t> table;
      table.reserve(build.size());
      for (size_t i = 0; i < build.size(); ++i) {
        poll();
        table.emplace(hash_masked(build.row(i), key, 0x9E3779B97F4A7C15ULL), i);
      }
      for (size_t j = 0; j < probe.size() && out.size() < cap; ++j) {
        poll();
        auto [lo, hi] = table.equal_range(
            hash_masked(probe.row(j), key, 0x9E3779B97F4A7C15ULL));
        for (auto it = lo; it != hi && out.size() < cap; ++it) {
          const TermId* rb = build.row(it->second);
          const TermId* rp = probe.row(j);
          if (!rows_compatible(rb, rp, shared)) continue;
          if (build_is_a) merge_push(rb, rp);
          else merge_push(rp, rb);
        }
      }
      return out;
    }

    for (size_t i = 0; i < a.size() && out.size() < cap; ++i) {
      for (size_t j = 0; j < b.size() && out.size() < cap; ++j) {
        poll();
        if (rows_compatible(a.row(i), b.row(j), shared))
          merge_push(a.row(i), b.row(j));
      }
    }
    return out;
  }

  Rows eval_optional(const GraphPattern& g, size_t cap) {
    Rows a = eval(g.children[0], kNoCap);
    Rows b = eval(g.children[1], kNoCap);
    NodeInfo ia = analyze(g.children[0]);
    NodeInfo ib = analyze(g.children[1]);
    uint64_t shared = ia.possible & ib.possible;
    uint64_t key = ia.certain & ib.certain;

    // Equality conjuncts of the condition bridging the two sides act as
    // extra hash-key pairs. TermId equality stands in for value equality,
    // which is exact here because the store keeps integers in canonical
    // lexical form.
    std::vector<std::pair<VarId, VarId>> pairs;  // (left var, right var)
    if (opts_.key_optional) {
      std::vector<const Expr*> conjuncts;
      split_conjuncts(g.expr, conjuncts);
      for (const Expr* c : conjuncts) {
        if (c->kind != Expr::Kind::Compare || c->op != Expr::CmpOp::Eq)
          continue;
        if (!c->lhs.is_var || !c->rhs.is_var) continue;
        VarId x = c->lhs.var, y = c->rhs.var;
        if ((ia.certain & bit(x)) && (ib.certain & bit(y)) &&
            !(ib.possible & bit(x)) && !(ia.possible & bit(y))) {
          pairs.emplace_back(x, y);
        } else if ((ia.certain & bit(y)) && (ib.certain & bit(x)) &&
                   !(ib.possible & bit(y)) && !(ia.possible & bit(x))) {
          pairs.emplace_back(y, x);
        }
      }
    }

    Rows out(width_, tok_);
    std::vector<TermId> merged(width_, kNoTermId);
    auto try_match = [&](const TermId* ra, const TermId* rb, bool& any) {
      if (!rows_compatible(ra, rb, shared)) return;
      for (size_t v = 0; v < width_; ++v)
        merged[v] = ra[v] != kNoTermId ? ra[v] : rb[v];
      if (eval_expr(g.expr, merged.data(), store_) != Tri::True) return;
      any = true;
      if (out.size() < cap) out.push(merged.data());
    };

    if (key != 0 || !pairs.empty()) {
      auto hash_side = [&](const TermId* r, bool left) {
        uint64_t h = hash_masked(r, key, 0x9E3779B97F4A7C15ULL);
        for (auto [x, y] : pairs) h = mix64(h ^ r[left ? x : y]);
        return h;
      };
      std::unordered_multimap<uint64_t, size_t> table;
      table.reserve(b.size());
      for (size_t j = 0; j < b.size(); ++j) {
        poll();
        table.emplace(hash_side(b.row(j), false), j);
      }
      for (size_t i = 0; i < a.size(); ++i) {
        poll();
        if (out.size() >= cap) break;
        bool any = false;
        auto [lo, hi] = table.equal_range(hash_side(a.row(i), true));
        for (auto it = lo; it != hi; ++it) {
          poll();
          try_match(a.row(i), b.row(it->second), any);
        }
        if (!any && out.size() < cap) out.push(a.row(i));
      }
      return out;
    }

    for (size_t i = 0; i < a.size(); ++i) {
      if (out.size() >= cap) break;
      bool any = false;
      for (size_t j = 0; j < b.size(); ++j) {
        poll();
        try_match(a.row(i), b.row(j), any);
      }
      if (!any && out.size() < cap) out.push(a.row(i));
    }
    return out;
  }

  const TripleStore& store_;
  CancelToken* tok_;
  EvalOptions opts_;
  size_t width_;
};

int order_cmp(const std::optional<Term>& oa, const std::optional<Term>& ob) {
  if (!oa || !ob) {
    if (!oa && !ob) return 0;
    return !oa ? -1 : 1;  // unbound sorts first
  }
  const Term& a = *oa;
  const Term& b = *ob;
  auto rank = [](TermKind k) {
    switch (k) {
      case TermKind::Blank: return 0;
      case TermKind::Uri: return 1;
      case TermKind::Literal: return 2;
    }
    return 3;
  };
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind) ? -1 : 1;
  if (a.kind != TermKind::Literal) {
    int c = a.lex.compare(b.lex);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  long long x, y;
  if (is_integer_type(a) && is_integer_type(b) && parse_int(a.lex, x) &&
      parse_int(b.lex, y)) {
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  int c = a.datatype.compare(b.datatype);
  if (c != 0) return c < 0 ? -1 : 1;
  c = a.lex.compare(b.lex);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string distinct_key(const std::vector<std::optional<Term>>& row) {
  std::string k;
  for (const auto& cell : row) {
    if (cell) {
      k.push_back(static_cast<char>('0' + static_cast<int>(cell->kind)));
      k += cell->lex;
      k.push_back('\x1e');
      k += cell->datatype;
    }
    k.push_back('\x1f');
  }
  return k;
}

}  // namespace

bool order_less(const std::optional<Term>& a, const std::optional<Term>& b) {
  return order_cmp(a, b) < 0;
}

EvalResult evaluate(const QueryAst& q, const TripleStore& store,
                    CancelToken* cancel, const EvalOptions& opts) {
  Evaluator ev(q, store, cancel, opts);
  EvalResult result;

  if (q.form == QueryAst::Form::Ask) {
    Rows rows = ev.eval(q.pattern, 1);
    result.is_ask = true;
    result.ask_value = rows.size() > 0;
    return result;
  }

  // Without sorting or deduplication, LIMIT+OFFSET bounds the rows worth
  // producing at all.
  size_t cap = kNoCap;
  if (!q.distinct && q.order_by.empty() && q.limit)
    cap = q.offset.value_or(0) + *q.limit;
  Rows rows = ev.eval(q.pattern, cap);

  std::vector<size_t> idx(rows.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (!q.order_by.empty()) {
    std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
      for (VarId v : q.order_by) {
        TermId ax = rows.row(x)[v], ay = rows.row(y)[v];
        if (ax == ay) continue;
        std::optional<Term> tx, ty;
        if (ax != kNoTermId) tx = store.term(ax);
        if (ay != kNoTermId) ty = store.term(ay);
        int c = order_cmp(tx, ty);
        if (c != 0) return c < 0;
      }
      return false;
    });
  }

  result.table.vars.reserve(q.projection.size());
  for (VarId v : q.projection) result.table.vars.push_back(q.var_names[v]);

  std::unordered_set<std::string> seen;
  uint64_t skip = q.offset.value_or(0);
  uint64_t remaining =
      q.limit ? *q.limit : std::numeric_limits<uint64_t>::max();
  for (size_t i : idx) {
    if (remaining == 0) break;
    if (cancel) cancel->poll();
    std::vector<std::optional<Term>> out_row;
    out_row.reserve(q.projection.size());
    for (VarId v : q.projection) {
      TermId id = rows.row(i)[v];
      if (id == kNoTermId) out_row.emplace_back();
      else out_row.emplace_back(store.term(id));
    }
    if (q.distinct && !seen.insert(distinct_key(out_row)).second) continue;
    if (skip > 0) {
      --skip;
      continue;
    }
    result.table.rows.push_back(std::move(out_row));
    --remaining;
  }
  return result;
}

}  // namespace rdfbench::sparql
