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
#include "rdfbench/worldsim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rdfbench/namedata.hpp"
#include "rdfbench/rdfmodel.hpp"

namespace rdfbench {
namespace {

// Independent sub-stream tags. The ASCII hint sits in the high 32 bits so
// (seed ^ year ^ tag) can never alias across purposes.
constexpr uint64_t kPlanStream = 0x706C616E00000001ULL;   // "plan"
constexpr uint64_t kAttrStream = 0x6174747200000002ULL;   // "attr"
constexpr uint64_t kAuthStream = 0x6175746800000003ULL;   // "auth"
constexpr uint64_t kLinkStream = 0x6C696E6B00000004ULL;   // "link"
constexpr uint64_t kEditStream = 0x6564697400000005ULL;   // "edit"
constexpr uint64_t kCiteStream = 0x6369746500000006ULL;   // "cite"
constexpr uint64_t kAbstStream = 0x6162737400000007ULL;   // "abst"
constexpr uint64_t kErdoStream = 0x6572646F00000008ULL;   // "erdo"
constexpr uint64_t kNameStream = 0x6E616D6500000009ULL;   // "name"
constexpr uint64_t kValueStream = 0x76616C750000000AULL;  // "valu"

constexpr int kFirstYear = 1936;
constexpr int kErdoesFirst = 1940;
constexpr int kErdoesLast = 1996;
constexpr int kErdoesDocs = 10;   // creator edges per covered year
constexpr int kErdoesProcs = 2;   // editor edges per covered year
constexpr double kAbstractFraction = 0.01;
constexpr uint64_t kSchemaTriples = 9;

constexpr uint32_t attr_bit(Attribute a) {
  return 1u << static_cast<unsigned>(a);
}

constexpr int kProcIdx = static_cast<int>(DocClass::Proceedings);
constexpr int kInprocIdx = static_cast<int>(DocClass::Inproceedings);
constexpr int kArticleIdx = static_cast<int>(DocClass::Article);
constexpr int kBookIdx = static_cast<int>(DocClass::Book);
constexpr int kIncollIdx = static_cast<int>(DocClass::Incollection);

// One person in the simulated population. Retired records are dropped; the
// name-collision registry alone keeps label uniqueness global.
struct AuthorRec {
  uint32_t id = 0;
  int16_t first_year = 0;
  int16_t last_year = 0;
  uint32_t cumulative_pubs = 0;
  bool introduced = false;  // type+name triples already written
  bool active = true;
  std::string name;
  std::string label;  // blank-node label (spaces -> underscores)
};

// Per-document plan for the year being simulated.
struct PlannedDoc {
  uint32_t attr_mask = 0;
  uint16_t author_slots = 0;
  uint32_t parent = 0;  // inproceedings: owning proceedings ordinal (1-based)
  bool erdoes_creator = false;
  bool erdoes_editor = false;
  std::vector<uint32_t> authors;  // population indices, valid this year only
  std::vector<uint32_t> editors;  // population indices
  std::vector<uint64_t> cites;    // packed targets; 0 = dangling citation
  std::string abstract;           // empty = none
};

// A publishing author's slot budget for the current year.
struct Member {
  uint32_t pool_idx = 0;
  uint32_t id = 0;
  uint32_t quota = 0;  // papers this author should appear on
  uint32_t left = 0;   // quota not yet consumed
};

struct YearData {
  std::array<long, kNumTableClasses> counts{};
  long journals = 0;
  double f_publ = 0.0;
  std::array<std::vector<PlannedDoc>, kNumTableClasses> docs;
  std::vector<std::vector<uint32_t>> proc_children;  // per proceedings ordinal
  std::vector<Member> publishing;
};

// Emitted documents eligible as citation targets.
struct Citable {
  uint64_t key = 0;
  uint32_t incoming = 0;
};

uint64_t pack_key(DocClass c, int year, uint32_t ordinal) {
  return (static_cast<uint64_t>(c) << 48) |
         (static_cast<uint64_t>(static_cast<uint16_t>(year)) << 32) | ordinal;
}

Term key_to_uri(uint64_t key) {
  auto c = static_cast<DocClass>(key >> 48);
  int year = static_cast<int>((key >> 32) & 0xFFFF);
  auto ordinal = static_cast<uint32_t>(key & 0xFFFFFFFFu);
  return doc_uri(c, year, ordinal);
}

std::string capitalized(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z')
    w[0] = static_cast<char>(w[0] - ('a' - 'A'));
  return w;
}

std::string pick(const std::vector<std::string>& list, RngState& rng) {
  return list[static_cast<size_t>(
      uniform_int(rng, 0, static_cast<int64_t>(list.size()) - 1))];
}

std::string random_title(RngState& rng, int lo, int hi) {
  const auto& ws = namedata::words();
  int n = static_cast<int>(uniform_int(rng, lo, hi));
  std::string t;
  for (int i = 0; i < n; ++i) {
    if (i > 0) t += ' ';
    std::string w = pick(ws, rng);
    t += (i == 0) ? capitalized(std::move(w)) : w;
  }
  return t;
}

std::string venue_label(const char* kind, long ordinal, int year) {
  std::string s = kind;
  s += ' ';
  s += std::to_string(ordinal);
  s += " (";
  s += std::to_string(year);
  s += ')';
  return s;
}

class Generator {
 public:
  Generator(const GenerationConfig& cfg, std::ostream& out)
      : cfg_(cfg), out_(out) {
    name_counts_["Paul Erdoes"] = 1;  // reserved for the fixed person
  }

  GenerationStats run() {
    auto t0 = std::chrono::steady_clock::now();
    stats_.first_year = kFirstYear;
    emit_schema();
    for (int yr = kFirstYear; !stopped_; ++yr) {
      if (cfg_.end_year && yr > *cfg_.end_year) break;
      YearData yd = simulate_year(yr);
      if (emit_year(yr, yd)) {
        finalize_year(yr, yd);
        stats_.last_complete_year = yr;
      } else {
        stats_.truncated = true;
        stopped_ = true;
      }
    }
    out_.flush();
    stats_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return stats_;
  }

 private:
  // ---------------------------------------------------------------- planning

  YearData simulate_year(int yr) {
    YearData yd;
    plan_counts(yr, yd);
    draw_attr_flags(yr, yd);
    link_inproceedings(yr, yd);
    assign_authors(yr, yd);
    mark_erdoes(yr, yd);
    assign_editors(yr, yd);
    draw_citations(yr, yd);
    draw_abstracts(yr, yd);
    return yd;
  }

  void plan_counts(int yr, YearData& yd) {
    RngState rng = substream(cfg_.seed, yr, kPlanStream);
    for (int ci = 0; ci < kNumTableClasses; ++ci)
      yd.counts[ci] = class_count(static_cast<DocClass>(ci), yr, rng);
    yd.journals = class_count(DocClass::Journal, yr, rng);
    // Structural floors: conference papers need a conference, and the fixed
    // person needs two proceedings to chair during the covered years.
    if (yd.counts[kInprocIdx] > 0 && yd.counts[kProcIdx] == 0)
      yd.counts[kProcIdx] = 1;
    if (yr >= kErdoesFirst && yr <= kErdoesLast &&
        yd.counts[kProcIdx] < kErdoesProcs)
      yd.counts[kProcIdx] = kErdoesProcs;
    for (int ci = 0; ci < kNumTableClasses; ++ci) {
      yd.f_publ += static_cast<double>(yd.counts[ci]);
      yd.docs[ci].resize(static_cast<size_t>(yd.counts[ci]));
    }
    yd.proc_children.resize(static_cast<size_t>(yd.counts[kProcIdx]));
  }

  void draw_attr_flags(int yr, YearData& yd) {
    RngState rng = substream(cfg_.seed, yr, kAttrStream);
    for (int ci = 0; ci < kNumTableClasses; ++ci) {
      auto cls = static_cast<DocClass>(ci);
      for (auto& doc : yd.docs[ci]) {
        for (int ai = 0; ai < kNumAttributes; ++ai) {
          double p = attribute_probability(cls, static_cast<Attribute>(ai));
          if (p <= 0.0) continue;
          if (p >= 1.0 || bernoulli(rng, p))
            doc.attr_mask |= 1u << static_cast<unsigned>(ai);
        }
      }
    }
  }

  void link_inproceedings(int yr, YearData& yd) {
    if (yd.counts[kInprocIdx] == 0) return;
    RngState rng = substream(cfg_.seed, yr, kLinkStream);
    for (uint32_t i = 0; i < yd.docs[kInprocIdx].size(); ++i) {
      auto parent = static_cast<uint32_t>(
          uniform_int(rng, 1, yd.counts[kProcIdx]));
      yd.docs[kInprocIdx][i].parent = parent;
      yd.proc_children[parent - 1].push_back(i);
    }
  }

  // ----------------------------------------------------------------- authors

  void assign_authors(int yr, YearData& yd) {
    RngState rng = substream(cfg_.seed, yr, kAuthStream);

    // Realized creator slots per document.
    long total_slots = 0;
    for (int ci = 0; ci < kNumTableClasses; ++ci)
      for (auto& doc : yd.docs[ci])
        if (doc.attr_mask & attr_bit(Attribute::Author)) {
          doc.author_slots = static_cast<uint16_t>(
              repeated_attribute_count(RepeatedAttr::Author, yr, rng));
          total_slots += doc.author_slots;
        }
    if (total_slots == 0) return;

    // Population budget from the fitted yearly factors (expected slots, not
    // the realized draw, feed the factor curves).
    double mean_auth = DiscreteGaussian({mu_auth(yr), sigma_auth(yr)}).mean;
    double f_auth = 0.0;
    for (int ci = 0; ci < kNumTableClasses; ++ci)
      f_auth += static_cast<double>(yd.counts[ci]) *
                attribute_probability(static_cast<DocClass>(ci),
                                      Attribute::Author) *
                mean_auth;
    AuthorCounts ac = author_counts(yr, f_auth);
    long distinct = std::min<long>(round_half_up(ac.distinct_authors),
                                   total_slots);
    if (distinct == 0) distinct = 1;
    long fresh = std::min<long>(round_half_up(ac.new_authors), distinct);

    // Shrinking budget retires the least recently publishing records first.
    long retiring = static_cast<long>(pool_.size()) - distinct;
    if (retiring > 0) retire(retiring);

    long veterans = distinct - fresh;
    if (static_cast<long>(pool_.size()) < veterans) {
      veterans = static_cast<long>(pool_.size());
      fresh = distinct - veterans;
    }

    // Publishing set: a uniform sample of veterans plus the new arrivals.
    yd.publishing.reserve(static_cast<size_t>(distinct));
    if (veterans > 0) {
      std::vector<uint32_t> idx(pool_.size());
      std::iota(idx.begin(), idx.end(), 0u);
      for (long i = 0; i < veterans; ++i) {
        auto j = static_cast<size_t>(uniform_int(
            rng, i, static_cast<int64_t>(idx.size()) - 1));
        std::swap(idx[static_cast<size_t>(i)], idx[j]);
        yd.publishing.push_back(
            Member{idx[static_cast<size_t>(i)],
                   pool_[idx[static_cast<size_t>(i)]].id, 0, 0});
      }
    }
    create_authors(yr, fresh, yd);

    draw_quotas(yr, yd, total_slots, rng);
    match_authors_to_docs(yd);
  }

  void retire(long count) {
    std::vector<uint32_t> idx(pool_.size());
    std::iota(idx.begin(), idx.end(), 0u);
    auto older = [&](uint32_t a, uint32_t b) {
      if (pool_[a].last_year != pool_[b].last_year)
        return pool_[a].last_year < pool_[b].last_year;
      return pool_[a].id < pool_[b].id;
    };
    std::nth_element(idx.begin(), idx.begin() + count, idx.end(), older);
    std::vector<char> gone(pool_.size(), 0);
    for (long i = 0; i < count; ++i) gone[idx[static_cast<size_t>(i)]] = 1;
    size_t w = 0;
    for (size_t r = 0; r < pool_.size(); ++r)
      if (!gone[r]) {
        if (w != r) pool_[w] = std::move(pool_[r]);
        ++w;
      }
    pool_.resize(w);
  }

  void create_authors(int yr, long fresh, YearData& yd) {
    RngState rng = substream(cfg_.seed, yr, kNameStream);
    const auto& firsts = namedata::first_names();
    const auto& lasts = namedata::last_names();
    for (long i = 0; i < fresh; ++i) {
      AuthorRec rec;
      rec.id = next_author_id_++;
      rec.first_year = static_cast<int16_t>(yr);
      rec.last_year = static_cast<int16_t>(yr);
      std::string base = pick(firsts, rng) + " " + pick(lasts, rng);
      uint32_t n = ++name_counts_[base];
      rec.name = (n == 1) ? base : base + " " + std::to_string(n);
      rec.label = rec.name;
      for (auto& ch : rec.label)
        if (ch == ' ') ch = '_';
      pool_.push_back(std::move(rec));
      yd.publishing.push_back(Member{static_cast<uint32_t>(pool_.size() - 1),
                                     pool_.back().id, 0, 0});
    }
  }

  // Per-author paper quotas follow the publications-per-author curve for the
  // year; a +-1 adjustment pass reconciles the total with the realized slots.
  void draw_quotas(int yr, YearData& yd, long total_slots, RngState& rng) {
    std::vector<double> cdf;
    for (int x = 1; x <= 4096; ++x) {
      double w = awp(static_cast<double>(x), yr, yd.f_publ);
      if (w <= 0.0) break;
      cdf.push_back((cdf.empty() ? 0.0 : cdf.back()) + w);
    }
    long sum = 0;
    for (auto& m : yd.publishing) {
      uint32_t q = 1;
      if (!cdf.empty()) {
        double u = next_unit(rng) * cdf.back();
        q = static_cast<uint32_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin() + 1);
        if (q > cdf.size()) q = static_cast<uint32_t>(cdf.size());
      }
      m.quota = q;
      sum += q;
    }
    auto n = static_cast<int64_t>(yd.publishing.size());
    while (sum < total_slots) {
      yd.publishing[static_cast<size_t>(uniform_int(rng, 0, n - 1))].quota++;
      ++sum;
    }
    int stuck = 0;
    while (sum > total_slots) {
      auto& q = yd.publishing[static_cast<size_t>(uniform_int(rng, 0, n - 1))]
                    .quota;
      if (q > 1) {
        --q;
        --sum;
        stuck = 0;
      } else if (++stuck > 10000) {  // deterministic fallback sweep
        for (auto& m : yd.publishing)
          if (sum > total_slots && m.quota > 1) {
            --m.quota;
            --sum;
          }
        stuck = 0;
      }
    }
    for (auto& m : yd.publishing) m.left = m.quota;
  }

  // Documents draw their creator lists from "teams": consecutive runs of the
  // quota-sorted publishing set. Keeping an author's papers inside one small
  // team makes the distinct-coauthor count grow sublinearly with the quota
  // (repeat collaborations), while team size tracks quota^0.81.
  void match_authors_to_docs(YearData& yd) {
    auto& pub = yd.publishing;
    if (pub.empty()) return;
    std::sort(pub.begin(), pub.end(), [](const Member& a, const Member& b) {
      if (a.quota != b.quota) return a.quota > b.quota;
      return a.id < b.id;
    });
    struct Team {
      size_t begin, end;
      long left;
    };
    std::vector<Team> teams;
    size_t i = 0;
    while (i < pub.size()) {
      CoauthorTargets t = coauthor_targets(static_cast<double>(pub[i].quota));
      auto want = static_cast<size_t>(std::lround(t.distinct)) + 1;
      size_t s = std::min(pub.size() - i, std::max<size_t>(want, 2));
      long cap = 0;
      for (size_t k = i; k < i + s; ++k)
        cap += static_cast<long>(pub[k].quota);
      teams.push_back(Team{i, i + s, cap});
      i += s;
    }

    size_t cursor = 0;
    std::vector<uint32_t> chosen;
    auto take_from = [&](size_t t, size_t need, PlannedDoc& doc) {
      chosen.clear();
      for (size_t k = teams[t].begin; k < teams[t].end; ++k)
        if (pub[k].left > 0) chosen.push_back(static_cast<uint32_t>(k));
      std::sort(chosen.begin(), chosen.end(), [&](uint32_t a, uint32_t b) {
        if (pub[a].left != pub[b].left) return pub[a].left > pub[b].left;
        return pub[a].id < pub[b].id;
      });
      size_t take = std::min(need, chosen.size());
      for (size_t k = 0; k < take; ++k) {
        Member& m = pub[chosen[k]];
        doc.authors.push_back(m.pool_idx);
        --m.left;
        --teams[t].left;
      }
      return take;
    };

    for (int ci = 0; ci < kNumTableClasses; ++ci)
      for (auto& doc : yd.docs[ci]) {
        if (doc.author_slots == 0) continue;
        while (cursor < teams.size() && teams[cursor].left == 0) ++cursor;
        if (cursor >= teams.size()) break;
        size_t need = doc.author_slots;
        need -= take_from(cursor, need, doc);
        for (size_t b = cursor + 1; need > 0 && b < teams.size(); ++b)
          if (teams[b].left > 0) need -= take_from(b, need, doc);
      }
  }

  // ------------------------------------------------------- fixed person plan

  void mark_erdoes(int yr, YearData& yd) {
    if (yr < kErdoesFirst || yr > kErdoesLast) return;
    RngState rng = substream(cfg_.seed, yr, kErdoStream);

    // Creator edges go on any non-proceedings document of the year.
    std::vector<std::pair<int, uint32_t>> eligible;
    for (int ci = 0; ci < kNumTableClasses; ++ci) {
      if (ci == kProcIdx) continue;
      for (uint32_t k = 0; k < yd.docs[ci].size(); ++k)
        eligible.emplace_back(ci, k);
    }
    auto want = std::min<size_t>(kErdoesDocs, eligible.size());
    std::vector<char> used(eligible.size(), 0);
    size_t picked = 0;
    int stuck = 0;
    while (picked < want) {
      auto k = static_cast<size_t>(uniform_int(
          rng, 0, static_cast<int64_t>(eligible.size()) - 1));
      if (!used[k]) {
        used[k] = 1;
        yd.docs[eligible[k].first][eligible[k].second].erdoes_creator = true;
        ++picked;
        stuck = 0;
      } else if (++stuck > 1000) {
        for (size_t j = 0; j < used.size() && picked < want; ++j)
          if (!used[j]) {
            used[j] = 1;
            yd.docs[eligible[j].first][eligible[j].second].erdoes_creator =
                true;
            ++picked;
          }
        stuck = 0;
      }
    }

    // Two distinct chairs; the plan guarantees at least two proceedings.
    long procs = yd.counts[kProcIdx];
    long a = uniform_int(rng, 0, procs - 1);
    long b = uniform_int(rng, 0, procs - 2);
    if (b >= a) ++b;
    yd.docs[kProcIdx][static_cast<size_t>(a)].erdoes_editor = true;
    yd.docs[kProcIdx][static_cast<size_t>(b)].erdoes_editor = true;
  }

  // ----------------------------------------------------------------- editors

  void assign_editors(int yr, YearData& yd) {
    RngState rng = substream(cfg_.seed, yr, kEditStream);

    // Chairs come from people who published in earlier years, weighted by
    // their publication record.
    std::vector<uint32_t> cand;
    std::vector<double> prefix;
    double total = 0.0;
    for (uint32_t i = 0; i < pool_.size(); ++i)
      if (pool_[i].first_year < yr) {
        cand.push_back(i);
        total += static_cast<double>(pool_[i].cumulative_pubs) + 1.0;
        prefix.push_back(total);
      }

    for (int ci = 0; ci < kNumTableClasses; ++ci)
      for (auto& doc : yd.docs[ci]) {
        if (!(doc.attr_mask & attr_bit(Attribute::Editor))) continue;
        auto slots = static_cast<size_t>(
            repeated_attribute_count(RepeatedAttr::Editor, yr, rng));
        slots = std::min(slots, cand.size());
        int stuck = 0;
        while (doc.editors.size() < slots) {
          double u = next_unit(rng) * total;
          auto k = static_cast<size_t>(
              std::upper_bound(prefix.begin(), prefix.end(), u) -
              prefix.begin());
          if (k >= cand.size()) k = cand.size() - 1;
          uint32_t pi = cand[k];
          if (std::find(doc.editors.begin(), doc.editors.end(), pi) ==
              doc.editors.end()) {
            doc.editors.push_back(pi);
            stuck = 0;
          } else if (++stuck > 256) {
            for (uint32_t c : cand)
              if (doc.editors.size() < slots &&
                  std::find(doc.editors.begin(), doc.editors.end(), c) ==
                      doc.editors.end())
                doc.editors.push_back(c);
            stuck = 0;
          }
        }
      }
  }

  // --------------------------------------------------------------- citations

  void draw_citations(int yr, YearData& yd) {
    RngState rng = substream(cfg_.seed, yr, kCiteStream);

    // Rank snapshot of all earlier documents by incoming count: popular
    // targets get picked with weight 1/rank, so incoming counts heavy-tail.
    std::vector<uint32_t> order(citable_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
      if (citable_[a].incoming != citable_[b].incoming)
        return citable_[a].incoming > citable_[b].incoming;
      return a < b;
    });
    std::vector<double> harmonic(order.size());
    double h = 0.0;
    for (size_t r = 0; r < order.size(); ++r) {
      h += 1.0 / static_cast<double>(r + 1);
      harmonic[r] = h;
    }

    for (int ci = 0; ci < kNumTableClasses; ++ci)
      for (auto& doc : yd.docs[ci]) {
        if (!(doc.attr_mask & attr_bit(Attribute::Cite))) continue;
        long slots = repeated_attribute_count(RepeatedAttr::Cite, yr, rng);
        for (long s = 0; s < slots; ++s) {
          if (bernoulli(rng, cfg_.untargeted_fraction) || order.empty()) {
            doc.cites.push_back(0);
            continue;
          }
          double u = next_unit(rng) * harmonic.back();
          auto r = static_cast<size_t>(
              std::upper_bound(harmonic.begin(), harmonic.end(), u) -
              harmonic.begin());
          if (r >= order.size()) r = order.size() - 1;
          Citable& target = citable_[order[r]];
          doc.cites.push_back(target.key);
          target.incoming++;  // feeds next year's ranking
        }
      }
  }

  // --------------------------------------------------------------- abstracts

  void draw_abstracts(int yr, YearData& yd) {
    RngState rng = substream(cfg_.seed, yr, kAbstStream);
    static const DiscreteGaussian words_dist(kAbstractWords);
    const auto& ws = namedata::words();
    for (int ci : {kArticleIdx, kInprocIdx})
      for (auto& doc : yd.docs[ci]) {
        if (!bernoulli(rng, kAbstractFraction)) continue;
        int n = words_dist.sample(rng);
        std::string text;
        for (int k = 0; k < n; ++k) {
          if (k > 0) text += ' ';
          text += pick(ws, rng);
        }
        doc.abstract = std::move(text);
      }
  }

  // ---------------------------------------------------------------- emission

  void emit_schema() {
    if (cfg_.triple_limit && *cfg_.triple_limit < kSchemaTriples)
      throw std::invalid_argument(
          "triple limit smaller than the leading schema block (" +
          std::to_string(kSchemaTriples) + " triples)");
    buf_.clear();
    for (const auto& t : schema_triples()) serialize_append(buf_, t);
    out_ << buf_;
    stats_.triples = kSchemaTriples;
  }

  // Returns false when the triple limit cut the year short.
  bool emit_year(int yr, YearData& yd) {
    RngState values = substream(cfg_.seed, yr, kValueStream);
    std::vector<EmittableDoc> cluster;

    for (long j = 1; j <= yd.journals; ++j) {
      cluster.clear();
      EmittableDoc d;
      d.cls = DocClass::Journal;
      d.year = yr;
      d.ordinal = static_cast<uint32_t>(j);
      d.scalars.emplace_back(
          Attribute::Title,
          make_string_literal(venue_label("Journal", j, yr)));
      d.scalars.emplace_back(Attribute::Year, make_integer_literal(yr));
      cluster.push_back(std::move(d));
      if (!emit_cluster(yr, cluster)) return false;
    }

    auto emit_singles = [&](int ci) {
      for (uint32_t k = 0; k < yd.docs[ci].size(); ++k) {
        cluster.clear();
        cluster.push_back(build_doc(ci, k, yr, yd, values));
        if (!emit_cluster(yr, cluster)) return false;
      }
      return true;
    };

    if (!emit_singles(kArticleIdx)) return false;
    if (!emit_singles(kBookIdx)) return false;
    if (!emit_singles(kIncollIdx)) return false;

    for (uint32_t p = 0; p < yd.docs[kProcIdx].size(); ++p) {
      cluster.clear();
      cluster.push_back(build_doc(kProcIdx, p, yr, yd, values));
      for (uint32_t child : yd.proc_children[p])
        cluster.push_back(build_doc(kInprocIdx, child, yr, yd, values));
      if (!emit_cluster(yr, cluster)) return false;
    }

    for (int ci : {static_cast<int>(DocClass::PhdThesis),
                   static_cast<int>(DocClass::MastersThesis),
                   static_cast<int>(DocClass::Www)})
      if (!emit_singles(ci)) return false;
    return true;
  }

  EmittableDoc build_doc(int ci, uint32_t idx, int yr, YearData& yd,
                         RngState& values) {
    auto cls = static_cast<DocClass>(ci);
    PlannedDoc& plan = yd.docs[ci][idx];
    EmittableDoc d;
    d.cls = cls;
    d.year = yr;
    d.ordinal = idx + 1;

    uint32_t mask = plan.attr_mask;
    // Links without a valid in-document target are dropped rather than left
    // dangling; conference papers always point at their own conference.
    if (cls != DocClass::Article || yd.journals == 0)
      mask &= ~attr_bit(Attribute::Journal);
    if (cls == DocClass::Incollection && yd.counts[kBookIdx] == 0)
      mask &= ~attr_bit(Attribute::Crossref);
    if (cls != DocClass::Inproceedings && cls != DocClass::Incollection)
      mask &= ~attr_bit(Attribute::Crossref);

    for (int ai = 0; ai < kNumAttributes; ++ai) {
      auto attr = static_cast<Attribute>(ai);
      if (attr == Attribute::Author || attr == Attribute::Editor ||
          attr == Attribute::Cite)
        continue;  // relational, handled below
      if (!(mask & attr_bit(attr))) continue;
      d.scalars.emplace_back(attr, scalar_value(attr, cls, d.ordinal, yr, yd,
                                                plan, values));
    }

    for (uint32_t pi : plan.authors) d.creators.push_back(person_ref(pi));
    if (plan.erdoes_creator) d.creators.push_back(erdoes_ref());
    for (uint32_t pi : plan.editors) d.editors.push_back(person_ref(pi));
    if (plan.erdoes_editor) d.editors.push_back(erdoes_ref());

    if (!plan.cites.empty()) {
      d.bag_label = "references" + std::to_string(++bag_counter_);
      for (uint64_t key : plan.cites)
        d.citations.push_back(key == 0 ? vocab::kUnknownDocument
                                       : key_to_uri(key));
    }
    if (!plan.abstract.empty()) d.abstract_text = plan.abstract;
    return d;
  }

  Term scalar_value(Attribute attr, DocClass cls, uint32_t ordinal, int yr,
                    YearData& yd, PlannedDoc& plan, RngState& rng) {
    const auto& ws = namedata::words();
    switch (attr) {
      case Attribute::Address:
        return make_string_literal(capitalized(pick(ws, rng)));
      case Attribute::Booktitle:
        if (cls == DocClass::Inproceedings)
          return make_string_literal(
              venue_label("Conference", plan.parent, yr));
        if (cls == DocClass::Proceedings)
          return make_string_literal(venue_label("Conference", ordinal, yr));
        return make_string_literal(random_title(rng, 1, 3));
      case Attribute::Cdrom:
        return make_string_literal("cdrom://" + std::to_string(yr) + "/" +
                                   std::to_string(++cdrom_counter_));
      case Attribute::Chapter:
        return make_integer_literal(uniform_int(rng, 1, 50));
      case Attribute::Crossref:
        if (cls == DocClass::Inproceedings)
          return doc_uri(DocClass::Proceedings, yr, plan.parent);
        return doc_uri(DocClass::Book, yr,
                       static_cast<uint32_t>(
                           uniform_int(rng, 1, yd.counts[kBookIdx])));
      case Attribute::Ee:
        return make_string_literal("http://eprints.localhost/" +
                                   std::to_string(yr) + "/" +
                                   std::to_string(++ee_counter_));
      case Attribute::Isbn: {
        auto grp = uniform_int(rng, 0, 9);
        auto pub = uniform_int(rng, 100, 999);
        auto ttl = uniform_int(rng, 10000, 99999);
        auto chk = uniform_int(rng, 0, 9);
        char s[24];
        std::snprintf(s, sizeof s, "%lld-%lld-%lld-%lld",
                      static_cast<long long>(grp), static_cast<long long>(pub),
                      static_cast<long long>(ttl), static_cast<long long>(chk));
        return make_string_literal(s);
      }
      case Attribute::Journal:
        return doc_uri(DocClass::Journal, yr,
                       static_cast<uint32_t>(
                           uniform_int(rng, 1, yd.journals)));
      case Attribute::Month:
        return make_integer_literal(uniform_int(rng, 1, 12));
      case Attribute::Note:
        return make_string_literal(pick(ws, rng) + " " + pick(ws, rng));
      case Attribute::Number:
        return make_integer_literal(uniform_int(rng, 1, 500));
      case Attribute::Pages: {
        auto start = uniform_int(rng, 1, 1200);
        auto len = uniform_int(rng, 0, 49);
        return make_string_literal(std::to_string(start) + "-" +
                                   std::to_string(start + len));
      }
      case Attribute::Publisher:
        return make_string_literal(pick(namedata::publishers(), rng));
      case Attribute::School:
        return make_string_literal("University of " +
                                   capitalized(pick(ws, rng)));
      case Attribute::Series:
        return make_integer_literal(uniform_int(rng, 1, 100));
      case Attribute::Title:
        if (cls == DocClass::Proceedings)
          return make_string_literal(venue_label("Conference", ordinal, yr));
        return make_string_literal(random_title(rng, 2, 6));
      case Attribute::Url:
        return make_string_literal("http://localhost/docs/" +
                                   std::to_string(yr) + "/" +
                                   std::to_string(++url_counter_));
      case Attribute::Volume:
        return make_integer_literal(uniform_int(rng, 1, 60));
      case Attribute::Year:
        return make_integer_literal(yr);
      default:
        throw std::logic_error("scalar_value: relational attribute");
    }
  }

  PersonRef person_ref(uint32_t pool_idx) {
    AuthorRec& r = pool_[pool_idx];
    PersonRef p;
    p.node = make_blank(r.label);
    p.name = r.name;
    p.introduce = !r.introduced;
    r.introduced = true;
    return p;
  }

  PersonRef erdoes_ref() {
    PersonRef p;
    p.node = vocab::kErdoes;
    p.name = "Paul Erdoes";
    p.introduce = !erdoes_introduced_;
    erdoes_introduced_ = true;
    return p;
  }

  // Streams one atomic cluster; false when it would cross the triple limit,
  // which ends the whole run (later clusters must not leapfrog the cut).
  bool emit_cluster(int yr, std::vector<EmittableDoc>& docs) {
    buf_.clear();
    uint64_t lines = 0;
    uint64_t creators = 0;
    uint64_t intros = 0;
    for (const auto& d : docs) {
      auto triples = document_triples(d);
      lines += triples.size();
      creators += d.creators.size();
      for (const auto& p : d.creators) intros += p.introduce ? 1 : 0;
      for (const auto& p : d.editors) intros += p.introduce ? 1 : 0;
      for (const auto& t : triples) serialize_append(buf_, t);
    }
    if (cfg_.triple_limit && stats_.triples + lines > *cfg_.triple_limit)
      return false;
    out_ << buf_;
    stats_.triples += lines;
    stats_.author_edges += creators;
    stats_.distinct_persons += intros;
    stats_.last_year = yr;
    for (const auto& d : docs)
      stats_.class_counts[static_cast<size_t>(d.cls)]++;
    return true;
  }

  // ------------------------------------------------------------ bookkeeping

  void finalize_year(int yr, YearData& yd) {
    for (const auto& m : yd.publishing) {
      AuthorRec& r = pool_[m.pool_idx];
      r.cumulative_pubs += m.quota - m.left;
      r.last_year = static_cast<int16_t>(yr);
    }
    for (int ci = 0; ci < kNumTableClasses; ++ci)
      for (uint32_t k = 0; k < yd.docs[ci].size(); ++k)
        citable_.push_back(
            Citable{pack_key(static_cast<DocClass>(ci), yr, k + 1), 0});
  }

  const GenerationConfig& cfg_;
  std::ostream& out_;
  GenerationStats stats_;
  std::vector<AuthorRec> pool_;
  std::unordered_map<std::string, uint32_t> name_counts_;
  std::vector<Citable> citable_;
  uint32_t next_author_id_ = 1;
  uint64_t bag_counter_ = 0;
  uint64_t ee_counter_ = 0;
  uint64_t url_counter_ = 0;
  uint64_t cdrom_counter_ = 0;
  bool erdoes_introduced_ = false;
  bool stopped_ = false;
  std::string buf_;
};

}  // namespace

std::string GenerationStats::summary() const {
  static const char* labels[kNumDocClasses] = {
      "articles",      "inproceedings", "proceedings",
      "books",         "incollections", "phd theses",
      "masters theses", "www documents", "journals"};
  char line[96];
  std::string s;
  auto row = [&](const char* k, const std::string& v) {
    std::snprintf(line, sizeof line, "%-18s %s\n", k, v.c_str());
    s += line;
  };
  row("triples", std::to_string(triples));
  for (int i = 0; i < kNumDocClasses; ++i)
    row(labels[i], std::to_string(class_counts[static_cast<size_t>(i)]));
  row("author edges", std::to_string(author_edges));
  row("distinct persons", std::to_string(distinct_persons));
  row("years", std::to_string(first_year) + "-" + std::to_string(last_year) +
                   " (complete through " +
                   std::to_string(last_complete_year) + ")");
  row("truncated", truncated ? "yes" : "no");
  std::snprintf(line, sizeof line, "%-18s %.3f\n", "seconds", seconds);
  s += line;
  return s;
}

GenerationStats generate(const GenerationConfig& config, std::ostream& out) {
  if (config.triple_limit.has_value() == config.end_year.has_value())
    throw std::invalid_argument(
        "exactly one of the triple limit and the end year must be set");
  if (config.triple_limit && *config.triple_limit == 0)
    throw std::invalid_argument("triple limit must be positive");
  if (config.end_year && (*config.end_year < kFirstYear ||
                          *config.end_year > 2150))
    throw std::invalid_argument("end year must lie in [" +
                                std::to_string(kFirstYear) + ", 2150]");
  if (!(config.untargeted_fraction >= 0.0 &&
        config.untargeted_fraction <= 1.0))
    throw std::invalid_argument("untargeted fraction must lie in [0, 1]");
  Generator g(config, out);
  return g.run();
}

GenerationStats generate_to_file(const GenerationConfig& config) {
  std::ofstream f(config.output_path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open output path for writing: " +
                             config.output_path);
  GenerationStats st = generate(config, f);
  f.close();
  if (!f)
    throw std::runtime_error("write error on output path: " +
                             config.output_path);
  return st;
}

}  // namespace rdfbench
