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
#include "rdfbench/distributions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rdfbench {

const char* to_string(DocClass c) {
  switch (c) {
    case DocClass::Article: return "Article";
    case DocClass::Inproceedings: return "Inproceedings";
    case DocClass::Proceedings: return "Proceedings";
    case DocClass::Book: return "Book";
    case DocClass::Incollection: return "Incollection";
    case DocClass::PhdThesis: return "PhdThesis";
    case DocClass::MastersThesis: return "MastersThesis";
    case DocClass::Www: return "Www";
    case DocClass::Journal: return "Journal";
  }
  return "?";
}

const char* to_string(Attribute a) {
  static const char* names[kNumAttributes] = {
      "address", "author", "booktitle", "cdrom", "chapter", "cite",
      "crossref", "editor", "ee", "isbn", "journal", "month",
      "note", "number", "pages", "publisher", "school", "series",
      "title", "url", "volume", "year"};
  return names[static_cast<int>(a)];
}

double gaussian_pdf(double x, const GaussianParams& p) {
  if (!(p.sigma > 0.0))
    throw std::invalid_argument("gaussian_pdf: sigma must be > 0");
  static const double inv_sqrt_2pi = 0.3989422804014326779;
  double z = (x - p.mu) / p.sigma;
  return inv_sqrt_2pi / p.sigma * std::exp(-0.5 * z * z);
}

double logistic(int yr, const LogisticParams& p) {
  return p.a / (1.0 + p.b * std::exp(-p.c * static_cast<double>(yr - p.x0)));
}

double powerlaw(double x, const PowerLawParams& p) {
  if (!(x > 0.0)) throw std::invalid_argument("powerlaw: x must be > 0");
  return p.a * std::pow(x, p.k) + p.b;
}

long round_half_up(double x) {
  double r = std::floor(x + 0.5);
  return r < 0.0 ? 0L : static_cast<long>(r);
}

// The incoll/book/new denominators are printed without the logistic "1+"
// term in the source material; it is restored here (see the notes shipped
// with the repository history) so all class counts stay limited-growth.
const LogisticParams kJournalCurve = {740.43, 426.28, 0.12, 1950};
const LogisticParams kArticleCurve = {58519.12, 876.80, 0.12, 1950};
const LogisticParams kProcCurve = {5502.31, 1250.26, 0.14, 1965};
const LogisticParams kInprocCurve = {337132.34, 1901.05, 0.15, 1965};
const LogisticParams kIncollCurve = {3577.31, 196.49, 0.09, 1980};
const LogisticParams kBookCurve = {52.97, 40739.38, 0.32, 1950};
const GaussianParams kCiteGauss = {16.82, 10.07};
const GaussianParams kEditorGauss = {2.15, 1.18};
const GaussianParams kAbstractWords = {150.0, 30.0};

static const LogisticParams kMuAuthCurve = {2.05, 17.59, 0.11, 1975};
static const LogisticParams kSigmaAuthCurve = {1.00, 6.46, 0.10, 1975};
static const LogisticParams kDauthCurve = {-0.67, 169.41, 0.07, 1936};
static const LogisticParams kNewCurve = {-0.29, 1749.00, 0.14, 1937};
static const LogisticParams kAwpExpCurve = {-0.60, 216223.0, 0.20, 1936};

double mu_auth(int yr) { return logistic(yr, kMuAuthCurve) + 1.05; }
double sigma_auth(int yr) { return logistic(yr, kSigmaAuthCurve) + 0.50; }

double awp_exponent(int yr) { return logistic(yr, kAwpExpCurve) + 3.08; }

double awp(double x, int yr, double f_publ) {
  return powerlaw(x, PowerLawParams{1.50 * f_publ, -awp_exponent(yr), -5.0});
}

long class_count(DocClass c, int yr, RngState& rng) {
  switch (c) {
    case DocClass::Journal: return round_half_up(logistic(yr, kJournalCurve));
    case DocClass::Article: return round_half_up(logistic(yr, kArticleCurve));
    case DocClass::Proceedings: return round_half_up(logistic(yr, kProcCurve));
    case DocClass::Inproceedings:
      return round_half_up(logistic(yr, kInprocCurve));
    case DocClass::Incollection:
      return round_half_up(logistic(yr, kIncollCurve));
    case DocClass::Book: return round_half_up(logistic(yr, kBookCurve));
    case DocClass::PhdThesis: return uniform_int(rng, 0, 20);
    case DocClass::MastersThesis: return uniform_int(rng, 0, 10);
    case DocClass::Www: return uniform_int(rng, 0, 10);
  }
  throw std::invalid_argument("class_count: unknown class");
}

AuthorCounts author_counts(int yr, double f_auth) {
  double distinct = (logistic(yr, kDauthCurve) + 0.84) * f_auth;
  double fresh = (logistic(yr, kNewCurve) + 0.628) * distinct;
  return {distinct, fresh};
}

DiscreteGaussian::DiscreteGaussian(const GaussianParams& p) {
  hi = static_cast<int>(std::ceil(p.mu + 6.0 * p.sigma));
  if (hi < 1) hi = 1;
  cdf.resize(hi);
  double total = 0.0, weighted = 0.0;
  for (int n = 1; n <= hi; ++n) {
    double w = gaussian_pdf(static_cast<double>(n), p);
    total += w;
    weighted += n * w;
    cdf[n - 1] = total;
  }
  for (auto& c : cdf) c /= total;
  cdf[hi - 1] = 1.0;
  mean = weighted / total;
}

int DiscreteGaussian::sample(RngState& rng) const {
  double u = next_unit(rng);
  // inverse CDF: first n with cdf[n-1] > u
  int lo = 0, hi_ = static_cast<int>(cdf.size()) - 1;
  while (lo < hi_) {
    int mid = (lo + hi_) / 2;
    if (cdf[mid] > u)
      hi_ = mid;
    else
      lo = mid + 1;
  }
  return lo + 1;
}

long repeated_attribute_count(RepeatedAttr attr, int yr, RngState& rng) {
  switch (attr) {
    case RepeatedAttr::Cite: {
      static const DiscreteGaussian d(kCiteGauss);
      return d.sample(rng);
    }
    case RepeatedAttr::Editor: {
      static const DiscreteGaussian d(kEditorGauss);
      return d.sample(rng);
    }
    case RepeatedAttr::Author: {
      DiscreteGaussian d(GaussianParams{mu_auth(yr), sigma_auth(yr)});
      return d.sample(rng);
    }
  }
  throw std::invalid_argument("repeated_attribute_count: unknown attribute");
}

// P(attr|class), classes in DocClass order (without Journal), attributes in
// Attribute order.
static const double kAttrTable[kNumTableClasses][kNumAttributes] = {
    // Article
    {0.0000, 0.9895, 0.0006, 0.0112, 0.0000, 0.0048, 0.0006, 0.0000,
     0.6781, 0.0000, 0.9994, 0.0065, 0.0297, 0.9224, 0.9261, 0.0006,
     0.0000, 0.0000, 1.0000, 0.9986, 0.9982, 1.0000},
    // Inproceedings
    {0.0000, 0.9970, 1.0000, 0.0162, 0.0000, 0.0104, 0.8003, 0.0000,
     0.6519, 0.0000, 0.0000, 0.0000, 0.0000, 0.0001, 0.9489, 0.0000,
     0.0000, 0.0000, 1.0000, 1.0000, 0.0000, 1.0000},
    // Proceedings
    {0.0004, 0.0001, 0.9579, 0.0000, 0.0000, 0.0001, 0.0016, 0.7992,
     0.0019, 0.8592, 0.0004, 0.0001, 0.0002, 0.0009, 0.0000, 0.9737,
     0.0000, 0.5791, 1.0000, 0.9860, 0.5670, 1.0000},
    // Book
    {0.0000, 0.8937, 0.0183, 0.0032, 0.0000, 0.0079, 0.0000, 0.1040,
     0.0079, 0.9294, 0.0000, 0.0008, 0.0000, 0.0000, 0.0000, 0.9992,
     0.0000, 0.5365, 1.0000, 0.2373, 0.5024, 1.0000},
    // Incollection
    {0.0000, 0.8459, 1.0000, 0.0138, 0.0005, 0.0047, 0.6951, 0.0000,
     0.3610, 0.0073, 0.0000, 0.0000, 0.0000, 0.0000, 0.6849, 0.0237,
     0.0000, 0.0000, 1.0000, 0.9992, 0.0000, 1.0000},
    // PhdThesis
    {0.0000, 1.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0000,
     0.1444, 0.0222, 0.0000, 0.0333, 0.0000, 0.0333, 0.0000, 0.0444,
     1.0000, 0.0222, 1.0000, 0.0222, 0.0111, 1.0000},
    // MastersThesis
    {0.0000, 1.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0000,
     0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0000, 0.0000,
     1.0000, 0.0000, 1.0000, 0.3750, 0.0000, 1.0000},
    // Www
    {0.0000, 0.9973, 0.0001, 0.0000, 0.0000, 0.0000, 0.0000, 0.0004,
     0.0000, 0.0000, 0.0000, 0.0000, 0.0273, 0.0000, 0.0000, 0.0000,
     0.0000, 0.0000, 1.0000, 0.9624, 0.0000, 0.0011},
};

double attribute_probability(DocClass c, Attribute a) {
  int ai = static_cast<int>(a);
  if (ai < 0 || ai >= kNumAttributes)
    throw std::invalid_argument("attribute_probability: unknown attribute");
  if (c == DocClass::Journal)
    return (a == Attribute::Title || a == Attribute::Year) ? 1.0 : 0.0;
  int ci = static_cast<int>(c);
  if (ci < 0 || ci >= kNumTableClasses)
    throw std::invalid_argument("attribute_probability: unknown class");
  return kAttrTable[ci][ai];
}

CoauthorTargets coauthor_targets(double x) {
  if (x < 0.0) throw std::invalid_argument("coauthor_targets: x must be >= 0");
  if (x == 0.0) return {0.0, 0.0};
  return {2.12 * x, std::pow(x, 0.81)};
}

static void append_logistic(std::ostringstream& os, const char* name,
                            const LogisticParams& p) {
  os << name << ": a=" << p.a << " b=" << p.b << " c=" << p.c
     << " x0=" << p.x0 << "\n";
}

std::string params_manifest() {
  std::ostringstream os;
  os.precision(10);
  os << "yearly class-count curves (logistic a/(1+b*e^(-c*(yr-x0))))\n";
  append_logistic(os, "  journal", kJournalCurve);
  append_logistic(os, "  article", kArticleCurve);
  append_logistic(os, "  proceedings", kProcCurve);
  append_logistic(os, "  inproceedings", kInprocCurve);
  append_logistic(os, "  incollection", kIncollCurve);
  append_logistic(os, "  book", kBookCurve);
  os << "  phdthesis: random[0..20]\n"
     << "  mastersthesis: random[0..10]\n"
     << "  www: random[0..10]\n";
  os << "repeated attributes (gaussian mu,sigma; support [1,ceil(mu+6sigma)])\n"
     << "  cite: mu=" << kCiteGauss.mu << " sigma=" << kCiteGauss.sigma << "\n"
     << "  editor: mu=" << kEditorGauss.mu << " sigma=" << kEditorGauss.sigma
     << "\n";
  append_logistic(os, "  mu_auth (+1.05)", kMuAuthCurve);
  append_logistic(os, "  sigma_auth (+0.50)", kSigmaAuthCurve);
  os << "author population\n";
  append_logistic(os, "  dauth factor (+0.84)", kDauthCurve);
  append_logistic(os, "  new factor (+0.628)", kNewCurve);
  os << "publications per author: 1.50*f_publ(yr)*x^(-k(yr))-5\n";
  append_logistic(os, "  exponent k (+3.08)", kAwpExpCurve);
  os << "coauthors: total=2.12*x distinct=x^0.81\n"
     << "abstracts: 1% of Article/Inproceedings, words ~ gaussian(150,30)\n";
  os << "attribute probabilities P(attr|class)\n";
  static const DocClass cls[kNumTableClasses] = {
      DocClass::Article,      DocClass::Inproceedings, DocClass::Proceedings,
      DocClass::Book,         DocClass::Incollection,  DocClass::PhdThesis,
      DocClass::MastersThesis, DocClass::Www};
  os << "  attribute";
  for (auto c : cls) os << " " << to_string(c);
  os << "\n";
  os.precision(4);
  os.setf(std::ios::fixed);
  for (int a = 0; a < kNumAttributes; ++a) {
    os << "  " << to_string(static_cast<Attribute>(a));
    for (auto c : cls)
      os << " " << attribute_probability(c, static_cast<Attribute>(a));
    os << "\n";
  }
  return os.str();
}

}  // namespace rdfbench
