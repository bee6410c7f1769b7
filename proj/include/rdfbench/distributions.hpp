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
#include <string>
#include <vector>

#include "rdfbench/rng.hpp"

namespace rdfbench {

/// Bell curve: mu fixes the peak position, sigma the statistical spread.
struct GaussianParams {
  double mu;
  double sigma;
};

/// Logistic (limited-growth) curve a/(1+b*e^(-c*(yr-x0))); monotone
/// increasing, caught between 0 and the upper asymptote a.
struct LogisticParams {
  double a;
  double b;
  double c;
  int x0;
};

/// f(x) = a*x^k + b with k < 0: steadily decreasing for x > 0.
struct PowerLawParams {
  double a;
  double k;
  double b;
};

/// The eight DTD document classes plus the implicit Journal class.
enum class DocClass : uint8_t {
  Article,
  Inproceedings,
  Proceedings,
  Book,
  Incollection,
  PhdThesis,
  MastersThesis,
  Www,
  Journal,
};
inline constexpr int kNumDocClasses = 9;
inline constexpr int kNumTableClasses = 8;  // Journal has no table column

/// The 22 DTD child tags describing a document.
enum class Attribute : uint8_t {
  Address,
  Author,
  Booktitle,
  Cdrom,
  Chapter,
  Cite,
  Crossref,
  Editor,
  Ee,
  Isbn,
  Journal,
  Month,
  Note,
  Number,
  Pages,
  Publisher,
  School,
  Series,
  Title,
  Url,
  Volume,
  Year,
};
inline constexpr int kNumAttributes = 22;

const char* to_string(DocClass c);
const char* to_string(Attribute a);

/// Repeated attributes may occur multiple times on one document.
enum class RepeatedAttr : uint8_t { Cite, Editor, Author };

double gaussian_pdf(double x, const GaussianParams& p);
double logistic(int yr, const LogisticParams& p);
double powerlaw(double x, const PowerLawParams& p);

/// floor(x+0.5), clamped at 0; the fixed rounding rule for expected counts.
long round_half_up(double x);

/// Fitted yearly curves for the document classes.
extern const LogisticParams kJournalCurve;     // 740.43/(1+426.28e^-.12(yr-1950))
extern const LogisticParams kArticleCurve;     // 58519.12/(1+876.80e^-.12(yr-1950))
extern const LogisticParams kProcCurve;        // 5502.31/(1+1250.26e^-.14(yr-1965))
extern const LogisticParams kInprocCurve;      // 337132.34/(1+1901.05e^-.15(yr-1965))
extern const LogisticParams kIncollCurve;      // 3577.31/(1+196.49e^-.09(yr-1980))
extern const LogisticParams kBookCurve;        // 52.97/(1+40739.38e^-.32(yr-1950))
extern const GaussianParams kCiteGauss;        // (16.82, 10.07)
extern const GaussianParams kEditorGauss;      // (2.15, 1.18)
extern const GaussianParams kAbstractWords;    // (150, 30)

/// mu/sigma of the per-year authors-per-paper Gaussian.
double mu_auth(int yr);
double sigma_auth(int yr);

/// Exponent of the authors-with-x-publications power law.
double awp_exponent(int yr);
/// f_awp(x, yr) = 1.50*f_publ*x^(-awp_exponent(yr)) - 5.
double awp(double x, int yr, double f_publ);

/// Expected instance count of a class in a year. PhD/Masters/WWW draw from
/// their uniform ranges, everything else rounds its curve.
long class_count(DocClass c, int yr, RngState& rng);

struct AuthorCounts {
  double distinct_authors;
  double new_authors;
};
/// distinct = dauth-factor(yr)*f_auth; new = new-factor(yr)*distinct.
AuthorCounts author_counts(int yr, double f_auth);

/// Gaussian discretized over [1, ceil(mu+6*sigma)] with normalized weights;
/// exposed so tests can check the weights and analytic mean directly.
struct DiscreteGaussian {
  int hi;                    // support is [1, hi]
  std::vector<double> cdf;   // cdf[n-1] = P(value <= n)
  double mean;               // analytic mean of the discretized distribution

  explicit DiscreteGaussian(const GaussianParams& p);
  int sample(RngState& rng) const;
};

/// Samples the repeated-attribute count (>= 1): cite/editor have fixed
/// parameters, author uses the per-year mu/sigma curves.
long repeated_attribute_count(RepeatedAttr attr, int yr, RngState& rng);

/// Appendix-table lookup P(attr | class). Journal documents are not a table
/// class: they carry exactly title and year.
double attribute_probability(DocClass c, Attribute a);

struct CoauthorTargets {
  double total;     // 2.12*x
  double distinct;  // x^0.81
};
CoauthorTargets coauthor_targets(double x);

/// Full parameter manifest (curve constants + the 8x22 table) as text,
/// dumpable via the CLI for audit.
std::string params_manifest();

}  // namespace rdfbench
