// Copyright 2026 The Anchorcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anchorcheck/finitetype/certificate.hpp"

#include <future>
#include <utility>

namespace anchorcheck::finitetype {

TrigPoly LeadingTemplate(unsigned k) {
  const unsigned p = 2 * k - 1;
  const trigring::RawTerm t{p, 1, p, *ParamRational::R().inverse()};
  return TrigPoly::Normalize(std::span(&t, 1));
}

std::optional<Rational> LeadingRatio(const TrigPoly& f, const TrigPoly& tmpl) {
  if (f.pole() < tmpl.pole()) return Rational(0);
  if (f.pole() > tmpl.pole()) return std::nullopt;
  const auto [fe, fo] = f.num().residues();
  const auto [te, to] = tmpl.num().residues();
  // Both pairs live in Q(a, r) + s Q(a, r) with s^2 = 1 - a^2/r^2 not a
  // square, so the ratio must match on each part.
  const bool use_odd = !to.is_zero();
  const ParamRational ratio = use_odd ? fo / to : fe / te;
  if (!(fe == ratio * te) || !(fo == ratio * to)) return std::nullopt;
  return ratio.as_constant();
}

LambdaExtraction ExtractLambda(const IterationTrace& trace, unsigned k) {
  LambdaExtraction out;
  const TrigPoly& f = trace.channel_value(k);
  const TrigPoly tmpl = LeadingTemplate(k);
  auto lambda = LeadingRatio(f, tmpl);
  if (!lambda) {
    const auto [fe, fo] = f.num().residues();
    out.offending_residue = f.pole() > tmpl.pole()
                                ? "pole " + std::to_string(f.pole()) + " exceeds " +
                                      std::to_string(tmpl.pole())
                                : "(" + fe.to_string() + ") + s*(" + fo.to_string() + ")";
    return out;
  }
  const TrigPoly rest = f - tmpl.scaled(*lambda);
  out.lambda = *lambda;
  out.shape_ok = rest.pole() < tmpl.pole();
  return out;
}

Rational LambdaProductFormula(unsigned k) {
  Rational prod(1);
  for (long j = 1; j <= static_cast<long>(k); ++j) {
    prod *= Rational((2 * j - 1) * (2 * j - 3));
  }
  return prod;
}

StepLeadingReport StepLeadingCheck(const DiffOp& op, unsigned k) {
  StepLeadingReport rep;
  rep.k = k;
  const trigring::RawTerm input{k, 1, k, *ParamRational::R().inverse()};
  const TrigPoly u = TrigPoly::Normalize(std::span(&input, 1));
  const TrigPoly v = op.apply(PhiHarmonic::Constant(u)).f0;
  rep.actual_pole = v.pole();
  const trigring::RawTerm top{rep.actual_pole, 1, rep.actual_pole,
                              *ParamRational::R().inverse()};
  rep.multiplier = LeadingRatio(v, TrigPoly::Normalize(std::span(&top, 1)));
  rep.published_pole = 2 * k - 1;
  rep.published_multiplier = LambdaProductFormula(k);
  rep.derived_pole = k + 2;
  rep.derived_multiplier = Rational(-static_cast<long>(k * k));
  rep.published_match = rep.actual_pole == rep.published_pole && rep.multiplier &&
                    *rep.multiplier == rep.published_multiplier;
  rep.derived_match = rep.actual_pole == rep.derived_pole && rep.multiplier &&
                      *rep.multiplier == rep.derived_multiplier;
  return rep;
}

std::vector<Rational> SigmaFromEigenvalues(std::span<const Rational> eigenvalues) {
  // Coefficients of prod (x - lambda_i), highest degree first.
  std::vector<Rational> poly{Rational(1)};
  for (const Rational& lambda : eigenvalues) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= lambda * poly[i];
    }
    poly = std::move(next);
  }
  return {poly.begin() + 1, poly.end()};
}

std::vector<LambdaRow> BuildLambdaReport(const IterationTrace& trace, unsigned max_k) {
  std::vector<LambdaRow> rows;
  for (unsigned k = 1; k <= max_k && k < trace.entries.size(); ++k) {
    const LambdaExtraction e = ExtractLambda(trace, k);
    LambdaRow row{k, LambdaProductFormula(k), e.lambda, e.shape_ok, false};
    row.agree = e.shape_ok && row.engine == row.product_formula;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string Certificate::verdict_string() const {
  switch (verdict) {
    case Verdict::kNoRelationUpTo:
      return "NoRelationUpTo(" + std::to_string(max_order) + ")";
    case Verdict::kRelationFound:
      return "RelationFound(degree=" + std::to_string(relation_degree) + ")";
    case Verdict::kInconclusive:
      break;
  }
  return "Inconclusive(" + std::to_string(max_order) + ")";
}

std::vector<unsigned> Certificate::poles() const {
  std::vector<unsigned> out;
  for (const auto& o : orders) out.push_back(o.pole);
  return out;
}

Certificate Certify(const DiffOp& op, const PhiHarmonic& f, unsigned max_order,
                    const CertifyOptions& options) {
  return CertifyTrace(Iterate(op, f, max_order, {}, options.term_ceiling), max_order,
                      options);
}

Certificate CertifyTrace(const IterationTrace& trace, unsigned max_order,
                         const CertifyOptions& options) {
  if (max_order == 0 || trace.entries.size() <= max_order) {
    throw std::invalid_argument("CertifyTrace: trace shorter than max_order");
  }
  Certificate cert;
  cert.max_order = max_order;
  cert.instantiated = options.params.has_value();

  bool odd_poles = true;
  bool lambdas_ok = true;
  for (unsigned k = 1; k <= max_order; ++k) {
    const LambdaExtraction e = ExtractLambda(trace, k);
    const unsigned pole = trace.entries[k].pole;
    cert.orders.push_back({k, pole, e.lambda, e.shape_ok});
    odd_poles = odd_poles && pole == 2 * k - 1;
    lambdas_ok = lambdas_ok && e.shape_ok && !e.lambda.is_zero();
  }

  using Relation = std::optional<std::vector<ParamRational>>;
  std::vector<Relation> relations(max_order);
  auto search = [&](unsigned m) { return AnnihilatorSearch(trace, m, options.params); };
  auto rank = [&] { return IterateRank(trace, max_order + 1, options.params); };
  if (options.parallel) {
    std::vector<std::future<Relation>> jobs;
    for (unsigned m = 1; m <= max_order; ++m) {
      jobs.push_back(std::async(std::launch::async, search, m));
    }
    auto rank_job = std::async(std::launch::async, rank);
    for (unsigned m = 1; m <= max_order; ++m) relations[m - 1] = jobs[m - 1].get();
    cert.rank = rank_job.get();
  } else {
    for (unsigned m = 1; m <= max_order; ++m) relations[m - 1] = search(m);
    cert.rank = rank();
  }

  for (const auto& rel : relations) cert.relation_at_degree.push_back(rel.has_value());
  for (unsigned m = 1; m <= max_order; ++m) {
    if (relations[m - 1]) {
      cert.verdict = Verdict::kRelationFound;
      cert.relation_degree = m;
      cert.coefficients = std::move(*relations[m - 1]);
      return cert;
    }
  }
  cert.verdict = odd_poles && lambdas_ok ? Verdict::kNoRelationUpTo
                                         : Verdict::kInconclusive;
  return cert;
}

}  // namespace anchorcheck::finitetype
