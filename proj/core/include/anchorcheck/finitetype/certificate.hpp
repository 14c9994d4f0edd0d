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

#ifndef ANCHORCHECK_FINITETYPE_CERTIFICATE_HPP_
#define ANCHORCHECK_FINITETYPE_CERTIFICATE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anchorcheck/finitetype/iteration.hpp"

namespace anchorcheck::finitetype {

// sin^(2k-1) t cos t / (r gamma^(2k-1)), the top-pole monomial of L^k n3.
TrigPoly LeadingTemplate(unsigned k);

// The unique rational lambda with pole(f - lambda * tmpl) < pole(tmpl),
// read off the values of both numerators on the zero set of gamma.
// nullopt when pole(f) > pole(tmpl) or no parameter-free lambda exists.
std::optional<Rational> LeadingRatio(const TrigPoly& f, const TrigPoly& tmpl);

struct LambdaExtraction {
  Rational lambda;
  bool shape_ok = false;
  // Rendered residue that blocked extraction, when shape_ok is false.
  std::optional<std::string> offending_residue;
};

// lambda_k for order k of the trace's channel against LeadingTemplate(k).
LambdaExtraction ExtractLambda(const IterationTrace& trace, unsigned k);

// prod_{j=1..k} (2j-1)(2j-3), the closed-form product claimed for lambda_k.
Rational LambdaProductFormula(unsigned k);

// Applies op to sin^k t cos t / (r gamma^k) and compares the top pole and
// its multiplier with the published claim (pole 2k-1, multiplier lambda_k)
// and with the derived one (pole k+2, multiplier -k^2).
struct StepLeadingReport {
  unsigned k = 0;
  unsigned actual_pole = 0;
  std::optional<Rational> multiplier;
  unsigned published_pole = 0;
  Rational published_multiplier;
  unsigned derived_pole = 0;
  Rational derived_multiplier;
  bool published_match = false;
  bool derived_match = false;
};
StepLeadingReport StepLeadingCheck(const DiffOp& op, unsigned k);

// (sigma_1, ..., sigma_k) of prod (x - lambda_i) = x^k + sigma_1 x^(k-1) + ...
std::vector<Rational> SigmaFromEigenvalues(std::span<const Rational> eigenvalues);

struct LambdaRow {
  unsigned k = 0;
  Rational product_formula;
  Rational engine;
  bool engine_shape_ok = false;
  bool agree = false;
};
std::vector<LambdaRow> BuildLambdaReport(const IterationTrace& trace, unsigned max_k);

enum class Verdict { kNoRelationUpTo, kRelationFound, kInconclusive };

struct OrderCertificate {
  unsigned order = 0;
  unsigned pole = 0;
  Rational lambda;
  bool shape_ok = false;
};

struct Certificate {
  unsigned max_order = 0;
  std::vector<OrderCertificate> orders;
  // Result of the degree-m annihilator search, m = 1..max_order.
  std::vector<bool> relation_at_degree;
  std::size_t rank = 0;
  bool instantiated = false;
  Verdict verdict = Verdict::kInconclusive;
  unsigned relation_degree = 0;
  std::vector<ParamRational> coefficients;

  // "NoRelationUpTo(M)", "RelationFound(degree=d)" or "Inconclusive(M)".
  std::string verdict_string() const;
  std::vector<unsigned> poles() const;
};

struct CertifyOptions {
  std::size_t term_ceiling = kDefaultTermCeiling;
  // Parameter values for the instantiated (non-uniform) mode.
  std::optional<Instantiation> params;
  // Run per-degree annihilator searches on worker threads.
  bool parallel = false;
};

// NoRelationUpTo(M) iff the channel poles are exactly 1, 3, ..., 2M-1,
// every extracted lambda is a nonzero rational, and no monic relation of
// degree <= M exists. Otherwise RelationFound at the smallest degree that
// admits one, or Inconclusive when none does. ResourceLimitExceeded from
// the iteration propagates.
Certificate Certify(const DiffOp& op, const PhiHarmonic& f, unsigned max_order,
                    const CertifyOptions& options = {});
// Same, over an already computed trace.
Certificate CertifyTrace(const IterationTrace& trace, unsigned max_order,
                         const CertifyOptions& options = {});

}  // namespace anchorcheck::finitetype

#endif  // ANCHORCHECK_FINITETYPE_CERTIFICATE_HPP_
