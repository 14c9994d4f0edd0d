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

#ifndef ANCHORCHECK_TOOLS_REPORT_HPP_
#define ANCHORCHECK_TOOLS_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace anchorcheck::cli {

inline constexpr const char* kToolVersion = "anchorcheck 1.0.0";

enum class Format { kText, kJson };

// One row of the iterate comparison table.
struct EquationRow {
  std::string label;
  unsigned order = 0;
  std::string engine;
  unsigned engine_pole = 0;
  // Published closed form in the expression grammar, when fully printed.
  std::optional<std::string> published;
  std::optional<std::string> engine_leading;
  std::optional<std::string> published_leading;
  // Winning candidate label from the numeric adjudication.
  std::optional<std::string> adjudication;

  friend bool operator==(const EquationRow&, const EquationRow&) = default;
};

struct OrderRow {
  unsigned order = 0;
  unsigned pole = 0;
  std::string lambda;
  bool shape_ok = false;

  friend bool operator==(const OrderRow&, const OrderRow&) = default;
};

struct CertificateDoc {
  unsigned max_order = 0;
  std::string mode;
  std::vector<unsigned> poles;
  std::vector<OrderRow> orders;
  std::vector<bool> relation_at_degree;
  std::size_t rank = 0;
  std::string verdict;
  unsigned relation_degree = 0;
  std::vector<std::string> coefficients;

  friend bool operator==(const CertificateDoc&, const CertificateDoc&) = default;
};

struct LambdaRowDoc {
  unsigned k = 0;
  std::string product_formula;
  std::string engine;
  bool shape_ok = false;
  bool agree = false;
  // "agree" or "MISMATCH".
  std::string status;

  friend bool operator==(const LambdaRowDoc&, const LambdaRowDoc&) = default;
};

struct StepRowDoc {
  unsigned k = 0;
  unsigned actual_pole = 0;
  std::optional<std::string> multiplier;
  unsigned published_pole = 0;
  std::string published_multiplier;
  unsigned derived_pole = 0;
  std::string derived_multiplier;
  bool published_match = false;
  bool derived_match = false;

  friend bool operator==(const StepRowDoc&, const StepRowDoc&) = default;
};

struct LambdaDoc {
  std::vector<LambdaRowDoc> rows;
  std::vector<StepRowDoc> steps;

  friend bool operator==(const LambdaDoc&, const LambdaDoc&) = default;
};

struct IdentityDoc {
  std::string name;
  bool passed = false;
  // Rendered residual per coordinate.
  std::vector<std::string> residual;

  friend bool operator==(const IdentityDoc&, const IdentityDoc&) = default;
};

struct SampleDoc {
  double t = 0;
  double phi = 0;
  double symbolic = 0;
  double oracle = 0;
  double abs_error = 0;
  std::optional<double> order;
  bool order_ok = false;

  friend bool operator==(const SampleDoc&, const SampleDoc&) = default;
};

struct ConvergenceDoc {
  std::string label;
  std::vector<double> steps;
  std::vector<SampleDoc> samples;

  friend bool operator==(const ConvergenceDoc&, const ConvergenceDoc&) = default;
};

struct AdjudicationDoc {
  unsigned order = 0;
  double step = 0;
  double tolerance = 0;
  std::vector<double> t_points;
  std::vector<double> oracle;
  std::vector<std::string> candidates;
  std::vector<double> max_deviation;
  std::string winner;
  // Winner and oracle at t = pi/4, phi = 0, (a, r) = (2, 1).
  std::optional<double> winner_at_reference;
  double oracle_at_reference = 0;

  friend bool operator==(const AdjudicationDoc&, const AdjudicationDoc&) = default;
};

struct NumericDoc {
  std::vector<ConvergenceDoc> convergence;
  std::optional<AdjudicationDoc> adjudication;

  friend bool operator==(const NumericDoc&, const NumericDoc&) = default;
};

// Every section except version/config/verdict is optional and serializes
// as null when absent. JSON keys are emitted sorted.
struct ReportDocument {
  std::string version = kToolVersion;
  nlohmann::json config = nlohmann::json::object();
  std::optional<std::vector<EquationRow>> equations;
  std::optional<CertificateDoc> certificate;
  std::optional<LambdaDoc> lambda;
  std::optional<std::vector<IdentityDoc>> identities;
  std::optional<NumericDoc> numeric;
  std::string verdict;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::json ToJson(const ReportDocument& doc);
// Throws nlohmann::json::exception on schema mismatch.
ReportDocument FromJson(const nlohmann::json& j);

std::string Render(const ReportDocument& doc, Format format);

}  // namespace anchorcheck::cli

#endif  // ANCHORCHECK_TOOLS_REPORT_HPP_
