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

#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace nlohmann {

template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};

}  // namespace nlohmann

namespace anchorcheck::cli {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquationRow, label, order, engine, engine_pole,
                                   published, engine_leading, published_leading,
                                   adjudication)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OrderRow, order, pole, lambda, shape_ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CertificateDoc, max_order, mode, poles, orders,
                                   relation_at_degree, rank, verdict, relation_degree,
                                   coefficients)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LambdaRowDoc, k, product_formula, engine, shape_ok,
                                   agree, status)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StepRowDoc, k, actual_pole, multiplier,
                                   published_pole, published_multiplier, derived_pole,
                                   derived_multiplier, published_match, derived_match)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LambdaDoc, rows, steps)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IdentityDoc, name, passed, residual)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SampleDoc, t, phi, symbolic, oracle, abs_error,
                                   order, order_ok)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ConvergenceDoc, label, steps, samples)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AdjudicationDoc, order, step, tolerance, t_points,
                                   oracle, candidates, max_deviation, winner,
                                   winner_at_reference, oracle_at_reference)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NumericDoc, convergence, adjudication)

nlohmann::json ToJson(const ReportDocument& doc) {
  nlohmann::json j;
  j["version"] = doc.version;
  j["config"] = doc.config;
  j["equations"] = doc.equations;
  j["certificate"] = doc.certificate;
  j["lambda"] = doc.lambda;
  j["identities"] = doc.identities;
  j["numeric"] = doc.numeric;
  j["verdict"] = doc.verdict;
  return j;
}

ReportDocument FromJson(const nlohmann::json& j) {
  ReportDocument doc;
  j.at("version").get_to(doc.version);
  doc.config = j.at("config");
  j.at("equations").get_to(doc.equations);
  j.at("certificate").get_to(doc.certificate);
  j.at("lambda").get_to(doc.lambda);
  j.at("identities").get_to(doc.identities);
  j.at("numeric").get_to(doc.numeric);
  j.at("verdict").get_to(doc.verdict);
  return doc;
}

namespace {

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void TextEquations(std::ostream& os, const std::vector<EquationRow>& rows) {
  os << "== iterates\n";
  for (const auto& r : rows) {
    os << r.label << " (order " << r.order << ", pole " << r.engine_pole << ")\n";
    os << "  engine:     " << r.engine << "\n";
    if (r.published) os << "  published:  " << *r.published << "\n";
    if (r.engine_leading || r.published_leading) {
      const std::string e = r.engine_leading.value_or("-");
      const std::string p = r.published_leading.value_or("-");
      os << "  leading:    engine " << e << ", published " << p
         << (e == p ? "" : "  MISMATCH") << "\n";
    }
    if (r.adjudication) os << "  numeric adjudication: " << *r.adjudication << "\n";
  }
}

void TextCertificate(std::ostream& os, const CertificateDoc& c) {
  os << "== certificate\n";
  os << "mode: " << c.mode << "\n";
  os << "max order: " << c.max_order << "\n";
  os << "order  pole  shape  lambda\n";
  for (const auto& o : c.orders) {
    os << o.order << "  " << o.pole << "  " << (o.shape_ok ? "ok" : "BAD") << "  "
       << o.lambda << "\n";
  }
  os << "annihilator found at degrees:";
  bool any = false;
  for (std::size_t m = 0; m < c.relation_at_degree.size(); ++m) {
    if (c.relation_at_degree[m]) {
      os << " " << (m + 1);
      any = true;
    }
  }
  os << (any ? "" : " none") << "\n";
  os << "rank of iterates 0.." << c.max_order << ": " << c.rank << "\n";
  if (!c.coefficients.empty()) {
    os << "relation coefficients:";
    for (const auto& k : c.coefficients) os << " [" << k << "]";
    os << "\n";
  }
  os << "certificate verdict: " << c.verdict << "\n";
}

void TextLambda(std::ostream& os, const LambdaDoc& l) {
  os << "== lambda\n";
  os << "k  product-formula  engine  status\n";
  for (const auto& r : l.rows) {
    os << r.k << "  " << r.product_formula << "  " << r.engine << "  "
       << (r.agree ? "agree" : "MISMATCH") << (r.shape_ok ? "" : " (shape failed)")
       << "\n";
  }
  if (!l.steps.empty()) {
    os << "single-step leading term of L[sin^k t cos t/(r g^k)]\n";
    os << "k  actual-pole  multiplier  published(pole,mult)  derived(pole,mult)\n";
    for (const auto& s : l.steps) {
      os << s.k << "  " << s.actual_pole << "  " << s.multiplier.value_or("-") << "  ("
         << s.published_pole << ", " << s.published_multiplier << ") "
         << (s.published_match ? "agree" : "MISMATCH") << "  (" << s.derived_pole
         << ", " << s.derived_multiplier << ") "
         << (s.derived_match ? "agree" : "MISMATCH") << "\n";
    }
  }
}

void TextIdentities(std::ostream& os, const std::vector<IdentityDoc>& ids) {
  os << "== identities\n";
  for (const auto& id : ids) {
    os << (id.passed ? "PASS  " : "FAIL  ") << id.name << "\n";
    if (!id.passed) {
      for (std::size_t i = 0; i < id.residual.size(); ++i) {
        os << "  residual[" << i << "] = " << id.residual[i] << "\n";
      }
    }
  }
}

void TextNumeric(std::ostream& os, const NumericDoc& n) {
  os << "== numeric\n";
  for (const auto& c : n.convergence) {
    os << c.label << " (steps";
    for (double h : c.steps) os << " " << Num(h);
    os << ")\n  t  symbolic  oracle  abs_error  order\n";
    for (const auto& s : c.samples) {
      os << "  " << Num(s.t) << "  " << Num(s.symbolic) << "  " << Num(s.oracle) << "  "
         << Num(s.abs_error) << "  " << (s.order ? Num(*s.order) : "exact")
         << (s.order_ok ? "" : "  OUT-OF-RANGE") << "\n";
    }
  }
  if (n.adjudication) {
    const auto& a = *n.adjudication;
    os << "adjudication of order " << a.order << " (h = " << Num(a.step)
       << ", tolerance " << Num(a.tolerance) << ")\n";
    for (std::size_t i = 0; i < a.candidates.size(); ++i) {
      os << "  " << a.candidates[i] << ": max deviation " << Num(a.max_deviation[i])
         << "\n";
    }
    os << "  winner: " << a.winner << "\n";
    os << "  oracle at t=pi/4: " << Num(a.oracle_at_reference);
    if (a.winner_at_reference) os << ", winner " << Num(*a.winner_at_reference);
    os << "\n";
  }
}

}  // namespace

std::string Render(const ReportDocument& doc, Format format) {
  if (format == Format::kJson) return ToJson(doc).dump(2) + "\n";
  std::ostringstream os;
  os << doc.version << "\n";
  os << "config: " << doc.config.dump() << "\n";
  if (doc.equations) TextEquations(os, *doc.equations);
  if (doc.certificate) TextCertificate(os, *doc.certificate);
  if (doc.lambda) TextLambda(os, *doc.lambda);
  if (doc.identities) TextIdentities(os, *doc.identities);
  if (doc.numeric) TextNumeric(os, *doc.numeric);
  os << "verdict: " << doc.verdict << "\n";
  return os.str();
}

}  // namespace anchorcheck::cli
