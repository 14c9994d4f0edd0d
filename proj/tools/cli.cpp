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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "anchorcheck/numeric/fd_oracle.hpp"

namespace anchorcheck::cli {
namespace {

using exactnum::ParamPoly;
using exactnum::ParamRational;
using exactnum::Rational;
using finitetype::Certificate;
using finitetype::Verdict;
using trigring::RawTerm;
using trigring::Render;

constexpr double kConvergenceStep = 1e-2;
constexpr double kMinOrder = 1.7;
constexpr double kMaxOrder = 2.3;
constexpr unsigned kEquationOrders = 3;

// n / r^k
ParamRational OverR(long n, unsigned k) {
  return ParamRational(ParamPoly(n), ParamPoly::Single(1, {0, k}));
}

std::string ModeString(const std::optional<Instantiation>& params) {
  if (!params) return "symbolic";
  return "instantiate(a=" + params->a.to_string() + ",r=" + params->r.to_string() +
         ")";
}

bool IsGaussTarget(std::string_view target) { return target.front() == 'n'; }

numeric::EvalPoint ReferencePoint() {
  return numeric::EvalPoint(std::numbers::pi / 4, 0, Rational(2), Rational(1));
}

numeric::Field FieldOf(const TrigPoly& f, const numeric::EvalPoint& p) {
  numeric::CompiledTrigPoly compiled(f, p.a(), p.r());
  return [compiled](double t, double) { return compiled(t); };
}

// ---- document sections ----

AdjudicationDoc BuildAdjudication(unsigned k, const IterationTrace& trace) {
  const std::vector<numeric::Candidate> candidates{
      {"engine", trace.channel_value(k)},
      {"published", PublishedCandidate(k, trace)}};
  const auto points = numeric::DocumentedPoints();
  const TrigPoly& preimage = trace.channel_value(k - 1);
  const numeric::Adjudication adj =
      numeric::Adjudicate(preimage, candidates, points);

  AdjudicationDoc doc;
  doc.order = k;
  doc.step = numeric::kDefaultStep;
  doc.tolerance = numeric::kAdjudicationTolerance;
  for (const auto& p : points) doc.t_points.push_back(p.t());
  doc.oracle = adj.oracle;
  for (const auto& c : candidates) doc.candidates.push_back(c.label);
  doc.max_deviation = adj.max_deviation;
  doc.winner = adj.winner;

  const numeric::EvalPoint ref = ReferencePoint();
  doc.oracle_at_reference =
      numeric::FdLaplacianRichardson(FieldOf(preimage, ref), ref, doc.step);
  for (const auto& c : candidates) {
    if (c.label == adj.winner) doc.winner_at_reference = numeric::Eval(c.value, ref);
  }
  return doc;
}

std::vector<EquationRow> BuildEquations(const IterationTrace& trace,
                                        const std::optional<Instantiation>& at,
                                        unsigned max_k, bool adjudicate) {
  std::vector<EquationRow> rows;
  for (unsigned k = 1; k <= max_k; ++k) {
    EquationRow row;
    row.label = "laplacian_n3_order_" + std::to_string(k);
    row.order = k;
    row.engine = Render(trace.channel_value(k), at);
    row.engine_pole = trace.entries[k].pole;
    if (auto published = PublishedIterate(k)) row.published = Render(*published, at);
    const auto lambda = finitetype::ExtractLambda(trace, k);
    if (lambda.shape_ok) row.engine_leading = lambda.lambda.to_string();
    row.published_leading = finitetype::LambdaProductFormula(k).to_string();
    if (adjudicate) row.adjudication = BuildAdjudication(k, trace).winner;
    rows.push_back(std::move(row));
  }
  return rows;
}

CertificateDoc BuildCertificateDoc(const Certificate& cert,
                                   const std::optional<Instantiation>& at) {
  CertificateDoc doc;
  doc.max_order = cert.max_order;
  doc.mode = ModeString(at);
  doc.poles = cert.poles();
  for (const auto& o : cert.orders) {
    doc.orders.push_back({o.order, o.pole, o.lambda.to_string(), o.shape_ok});
  }
  doc.relation_at_degree = cert.relation_at_degree;
  doc.rank = cert.rank;
  doc.verdict = cert.verdict_string();
  doc.relation_degree = cert.relation_degree;
  for (const auto& c : cert.coefficients) doc.coefficients.push_back(c.to_string());
  return doc;
}

LambdaDoc BuildLambdaDoc(const surface::DiffOp& op, const IterationTrace& trace,
                         unsigned max_k) {
  LambdaDoc doc;
  for (const auto& row : finitetype::BuildLambdaReport(trace, max_k)) {
    doc.rows.push_back({row.k, row.product_formula.to_string(), row.engine.to_string(),
                        row.engine_shape_ok, row.agree,
                        row.agree ? "agree" : "MISMATCH"});
  }
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto rep = finitetype::StepLeadingCheck(op, k);
    StepRowDoc s;
    s.k = rep.k;
    s.actual_pole = rep.actual_pole;
    if (rep.multiplier) s.multiplier = rep.multiplier->to_string();
    s.published_pole = rep.published_pole;
    s.published_multiplier = rep.published_multiplier.to_string();
    s.derived_pole = rep.derived_pole;
    s.derived_multiplier = rep.derived_multiplier.to_string();
    s.published_match = rep.published_match;
    s.derived_match = rep.derived_match;
    doc.steps.push_back(std::move(s));
  }
  return doc;
}

IdentityDoc IdentityFrom(std::string name, const trigring::PhiVector& residual,
                         const std::optional<Instantiation>& at) {
  IdentityDoc doc;
  doc.name = std::move(name);
  doc.passed = std::all_of(residual.begin(), residual.end(),
                           [](const PhiHarmonic& f) { return f.is_zero(); });
  for (const auto& f : residual) doc.residual.push_back(Render(f, at));
  return doc;
}

std::vector<IdentityDoc> BuildIdentities(const SurfaceContext& ctx,
                                         const std::optional<Instantiation>& at) {
  std::vector<IdentityDoc> ids;
  ids.push_back(IdentityFrom("laplace_position", surface::LaplacePositionResidual(ctx), at));
  ids.push_back(IdentityFrom("laplace_gauss", surface::LaplaceGaussResidual(ctx), at));
  ids.push_back({"beltrami_divergence_form", surface::CheckBeltramiDerivation(ctx), {}});

  // Third coordinate of grad(2H) + (4H^2 - 2K) n against L n3 computed
  // directly from the operator.
  const TrigPoly& h = ctx.mean_curvature;
  const TrigPoly factor = (h * h).scaled(4) - ctx.gauss_curvature.scaled(2);
  const PhiHarmonic rhs = GradT(ctx, h.scaled(2))[2] + factor * ctx.gauss[2];
  const PhiHarmonic diff = rhs - ctx.laplacian.apply(ctx.gauss[2]);
  ids.push_back({"gauss_n3_matches_first_iterate", diff.is_zero(), {Render(diff, at)}});
  return ids;
}

NumericDoc BuildNumeric(const IterationTrace& trace, unsigned max_k) {
  NumericDoc doc;
  const auto points = numeric::DocumentedPoints();
  for (unsigned k = 1; k <= max_k; ++k) {
    const auto rep = numeric::ConvergenceSuite(
        "laplacian_n3_order_" + std::to_string(k), trace.entries[k - 1].value,
        trace.entries[k].value, points, kConvergenceStep);
    ConvergenceDoc c;
    c.label = rep.label;
    c.steps = rep.steps;
    for (const auto& s : rep.samples) {
      const bool ok = !s.order || (*s.order >= kMinOrder && *s.order <= kMaxOrder);
      c.samples.push_back({s.t, s.phi, s.symbolic, s.oracle, s.abs_error, s.order, ok});
    }
    doc.convergence.push_back(std::move(c));
  }
  return doc;
}

bool NumericOk(const NumericDoc& doc) {
  for (const auto& c : doc.convergence) {
    for (const auto& s : c.samples) {
      if (!s.order_ok) return false;
    }
  }
  return !doc.adjudication || doc.adjudication->winner != numeric::kInconclusive;
}

bool IdentitiesOk(const std::vector<IdentityDoc>& ids) {
  return std::all_of(ids.begin(), ids.end(), [](const auto& i) { return i.passed; });
}

// ---- subcommands ----

struct Outcome {
  ReportDocument doc;
  int code = kExitOk;
  // Replaces the rendered document in text mode when set.
  std::optional<std::string> text;
};

IterationTrace TraceOf(const SurfaceContext& ctx, std::string_view target,
                       unsigned order, const RunConfig& cfg) {
  return finitetype::Iterate(ctx.laplacian, TargetField(ctx, target), order,
                             std::string(target), cfg.term_ceiling);
}

Outcome RunIterate(const SurfaceContext& ctx, const RunConfig& cfg) {
  const IterationTrace trace = TraceOf(ctx, cfg.target, cfg.order, cfg);
  const PhiHarmonic& value = trace.entries[cfg.order].value;
  EquationRow row;
  row.label = "laplacian_" + cfg.target + "_order_" + std::to_string(cfg.order);
  row.order = cfg.order;
  row.engine = Render(value, cfg.params);
  row.engine_pole = value.pole();
  if (cfg.target == "n3") {
    if (auto published = PublishedIterate(cfg.order)) {
      row.published = Render(*published, cfg.params);
    }
  }
  Outcome out;
  out.text = row.engine + "\n";
  out.doc.equations = std::vector<EquationRow>{row};
  out.doc.verdict = "computed";
  return out;
}

Outcome RunCertify(const SurfaceContext& ctx, const RunConfig& cfg) {
  const IterationTrace trace = TraceOf(ctx, cfg.target, cfg.max_order, cfg);
  finitetype::CertifyOptions opts;
  opts.term_ceiling = cfg.term_ceiling;
  opts.params = cfg.params;
  opts.parallel = cfg.parallel;
  const Certificate cert = finitetype::CertifyTrace(trace, cfg.max_order, opts);
  Outcome out;
  out.doc.certificate = BuildCertificateDoc(cert, cfg.params);
  out.doc.lambda = BuildLambdaDoc(ctx.laplacian, trace, cfg.max_order);
  out.doc.verdict = VerdictSentence(cert, cfg.target);
  if (cert.verdict != Verdict::kNoRelationUpTo) out.code = kExitCheckFailed;
  return out;
}

SurfaceContext Perturbed(SurfaceContext ctx, std::string_view which) {
  if (which == "H") ctx.mean_curvature += TrigPoly(1);
  if (which == "K") ctx.gauss_curvature += TrigPoly(1);
  return ctx;
}

Outcome RunVerify(const SurfaceContext& ctx, const RunConfig& cfg) {
  Outcome out;
  const auto ids = BuildIdentities(Perturbed(ctx, cfg.perturb), cfg.params);
  std::string failed;
  for (const auto& id : ids) {
    if (!id.passed) failed += (failed.empty() ? "" : ", ") + id.name;
  }
  out.doc.identities = ids;
  out.doc.verdict = failed.empty() ? "all identities hold" : "identity check failed: " + failed;
  if (!failed.empty()) out.code = kExitCheckFailed;
  return out;
}

Outcome RunAdjudicate(const SurfaceContext& ctx, const RunConfig& cfg) {
  const IterationTrace trace = TraceOf(ctx, "n3", cfg.order, cfg);
  Outcome out;
  NumericDoc numeric;
  numeric.adjudication = BuildAdjudication(cfg.order, trace);
  out.doc.equations = BuildEquations(trace, cfg.params, cfg.order, false);
  out.doc.equations->back().adjudication = numeric.adjudication->winner;
  const bool conclusive = numeric.adjudication->winner != numeric::kInconclusive;
  out.doc.verdict = conclusive ? "winner: " + numeric.adjudication->winner
                               : std::string("adjudication inconclusive");
  out.doc.numeric = std::move(numeric);
  if (!conclusive) out.code = kExitCheckFailed;
  return out;
}

Outcome RunNumeric(const SurfaceContext& ctx, const RunConfig& cfg) {
  const IterationTrace trace = TraceOf(ctx, "n3", kEquationOrders, cfg);
  Outcome out;
  out.doc.numeric = BuildNumeric(trace, kEquationOrders);
  const bool ok = NumericOk(*out.doc.numeric);
  out.doc.verdict = ok ? "finite-difference convergence order within [1.7, 2.3]"
                       : "finite-difference convergence order out of range";
  if (!ok) out.code = kExitCheckFailed;
  return out;
}

Outcome RunReport(const SurfaceContext& ctx, const RunConfig& cfg) {
  Outcome out = RunCertify(ctx, cfg);
  const IterationTrace n3 = TraceOf(ctx, "n3", kEquationOrders, cfg);
  out.doc.equations = BuildEquations(n3, cfg.params, kEquationOrders, true);
  out.doc.identities = BuildIdentities(ctx, cfg.params);
  NumericDoc numeric = BuildNumeric(n3, kEquationOrders);
  numeric.adjudication = BuildAdjudication(2, n3);
  out.doc.numeric = std::move(numeric);

  std::vector<std::string> failed;
  if (!IdentitiesOk(*out.doc.identities)) failed.push_back("identities");
  if (!NumericOk(*out.doc.numeric)) failed.push_back("numeric");
  if (!failed.empty()) {
    std::string tail;
    for (const auto& f : failed) tail += (tail.empty() ? "" : ", ") + f;
    out.doc.verdict += "; failed checks: " + tail;
    out.code = kExitCheckFailed;
  }
  return out;
}

int WriteOutput(const RunConfig& cfg, const std::string& bytes, std::ostream& out,
                std::ostream& err) {
  if (cfg.output.empty()) {
    out << bytes;
    return kExitOk;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  file << bytes;
  if (!file) {
    err << "anchorcheck: cannot write " << cfg.output << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

void AddCommon(CLI::App* sub, RunConfig& cfg, std::string& format, std::string& params) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "Write the report to this file");
  sub->add_option("--params", params,
                  "Instantiate parameters, e.g. a=2,r=1 (default: symbolic)");
  sub->add_option("--ceiling", cfg.term_ceiling, "Term-count ceiling per iterate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_flag("--parallel", cfg.parallel, "Run annihilator searches concurrently");
}

CLI::Validator TargetCheck() {
  return CLI::IsMember({"n1", "n2", "n3", "x1", "x2", "x3"});
}

}  // namespace

nlohmann::json ConfigJson(const RunConfig& config) {
  nlohmann::json j;
  j["subcommand"] = config.subcommand;
  j["order"] = config.order;
  j["max_order"] = config.max_order;
  j["target"] = config.target;
  j["params"] = ModeString(config.params);
  j["format"] = config.format == Format::kJson ? "json" : "text";
  j["term_ceiling"] = config.term_ceiling;
  j["parallel"] = config.parallel;
  return j;
}

Instantiation ParseParams(std::string_view text) {
  std::optional<Rational> a;
  std::optional<Rational> r;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected name=value in --params, got '" +
                                  std::string(item) + "'");
    }
    const std::string_view name = item.substr(0, eq);
    auto& slot = name == "a" ? a : name == "r" ? r
                 : throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
    if (slot) throw std::invalid_argument("parameter '" + std::string(name) + "' repeated");
    slot = Rational::Parse(item.substr(eq + 1));
  }
  if (!a || !r) throw std::invalid_argument("--params needs both a and r");
  if (!(*a > *r && r->sign() > 0)) {
    throw std::invalid_argument("--params requires a > r > 0");
  }
  return {*a, *r};
}

PhiHarmonic TargetField(const SurfaceContext& ctx, std::string_view target) {
  if (target.size() == 2 && target[1] >= '1' && target[1] <= '3') {
    const int i = target[1] - '1';
    if (target[0] == 'n') return ctx.gauss[i];
    if (target[0] == 'x') return ctx.position[i];
  }
  throw std::invalid_argument("unknown target '" + std::string(target) + "'");
}

std::optional<TrigPoly> PublishedIterate(unsigned k) {
  if (k == 1) {
    const RawTerm terms[] = {{1, 0, 0, OverR(-1, 2)}, {1, 1, 1, OverR(-1, 1)}};
    return TrigPoly::Normalize(terms);
  }
  if (k == 2) {
    const RawTerm terms[] = {{1, 0, 0, OverR(-1, 4)},
                             {1, 1, 1, OverR(-5, 3)},
                             {3, 0, 2, OverR(-1, 2)},
                             {1, 2, 2, OverR(2, 2)},
                             {3, 1, 3, OverR(-3, 1)}};
    return TrigPoly::Normalize(terms);
  }
  return std::nullopt;
}

TrigPoly PublishedCandidate(unsigned k, const IterationTrace& trace) {
  if (auto printed = PublishedIterate(k)) return *printed;
  const TrigPoly& engine = trace.channel_value(k);
  const auto extracted = finitetype::ExtractLambda(trace, k);
  const Rational shift = finitetype::LambdaProductFormula(k) - extracted.lambda;
  return engine + finitetype::LeadingTemplate(k).scaled(ParamRational(shift));
}

std::string VerdictSentence(const Certificate& cert, std::string_view target) {
  const std::string verdict = cert.verdict_string();
  const std::string m = std::to_string(cert.max_order);
  switch (cert.verdict) {
    case Verdict::kNoRelationUpTo:
      return verdict + ": the anchor-ring " +
             (IsGaussTarget(target) ? "Gauss map" : "position vector") +
             " is of infinite type, verified up to order " + m;
    case Verdict::kRelationFound:
      return verdict + ": " + std::string(target) +
             " is annihilated by a monic polynomial of degree " +
             std::to_string(cert.relation_degree) + " in the Laplacian";
    case Verdict::kInconclusive:
      break;
  }
  return verdict + ": no annihilator up to degree " + m +
         ", but the pole pattern does not certify infinite type";
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text";
  std::string params;

  CLI::App app{"Exact Laplace-Beltrami calculus and finite-type certificates on the "
               "anchor ring",
               "anchorcheck"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* iterate = app.add_subcommand("iterate", "Print L^K applied to a target");
  iterate->add_option("--order", cfg.order, "Iteration order K")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  iterate->add_option("--target", cfg.target, "n1..n3 or x1..x3")
      ->check(TargetCheck())
      ->capture_default_str();

  auto* certify = app.add_subcommand("certify", "Bounded-order infinite-type certificate");
  certify->add_option("--max-order", cfg.max_order, "Highest order M")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  certify->add_option("--target", cfg.target, "n1..n3 or x1..x3")
      ->check(TargetCheck())
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Exact curvature identities");
  verify->add_option("--perturb", cfg.perturb)->check(CLI::IsMember({"H", "K"}))->group("");

  auto* adjudicate =
      app.add_subcommand("adjudicate", "Finite-difference vote between candidates");
  cfg.order = 2;
  adjudicate->add_option("--order", cfg.order, "Order K of the adjudicated iterate")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();

  auto* numeric_cmd = app.add_subcommand("numeric", "Finite-difference convergence suite");

  auto* report = app.add_subcommand("report", "All checks in one document");
  report->add_option("--max-order", cfg.max_order, "Highest order M")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();

  for (auto* sub : {iterate, certify, verify, adjudicate, numeric_cmd, report}) {
    AddCommon(sub, cfg, format, params);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  if (chosen == iterate && iterate->count("--order") == 0) cfg.order = 1;
  if (chosen != iterate && chosen != adjudicate) cfg.order = 0;
  if (const char* env = std::getenv(kCeilingEnv); env && chosen->count("--ceiling") == 0) {
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
      err << "anchorcheck: " << kCeilingEnv << " must be a positive integer, got '"
          << text << "'\n";
      return kExitUsage;
    }
    cfg.term_ceiling = value;
  }
  cfg.format = format == "json" ? Format::kJson : Format::kText;
  if (!params.empty()) {
    try {
      cfg.params = ParseParams(params);
    } catch (const std::exception& e) {
      err << "anchorcheck: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  const SurfaceContext ctx = surface::BuildAnchorRing();
  Outcome outcome;
  try {
    if (chosen == iterate) outcome = RunIterate(ctx, cfg);
    if (chosen == certify) outcome = RunCertify(ctx, cfg);
    if (chosen == verify) outcome = RunVerify(ctx, cfg);
    if (chosen == adjudicate) outcome = RunAdjudicate(ctx, cfg);
    if (chosen == numeric_cmd) outcome = RunNumeric(ctx, cfg);
    if (chosen == report) outcome = RunReport(ctx, cfg);
  } catch (const finitetype::ResourceLimitExceeded& e) {
    err << "anchorcheck: " << e.what() << "\n";
    return kExitResourceLimit;
  }

  outcome.doc.config = ConfigJson(cfg);
  const std::string bytes = cfg.format == Format::kText && outcome.text
                                ? *outcome.text
                                : Render(outcome.doc, cfg.format);
  if (const int code = WriteOutput(cfg, bytes, out, err); code != kExitOk) return code;
  if (outcome.code != kExitOk) err << "anchorcheck: " << outcome.doc.verdict << "\n";
  return outcome.code;
}

}  // namespace anchorcheck::cli
