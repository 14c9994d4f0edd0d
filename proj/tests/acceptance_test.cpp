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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "anchorcheck/finitetype/certificate.hpp"
#include "anchorcheck/numeric/fd_oracle.hpp"
#include "anchorcheck/surface/anchor_ring.hpp"
#include "anchorcheck/trigring/render.hpp"
#include "cli.hpp"

namespace {

using anchorcheck::exactnum::ParamPoly;
using anchorcheck::exactnum::ParamRational;
using anchorcheck::exactnum::Rational;
using anchorcheck::trigring::PhiHarmonic;
using anchorcheck::trigring::TrigPoly;
namespace ft = anchorcheck::finitetype;
namespace nm = anchorcheck::numeric;
namespace sf = anchorcheck::surface;

// Pinned tolerances and budgets.
constexpr double kAdjudicationTol = 1e-5;
constexpr double kFdStep = 1e-2;
constexpr double kMinOrder = 1.7;
constexpr double kMaxOrder = 2.3;
// Independent computer-algebra value of the second iterate at
// (t, a, r) = (pi/4, 2, 1), frozen.
constexpr double kSecondIterateGolden = -1.56975628825421;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const sf::SurfaceContext& Ring() {
  static const sf::SurfaceContext ctx = sf::BuildAnchorRing();
  return ctx;
}

ParamRational InvR(unsigned k) {
  return ParamRational(ParamPoly(1), ParamPoly::Single(1, {0, k}));
}

const TrigPoly kS = TrigPoly::Sin();
const TrigPoly kC = TrigPoly::Cos();

// -(sin t / r) (cos t / gamma + 1/r), normalized.
TrigPoly FirstIterateFactored() {
  return -(kS.scaled(InvR(1)) * (kC * TrigPoly::InverseGamma() + TrigPoly(InvR(1))));
}

Outcome FirstIterate() {
  const auto trace = ft::Iterate(Ring().laplacian, Ring().gauss[2], 1);
  const bool ok = trace.entries[1].value == PhiHarmonic::Constant(FirstIterateFactored());
  return {ok, anchorcheck::trigring::Render(trace.channel_value(1))};
}

Outcome LaplacePosition() {
  sf::SurfaceContext shifted = Ring();
  shifted.mean_curvature += TrigPoly(1);
  const bool holds = sf::CheckLaplacePosition(Ring());
  const bool control = sf::CheckLaplacePosition(shifted);
  return {holds && !control, std::string("identity ") + (holds ? "holds" : "fails") +
                                 ", H+1 control " + (control ? "passes" : "fails")};
}

Outcome LaplaceGauss() {
  const auto& ctx = Ring();
  const bool holds = sf::CheckLaplaceGauss(ctx);
  const TrigPoly& h = ctx.mean_curvature;
  const TrigPoly factor = (h * h).scaled(4) - ctx.gauss_curvature.scaled(2);
  const PhiHarmonic rhs = sf::GradT(ctx, h.scaled(2))[2] + factor * ctx.gauss[2];
  const bool third = rhs == PhiHarmonic::Constant(FirstIterateFactored());
  return {holds && third, std::string("identity ") + (holds ? "holds" : "fails") +
                              ", right side third coordinate " +
                              (third ? "reproduces" : "misses") + " the first iterate"};
}

Outcome SecondIterateAdjudication() {
  const auto trace = ft::Iterate(Ring().laplacian, Ring().gauss[2], 2);
  const TrigPoly engine = trace.channel_value(2);
  const TrigPoly published = *anchorcheck::cli::PublishedIterate(2);
  // The two differ only in the sin^3 cos / (r gamma^3) coefficient.
  const TrigPoly tmpl = ft::LeadingTemplate(2);
  const auto engine_lambda = ft::LeadingRatio(engine, tmpl);
  const bool four_terms =
      engine_lambda && engine - published == tmpl.scaled(ParamRational(*engine_lambda + 3));

  const std::vector<nm::Candidate> candidates{{"engine", engine}, {"published", published}};
  const auto points = nm::DocumentedPoints();
  const auto adj = nm::Adjudicate(trace.channel_value(1), candidates, points,
                                  nm::kDefaultStep, kAdjudicationTol);
  const nm::EvalPoint ref(std::numbers::pi / 4, 0, 2, 1);
  const TrigPoly& winner = adj.winner == "published" ? published : engine;
  const double value = nm::Eval(winner, ref);
  const double oracle = adj.oracle[1];
  const bool ok = four_terms && adj.conclusive &&
                  std::abs(value - oracle) < kAdjudicationTol &&
                  std::abs(value - kSecondIterateGolden) < kAdjudicationTol;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "winner %s, coefficient %s vs published -3, value %.10f, oracle %.10f",
                adj.winner.c_str(),
                engine_lambda ? engine_lambda->to_string().c_str() : "?", value, oracle);
  return {ok, buf};
}

const ft::IterationTrace& EightTrace() {
  static const auto trace = ft::Iterate(Ring().laplacian, Ring().gauss[2], 8, "n3");
  return trace;
}

Outcome CertificateAtEight() {
  const ft::Certificate cert = ft::CertifyTrace(EightTrace(), 8);
  bool ok = cert.verdict == ft::Verdict::kNoRelationUpTo;
  std::string poles, lambdas;
  for (const auto& o : cert.orders) {
    ok = ok && o.pole == 2 * o.order - 1 && o.shape_ok && !o.lambda.is_zero();
    poles += (poles.empty() ? "" : ",") + std::to_string(o.pole);
    lambdas += (lambdas.empty() ? "" : ",") + o.lambda.to_string();
  }
  for (bool found : cert.relation_at_degree) ok = ok && !found;
  return {ok, cert.verdict_string() + ", poles " + poles + ", lambda " + lambdas};
}

Outcome RankOfNine() {
  const std::size_t rank = ft::IterateRank(EightTrace(), 9);
  return {rank == 9, "rank " + std::to_string(rank)};
}

Outcome LambdaTable() {
  const auto rows = ft::BuildLambdaReport(EightTrace(), 6);
  bool ok = rows.size() == 6 && rows[0].product_formula == Rational(-1) &&
            rows[1].product_formula == Rational(-3) &&
            rows[2].product_formula == Rational(-45);
  std::string table;
  for (const auto& row : rows) {
    ok = ok && !row.engine.is_zero() && row.engine_shape_ok;
    table += (table.empty() ? "" : "; ") + std::to_string(row.k) + ": " +
             row.product_formula.to_string() + " vs " + row.engine.to_string() +
             (row.agree ? " agree" : " MISMATCH");
  }
  return {ok, table};
}

Outcome PositiveControls() {
  const sf::DiffOp second_only{TrigPoly(-InvR(2)), {}, {}};
  const auto eigen = ft::Iterate(second_only, PhiHarmonic::Constant(kS), 1);
  const auto rel = ft::AnnihilatorSearch(eigen, 1);
  const bool eigen_ok = rel && rel->size() == 1 && (*rel)[0] == -InvR(2);
  const auto constant = ft::Iterate(Ring().laplacian, PhiHarmonic::Constant(TrigPoly(1)), 1);
  const auto null_rel = ft::AnnihilatorSearch(constant, 1);
  const bool null_ok = null_rel && null_rel->size() == 1 && (*null_rel)[0].is_zero();
  return {eigen_ok && null_ok,
          std::string("sin t under -(1/r^2) d_tt: ") +
              (rel ? "x + (" + (*rel)[0].to_string() + ")" : "none") +
              ", constant: " + (null_rel ? "x + (" + (*null_rel)[0].to_string() + ")" : "none")};
}

Outcome FdConvergence() {
  const auto trace = ft::Iterate(Ring().laplacian, Ring().gauss[2], 2);
  bool ok = true;
  double lo = 1e9, hi = -1e9;
  for (unsigned k = 1; k <= 2; ++k) {
    for (const auto& p : nm::DocumentedPoints()) {
      const nm::CompiledTrigPoly f(trace.channel_value(k - 1), p.a(), p.r());
      const nm::Field fn = [f](double t, double) { return f(t); };
      const auto c = nm::ConvergenceOrder(fn, nm::Eval(trace.channel_value(k), p), p, kFdStep);
      ok = ok && c.order && *c.order >= kMinOrder && *c.order <= kMaxOrder;
      if (c.order) {
        lo = std::min(lo, *c.order);
        hi = std::max(hi, *c.order);
      }
    }
  }
  char buf[100];
  std::snprintf(buf, sizeof buf, "orders in [%.4f, %.4f]", lo, hi);
  return {ok, buf};
}

std::string RunCli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"anchorcheck"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  anchorcheck::cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

Outcome Determinism() {
  const std::vector<std::string> args{"certify", "--max-order", "4", "--format", "json"};
  const std::string first = RunCli(args);
  const std::string second = RunCli(args);
  std::ifstream in(std::string(ANCHORCHECK_GOLDEN_DIR) + "/certify_m4.json", std::ios::binary);
  std::stringstream golden;
  golden << in.rdbuf();
  const bool same = first == second;
  const bool matches = first == golden.str();
  return {same && matches && !first.empty(),
          std::string("two runs ") + (same ? "identical" : "differ") + ", golden " +
              (matches ? "matches" : "differs")};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "first iterate of n3 exact", 1, FirstIterate},
      {2, "Laplacian of position equals -2Hn", 1, LaplacePosition},
      {3, "Laplacian of Gauss map identity", 1, LaplaceGauss},
      {4, "second iterate adjudication", 60, SecondIterateAdjudication},
      {5, "infinite-type certificate at M = 8", 300, CertificateAtEight},
      {6, "rank of nine iterates", 60, RankOfNine},
      {7, "lambda comparison table k <= 6", 60, LambdaTable},
      {8, "annihilator positive controls", 10, PositiveControls},
      {9, "finite-difference convergence order", 60, FdConvergence},
      {10, "certify report determinism and golden file", 60, Determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.pass && secs < c.budget_seconds;
    if (!pass) ++failed;
    std::printf("%s  [%d] %s: %s (%.3f s, budget %.0f s)\n", pass ? "PASS" : "FAIL", c.id,
                c.name, out.detail.c_str(), secs, c.budget_seconds);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
