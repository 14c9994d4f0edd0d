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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "anchorcheck/finitetype/iteration.hpp"
#include "anchorcheck/numeric/eval.hpp"
#include "anchorcheck/numeric/fd_oracle.hpp"
#include "anchorcheck/surface/anchor_ring.hpp"
#include "test_util.hpp"

namespace anchorcheck::numeric {
namespace {

using exactnum::ParamRational;
using std::numbers::pi;
using testing::Gen;
using testing::kTrials;

// Independent reference for the second iterate at (pi/4, phi, 2, 1):
// arbitrary-precision computer-algebra evaluation of the closed form.
constexpr double kSecondIterateAtQuarterPi = -1.56975628825421;

const surface::SurfaceContext& Ring() {
  static const surface::SurfaceContext ctx = surface::BuildAnchorRing();
  return ctx;
}

const finitetype::IterationTrace& GaussTrace() {
  static const auto trace = finitetype::Iterate(Ring().laplacian, Ring().gauss[2], 3);
  return trace;
}

Field FieldOf(const PhiHarmonic& f, const Rational& a, const Rational& r) {
  return [f, a, r](double t, double phi) { return Eval(f, EvalPoint(t, phi, a, r)); };
}

TEST(EvalPointTest, Validation) {
  EXPECT_THROW(EvalPoint(0, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(EvalPoint(0, 0, 1, 2), std::invalid_argument);
  EXPECT_THROW(EvalPoint(0, 0, 2, 0), std::invalid_argument);
  EXPECT_DOUBLE_EQ(EvalPoint(0, 0, 2, 1).gamma(), 3);
  EXPECT_DOUBLE_EQ(EvalPoint(pi, 0, 2, 1).gamma(), 1);
}

TEST(EvalTest, Examples) {
  EXPECT_DOUBLE_EQ(Eval(TrigPoly::Gamma(), EvalPoint(0, 0, 2, 1)), 3);
  // First iterate at t = pi/2: -1/r^2 with the gamma term vanishing.
  EXPECT_NEAR(Eval(GaussTrace().channel_value(1), EvalPoint(pi / 2, 0, 2, 1)), -1, 1e-15);
  EXPECT_NEAR(Eval(GaussTrace().channel_value(2), EvalPoint(pi / 4, 0, 2, 1)),
              kSecondIterateAtQuarterPi, 1e-12);
  const PhiHarmonic n1 = Ring().gauss[0];
  EXPECT_NEAR(Eval(n1, EvalPoint(0.3, 0.7, 2, 1)), -std::cos(0.3) * std::cos(0.7), 1e-15);
}

TEST(EvalTest, CompiledMatchesDirectEvaluation) {
  Gen gen(41);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig();
    const auto [a, r] = gen.Params();
    const double t = gen.Angle();
    const double direct = testing::Value(f, t, a, r);
    EXPECT_NEAR(CompiledTrigPoly(f, a, r)(t), direct, 1e-12 * (1 + std::abs(direct)));
    EXPECT_NEAR(Eval(f, EvalPoint(t, 0, a, r)), direct, 1e-12 * (1 + std::abs(direct)));
  }
}

TEST(FdLaplacianTest, MatchesSymbolicIterates) {
  for (const auto& p : DocumentedPoints()) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto& trace = GaussTrace();
      const Field fn = FieldOf(trace.entries[k - 1].value, p.a(), p.r());
      const double exact = Eval(trace.entries[k].value, p);
      EXPECT_NEAR(FdLaplacian(fn, p, 1e-3), exact, 1e-4);
      EXPECT_NEAR(FdLaplacianRichardson(fn, p, 1e-3), exact, 1e-7);
    }
  }
}

TEST(FdLaplacianTest, PhiDependentTargets) {
  Gen gen(42);
  const auto& op = Ring().laplacian;
  for (int i = 0; i < 20; ++i) {
    const auto [a, r] = gen.Params();
    const EvalPoint p(gen.Angle(), gen.Angle(), a, r);
    for (const auto& f : {Ring().gauss[0], Ring().gauss[1], Ring().position[0]}) {
      const double exact = Eval(op.apply(f), p);
      EXPECT_NEAR(FdLaplacianRichardson(FieldOf(f, a, r), p, 1e-3), exact,
                  1e-6 * (1 + std::abs(exact)));
    }
  }
}

TEST(FdLaplacianTest, RejectsBadStep) {
  const Field zero = [](double, double) { return 0.0; };
  EXPECT_THROW(FdLaplacian(zero, EvalPoint(1, 0, 2, 1), 0), std::invalid_argument);
  EXPECT_THROW(FdLaplacian(zero, EvalPoint(1, 0, 2, 1), -1e-3), std::invalid_argument);
}

TEST(FdLaplacianTest, DocumentedPoints) {
  const auto points = DocumentedPoints();
  ASSERT_EQ(points.size(), 5u);
  const double ts[] = {pi / 5, pi / 4, 2 * pi / 5, 3 * pi / 5, 7 * pi / 10};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_DOUBLE_EQ(points[i].t(), ts[i]);
    EXPECT_EQ(points[i].phi(), 0);
    EXPECT_EQ(points[i].a(), Rational(2));
    EXPECT_EQ(points[i].r(), Rational(1));
  }
}

TEST(ConvergenceTest, SecondOrder) {
  const auto& trace = GaussTrace();
  for (const auto& p : DocumentedPoints()) {
    for (unsigned k = 1; k <= 2; ++k) {
      const Field fn = FieldOf(trace.entries[k - 1].value, p.a(), p.r());
      const Convergence c = ConvergenceOrder(fn, Eval(trace.entries[k].value, p), p, 1e-2);
      ASSERT_TRUE(c.order.has_value());
      EXPECT_GE(*c.order, 1.7);
      EXPECT_LE(*c.order, 2.3);
      EXPECT_LT(c.error_half, c.error_h);
    }
  }
}

TEST(ConvergenceTest, SuiteRows) {
  const auto points = DocumentedPoints();
  const auto& trace = GaussTrace();
  const FdReport rep =
      ConvergenceSuite("n3", trace.entries[0].value, trace.entries[1].value, points, 1e-2);
  EXPECT_EQ(rep.label, "n3");
  EXPECT_EQ(rep.steps, (std::vector<double>{1e-2, 5e-3}));
  ASSERT_EQ(rep.samples.size(), 5u);
  for (const auto& s : rep.samples) {
    EXPECT_NEAR(s.abs_error, std::abs(s.symbolic - s.oracle), 1e-15);
    EXPECT_LT(s.abs_error, 1e-4);
  }
}

TEST(AdjudicateTest, PicksEngineOverPublishedCoefficient) {
  const auto& trace = GaussTrace();
  const TrigPoly engine = trace.channel_value(2);
  // Same expression with the sin^3 cos / (r gamma^3) coefficient at -3.
  const TrigPoly tmpl = (TrigPoly::Sin() * TrigPoly::Sin() * TrigPoly::Sin() *
                         TrigPoly::Cos() * TrigPoly::InverseGamma(3))
                            .scaled(*ParamRational::R().inverse());
  const TrigPoly published = engine - tmpl.scaled(4);
  const auto points = DocumentedPoints();
  const std::vector<Candidate> candidates{{"engine", engine}, {"published", published}};
  const Adjudication adj = Adjudicate(trace.channel_value(1), candidates, points);
  EXPECT_TRUE(adj.conclusive);
  EXPECT_EQ(adj.winner, "engine");
  EXPECT_LT(adj.max_deviation[0], kAdjudicationTolerance);
  EXPECT_GT(adj.max_deviation[1], 0.1);
  ASSERT_EQ(adj.oracle.size(), 5u);
  EXPECT_NEAR(adj.oracle[1], kSecondIterateAtQuarterPi, 1e-5);

  // Candidate order does not change the outcome.
  const std::vector<Candidate> swapped{{"published", published}, {"engine", engine}};
  EXPECT_EQ(Adjudicate(trace.channel_value(1), swapped, points).winner, "engine");
}

TEST(AdjudicateTest, TiesGoToFirstAndMissesAreInconclusive) {
  const auto& trace = GaussTrace();
  const auto points = DocumentedPoints();
  const TrigPoly exact = trace.channel_value(1);
  const std::vector<Candidate> tie{{"first", exact}, {"second", exact}};
  EXPECT_EQ(Adjudicate(trace.channel_value(0), tie, points).winner, "first");
  const std::vector<Candidate> wrong{{"zero", TrigPoly()}, {"one", TrigPoly(1)}};
  const Adjudication adj = Adjudicate(trace.channel_value(0), wrong, points);
  EXPECT_FALSE(adj.conclusive);
  EXPECT_EQ(adj.winner, kInconclusive);
}

TEST(AdjudicateTest, RejectsDegeneratePoints) {
  const auto& trace = GaussTrace();
  const std::vector<Candidate> one{{"engine", trace.channel_value(1)}};
  auto points = DocumentedPoints();
  points.pop_back();
  EXPECT_THROW(Adjudicate(trace.channel_value(0), one, points), std::invalid_argument);
  points.emplace_back(pi / 2, 0, 2, 1);
  EXPECT_THROW(Adjudicate(trace.channel_value(0), one, points), std::invalid_argument);
}

}  // namespace
}  // namespace anchorcheck::numeric
