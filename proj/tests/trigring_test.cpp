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
#include <vector>

#include "anchorcheck/trigring/phi_harmonic.hpp"
#include "anchorcheck/trigring/render.hpp"
#include "anchorcheck/trigring/trig_num.hpp"
#include "anchorcheck/trigring/trig_poly.hpp"
#include "test_util.hpp"

namespace anchorcheck::trigring {
namespace {

using exactnum::ParamPoly;
using testing::Gen;
using testing::kTrials;
using testing::Value;

const TrigPoly kS = TrigPoly::Sin();
const TrigPoly kC = TrigPoly::Cos();
const TrigPoly kG = TrigPoly::Gamma();

ParamRational InvR(unsigned k) {
  return ParamRational(ParamPoly(1), ParamPoly::Single(1, {0, k}));
}

TEST(TrigNumTest, PythagoreanReduction) {
  EXPECT_EQ(TrigNum::Term(2, 0, 1), TrigNum::Constant(1) - TrigNum::Term(0, 2, 1));
  EXPECT_EQ(TrigNum::Sin() * TrigNum::Sin() + TrigNum::Cos() * TrigNum::Cos(),
            TrigNum::Constant(1));
  EXPECT_EQ(TrigNum::Term(3, 1, 1).terms().size(), 2u);
  EXPECT_TRUE(TrigNum().is_zero());
}

TEST(TrigNumTest, TermOrderIsCosThenSinDescending) {
  const TrigNum n = TrigNum::Term(1, 1, 1) + TrigNum::Term(0, 3, 2) +
                    TrigNum::Term(1, 3, 1) + TrigNum::Constant(5);
  const auto terms = n.terms();
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0].cos_deg, 3u);
  EXPECT_EQ(terms[0].sin_deg, 1u);
  EXPECT_EQ(terms[1].cos_deg, 3u);
  EXPECT_EQ(terms[1].sin_deg, 0u);
  EXPECT_EQ(terms[3].cos_deg, 0u);
}

TEST(TrigNumTest, DerivativeOfBasis) {
  EXPECT_EQ(TrigNum::Sin().derivative(), TrigNum::Cos());
  EXPECT_EQ(TrigNum::Cos().derivative(), -TrigNum::Sin());
  EXPECT_TRUE(TrigNum::Constant(ParamRational::A()).derivative().is_zero());
}

TEST(TrigNumTest, ResiduesOnGammaZeroSet) {
  // gamma vanishes at cos t = -a/r.
  const auto [e, o] = TrigNum::Gamma().residues();
  EXPECT_TRUE(e.is_zero());
  EXPECT_TRUE(o.is_zero());
  const auto [e2, o2] = TrigNum::Cos().residues();
  EXPECT_EQ(e2, -ParamRational::A() / ParamRational::R());
  EXPECT_TRUE(o2.is_zero());
}

TEST(TrigNumTest, GammaDivision) {
  Gen gen(11);
  for (int i = 0; i < kTrials; ++i) {
    const TrigNum n = gen.Num();
    EXPECT_EQ(*n.times_gamma().divide_gamma(), n);
  }
  EXPECT_FALSE(TrigNum::Sin().divide_gamma().has_value());
}

TEST(TrigPolyTest, CanonicalCancellation) {
  EXPECT_EQ(kG * TrigPoly::InverseGamma(), TrigPoly(1));
  EXPECT_EQ((kG * TrigPoly::InverseGamma(3)).pole(), 2u);
  const TrigPoly f = (kS + kC) * TrigPoly::InverseGamma(2);
  EXPECT_EQ((f * kG * kG), kS + kC);
  EXPECT_EQ((kG - TrigPoly::Cos().scaled(ParamRational::R())), TrigPoly(ParamRational::A()));
}

TEST(TrigPolyTest, NormalizeMatchesArithmetic) {
  const RawTerm raw[] = {{1, 0, 0, InvR(2)}, {1, 1, 1, InvR(1)}, {0, 0, 1, 0}};
  const TrigPoly expected = kS.scaled(InvR(2)) + (kS * kC * TrigPoly::InverseGamma()).scaled(InvR(1));
  EXPECT_EQ(TrigPoly::Normalize(raw), expected);
  EXPECT_TRUE(TrigPoly::Normalize({}).is_zero());
}

TEST(TrigPolyTest, CanonicalFormIsIdempotent) {
  Gen gen(12);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig();
    EXPECT_EQ(TrigPoly(f.num(), f.pole()), f);
  }
}

TEST(TrigPolyTest, NonzeroResidueWhenPolePositive) {
  Gen gen(13);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig() * gen.Trig() + gen.Trig();
    if (f.pole() == 0) continue;
    const auto [e, o] = f.num().residues();
    EXPECT_FALSE(e.is_zero() && o.is_zero());
  }
}

TEST(TrigPolyTest, PoleBounds) {
  Gen gen(14);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig(), g = gen.Trig();
    EXPECT_LE((f * g).pole(), f.pole() + g.pole());
    EXPECT_LE((f + g).pole(), std::max(f.pole(), g.pole()));
    EXPECT_LE(f.ddt().pole(), f.pole() + 1);
  }
}

TEST(TrigPolyTest, RingAxioms) {
  Gen gen(15);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig(2), g = gen.Trig(2), h = gen.Trig(2);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(TrigPolyTest, LeibnizRule) {
  Gen gen(16);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig(2), g = gen.Trig(2);
    EXPECT_EQ((f * g).ddt(), f.ddt() * g + f * g.ddt());
  }
  EXPECT_EQ(kG.ddt(), -kS.scaled(ParamRational::R()));
  EXPECT_EQ(TrigPoly::InverseGamma().ddt(),
            (kS * TrigPoly::InverseGamma(2)).scaled(ParamRational::R()));
}

TEST(TrigPolyTest, MatchesDoubleArithmetic) {
  Gen gen(17);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig(), g = gen.Trig();
    const auto [a, r] = gen.Params();
    const double t = gen.Angle();
    const double fv = Value(f, t, a, r), gv = Value(g, t, a, r);
    const double scale = 1 + std::abs(fv * gv) + std::abs(fv) + std::abs(gv);
    EXPECT_NEAR(Value(f * g, t, a, r), fv * gv, 1e-12 * scale);
    EXPECT_NEAR(Value(f + g, t, a, r), fv + gv, 1e-12 * scale);
  }
}

TEST(TrigPolyTest, DerivativeMatchesCentralDifference) {
  Gen gen(18);
  const double h = 1e-5;
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig();
    const auto [a, r] = gen.Params();
    const double t = gen.Angle();
    const double fd = (Value(f, t + h, a, r) - Value(f, t - h, a, r)) / (2 * h);
    const double exact = Value(f.ddt(), t, a, r);
    EXPECT_NEAR(exact, fd, 1e-6 * (1 + std::abs(exact)));
  }
}

TEST(TrigPolyTest, ReciprocalAndSqrt) {
  const TrigPoly f = (kG * kG * kG).scaled(2);
  EXPECT_EQ(*f.reciprocal() * f, TrigPoly(1));
  EXPECT_FALSE(kS.reciprocal().has_value());
  const TrigPoly g2 = (kG * kG).scaled(ParamRational::R() * ParamRational::R());
  EXPECT_EQ(*g2.sqrt(), kG.scaled(ParamRational::R()));
  EXPECT_FALSE(kG.sqrt().has_value());
  EXPECT_FALSE(TrigPoly(2).sqrt().has_value());
  EXPECT_EQ(*TrigPoly(ParamRational(Rational(9, 4))).sqrt(),
            TrigPoly(ParamRational(Rational(3, 2))));
}

TEST(TrigPolyTest, AsConstant) {
  EXPECT_EQ(*TrigPoly(ParamRational::A()).as_constant(), ParamRational::A());
  EXPECT_FALSE(kS.as_constant().has_value());
  EXPECT_FALSE(TrigPoly::InverseGamma().as_constant().has_value());
}

TEST(RenderTest, FirstIterateOfThirdGaussCoordinate) {
  const TrigPoly f = -kS.scaled(InvR(2)) - (kS * kC * TrigPoly::InverseGamma()).scaled(InvR(1));
  EXPECT_EQ(Render(f), "-1/r^2*s - 1/r*s*c*g^-1");
  EXPECT_EQ(Render(f, Instantiation{2, 1}), "-s - s*c*g^-1");
  EXPECT_EQ(Render(f, Instantiation{3, 2}), "-1/4*s - 1/2*s*c*g^-1");
}

TEST(RenderTest, PlainShapes) {
  EXPECT_EQ(Render(TrigPoly()), "0");
  EXPECT_EQ(Render(TrigPoly(ParamRational::A())), "a");
  EXPECT_EQ(Render(kG), "r*c + a");
  EXPECT_EQ(Render(TrigPoly::InverseGamma(2)), "g^-2");
  EXPECT_EQ(Render(kS * kS), "-c^2 + 1");
}

TEST(RenderTest, Harmonic) {
  EXPECT_EQ(Render(PhiHarmonic::CosPhi(kC.scaled(-1))), "cos(phi)*(-c)");
  const PhiHarmonic f{kS, kG, TrigPoly(2)};
  EXPECT_EQ(Render(f), "s + cos(phi)*(r*c + a) + sin(phi)*(2)");
  EXPECT_EQ(Render(PhiHarmonic{}), "0");
}

TEST(RenderTest, GammaExpansionReconstructs) {
  Gen gen(19);
  for (int i = 0; i < kTrials; ++i) {
    const TrigPoly f = gen.Trig();
    const auto e = ExpandInGamma(f);
    ASSERT_TRUE(e.has_value());
    TrigPoly sum(e->polynomial, 0);
    for (std::size_t k = 0; k < e->digits.size(); ++k) {
      for (const auto& term : e->digits[k].terms()) {
        EXPECT_EQ(term.coef.num().degree_a(), 0u);
        EXPECT_TRUE(term.coef.den_free_of_a());
      }
      sum += TrigPoly(e->digits[k], k + 1);
    }
    EXPECT_EQ(sum, f);
    EXPECT_EQ(Render(f), Render(f));
  }
}

TEST(PhiHarmonicTest, ChannelArithmetic) {
  const PhiHarmonic f = PhiHarmonic::CosPhi(kC) + PhiHarmonic::SinPhi(kS);
  EXPECT_EQ(f.pole(), 0u);
  EXPECT_EQ((TrigPoly::InverseGamma(2) * f).pole(), 2u);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.scaled(2), f + f);
}

}  // namespace
}  // namespace anchorcheck::trigring
