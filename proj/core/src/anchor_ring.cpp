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

#include "anchorcheck/surface/anchor_ring.hpp"

#include <stdexcept>

namespace anchorcheck::surface {
namespace {

using trigring::ParamRational;
using Vec3 = std::array<TrigPoly, 3>;

// Value and derivatives of a phi-harmonic vector in the plane phi = 0.
Vec3 AtPhiZero(const PhiVector& v) {
  return {v[0].f0 + v[0].fc, v[1].f0 + v[1].fc, v[2].f0 + v[2].fc};
}
Vec3 DPhiAtPhiZero(const PhiVector& v) { return {v[0].fs, v[1].fs, v[2].fs}; }
Vec3 DPhi2AtPhiZero(const PhiVector& v) { return {-v[0].fc, -v[1].fc, -v[2].fc}; }

Vec3 Ddt(const Vec3& v) { return {v[0].ddt(), v[1].ddt(), v[2].ddt()}; }

PhiVector Ddt(const PhiVector& v) {
  PhiVector out;
  for (int i = 0; i < 3; ++i) out[i] = {v[i].f0.ddt(), v[i].fc.ddt(), v[i].fs.ddt()};
  return out;
}

TrigPoly Dot(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

Vec3 Cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
          x[0] * y[1] - x[1] * y[0]};
}

TrigPoly Inverse(const TrigPoly& f, const char* what) {
  auto inv = f.reciprocal();
  if (!inv) throw std::logic_error(std::string("anchor ring: cannot invert ") + what);
  return *inv;
}

bool AllZero(const PhiVector& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

}  // namespace

SurfaceContext BuildAnchorRing() {
  const ParamRational r = ParamRational::R();
  const TrigPoly s = TrigPoly::Sin();
  const TrigPoly c = TrigPoly::Cos();
  const TrigPoly gamma = TrigPoly::Gamma();

  SurfaceContext ctx;
  ctx.position = {PhiHarmonic::CosPhi(gamma), PhiHarmonic::SinPhi(gamma),
                  PhiHarmonic::Constant(s.scaled(r))};
  ctx.gauss = {PhiHarmonic::CosPhi(-c), PhiHarmonic::SinPhi(-c),
               PhiHarmonic::Constant(-s)};

  const Vec3 x_t = Ddt(AtPhiZero(ctx.position));
  const Vec3 x_p = DPhiAtPhiZero(ctx.position);
  const Vec3 x_tt = Ddt(x_t);
  const Vec3 x_tp = Ddt(x_p);
  const Vec3 x_pp = DPhi2AtPhiZero(ctx.position);

  ctx.metric = {Dot(x_t, x_t), Dot(x_t, x_p), Dot(x_p, x_p)};
  const Vec3 cross = Cross(x_t, x_p);
  auto norm = Dot(cross, cross).sqrt();
  if (!norm) throw std::logic_error("anchor ring: |x_t x x_phi| not representable");
  const TrigPoly inv_norm = Inverse(*norm, "|x_t x x_phi|");
  const Vec3 normal{inv_norm * cross[0], inv_norm * cross[1], inv_norm * cross[2]};
  if (!(normal == AtPhiZero(ctx.gauss))) {
    throw std::logic_error("anchor ring: derived normal differs from Gauss map");
  }

  const TrigPoly b_tt = Dot(x_tt, normal);
  const TrigPoly b_tp = Dot(x_tp, normal);
  const TrigPoly b_pp = Dot(x_pp, normal);
  const auto& g = ctx.metric;
  const TrigPoly det_g = g.g_tt * g.g_phiphi - g.g_tphi * g.g_tphi;
  const TrigPoly inv_det = Inverse(det_g, "det g");
  ctx.mean_curvature =
      (b_tt * g.g_phiphi + b_pp * g.g_tt - (b_tp * g.g_tphi).scaled(2)) *
      inv_det.scaled(ParamRational(exactnum::Rational(1, 2)));
  ctx.gauss_curvature = (b_tt * b_pp - b_tp * b_tp) * inv_det;

  ctx.laplacian.a_tt = TrigPoly(-ParamRational(1) / (r * r));
  ctx.laplacian.a_t = (s * TrigPoly::InverseGamma()).scaled(*r.inverse());
  ctx.laplacian.a_pp = -TrigPoly::InverseGamma(2);
  return ctx;
}

PhiVector GradT(const SurfaceContext& ctx, const TrigPoly& f) {
  const TrigPoly coef = Inverse(ctx.metric.g_tt, "g_tt") * f.ddt();
  const PhiVector x_t = Ddt(ctx.position);
  return {coef * x_t[0], coef * x_t[1], coef * x_t[2]};
}

PhiVector LaplacePositionResidual(const SurfaceContext& ctx) {
  PhiVector out = ctx.laplacian.apply(ctx.position);
  const TrigPoly two_h = ctx.mean_curvature.scaled(2);
  for (int i = 0; i < 3; ++i) out[i] += two_h * ctx.gauss[i];
  return out;
}

PhiVector LaplaceGaussResidual(const SurfaceContext& ctx) {
  PhiVector out = ctx.laplacian.apply(ctx.gauss);
  const TrigPoly& h = ctx.mean_curvature;
  const PhiVector grad = GradT(ctx, h.scaled(2));
  const TrigPoly factor = (h * h).scaled(4) - ctx.gauss_curvature.scaled(2);
  for (int i = 0; i < 3; ++i) out[i] -= grad[i] + factor * ctx.gauss[i];
  return out;
}

bool CheckLaplacePosition(const SurfaceContext& ctx) {
  return AllZero(LaplacePositionResidual(ctx));
}

bool CheckLaplaceGauss(const SurfaceContext& ctx) {
  return AllZero(LaplaceGaussResidual(ctx));
}

bool CheckBeltramiDerivation(const SurfaceContext& ctx) {
  if (!ctx.metric.g_tphi.is_zero()) return false;
  auto derived = BeltramiFromDiagonalMetric(ctx.metric.g_tt, ctx.metric.g_phiphi);
  return derived && *derived == ctx.laplacian;
}

}  // namespace anchorcheck::surface
