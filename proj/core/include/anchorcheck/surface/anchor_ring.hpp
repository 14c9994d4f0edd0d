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

#ifndef ANCHORCHECK_SURFACE_ANCHOR_RING_HPP_
#define ANCHORCHECK_SURFACE_ANCHOR_RING_HPP_

#include <array>

#include "anchorcheck/surface/diff_op.hpp"

namespace anchorcheck::surface {

struct FirstFundamentalForm {
  TrigPoly g_tt;
  TrigPoly g_tphi;
  TrigPoly g_phiphi;
};

// Geometric data of the torus x(t, phi) = (gamma cos phi, gamma sin phi,
// r sin t), gamma = a + r cos t, a > r > 0.
struct SurfaceContext {
  PhiVector position;
  // Unit normal (-cos t cos phi, -cos t sin phi, -sin t), i.e. the
  // normalized x_t x x_phi.
  PhiVector gauss;
  FirstFundamentalForm metric;
  TrigPoly mean_curvature;
  TrigPoly gauss_curvature;
  DiffOp laplacian;
};

// Builds the anchor ring. Metric, mean and Gaussian curvature are derived
// from the parametrization in the meridian plane phi = 0 (the surface is
// rotationally symmetric); the operator is -(1/r^2) d_tt +
// sin t/(r gamma) d_t - (1/gamma^2) d_phiphi. Throws std::logic_error if
// the derived normal disagrees with the stored Gauss map.
SurfaceContext BuildAnchorRing();

// grad f = g^tt f' x_t for f depending on t only.
PhiVector GradT(const SurfaceContext& ctx, const TrigPoly& f);

// Delta x + 2 H n, coordinatewise.
PhiVector LaplacePositionResidual(const SurfaceContext& ctx);
// Delta n - grad(2H) - (4 H^2 - 2 K) n, coordinatewise.
PhiVector LaplaceGaussResidual(const SurfaceContext& ctx);

bool CheckLaplacePosition(const SurfaceContext& ctx);
bool CheckLaplaceGauss(const SurfaceContext& ctx);
// The general divergence-form operator built from ctx.metric equals
// ctx.laplacian exactly.
bool CheckBeltramiDerivation(const SurfaceContext& ctx);

}  // namespace anchorcheck::surface

#endif  // ANCHORCHECK_SURFACE_ANCHOR_RING_HPP_
