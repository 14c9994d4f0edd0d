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

#ifndef ANCHORCHECK_SURFACE_DIFF_OP_HPP_
#define ANCHORCHECK_SURFACE_DIFF_OP_HPP_

#include <optional>

#include "anchorcheck/trigring/phi_harmonic.hpp"
#include "anchorcheck/trigring/trig_poly.hpp"

namespace anchorcheck::surface {

using trigring::PhiHarmonic;
using trigring::PhiVector;
using trigring::TrigPoly;

// L = a_tt d^2/dt^2 + a_t d/dt + a_pp d^2/dphi^2 with t-only coefficients.
struct DiffOp {
  TrigPoly a_tt;
  TrigPoly a_t;
  TrigPoly a_pp;

  // On f0 + fc cos(phi) + fs sin(phi): d^2/dphi^2 sends cos(phi) to
  // -cos(phi), so the fc and fs channels pick up -a_pp times themselves.
  PhiHarmonic apply(const PhiHarmonic& f) const;
  PhiVector apply(const PhiVector& f) const;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;
};

// Laplace-Beltrami operator -(1/sqrt g) d_j (sqrt g g^ij d_i) for a
// diagonal, phi-independent metric. nullopt when sqrt(g_tt g_pp) or the
// inverse metric falls outside the function algebra.
std::optional<DiffOp> BeltramiFromDiagonalMetric(const TrigPoly& g_tt,
                                                 const TrigPoly& g_pp);

}  // namespace anchorcheck::surface

#endif  // ANCHORCHECK_SURFACE_DIFF_OP_HPP_
