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

#include "anchorcheck/surface/diff_op.hpp"

namespace anchorcheck::surface {
namespace {

TrigPoly ApplyChannel(const DiffOp& op, const TrigPoly& f, bool phi_mode) {
  if (f.is_zero()) return {};
  const TrigPoly d1 = f.ddt();
  TrigPoly out = op.a_tt * d1.ddt() + op.a_t * d1;
  if (phi_mode) out -= op.a_pp * f;
  return out;
}

}  // namespace

PhiHarmonic DiffOp::apply(const PhiHarmonic& f) const {
  return {ApplyChannel(*this, f.f0, false), ApplyChannel(*this, f.fc, true),
          ApplyChannel(*this, f.fs, true)};
}

PhiVector DiffOp::apply(const PhiVector& f) const {
  return {apply(f[0]), apply(f[1]), apply(f[2])};
}

std::optional<DiffOp> BeltramiFromDiagonalMetric(const TrigPoly& g_tt,
                                                 const TrigPoly& g_pp) {
  auto sqrt_det = (g_tt * g_pp).sqrt();
  auto inv_tt = g_tt.reciprocal();
  auto inv_pp = g_pp.reciprocal();
  if (!sqrt_det || !inv_tt || !inv_pp) return std::nullopt;
  auto inv_sqrt_det = sqrt_det->reciprocal();
  if (!inv_sqrt_det) return std::nullopt;
  DiffOp op;
  op.a_tt = -*inv_tt;
  op.a_t = -(*inv_sqrt_det * (*sqrt_det * *inv_tt).ddt());
  op.a_pp = -*inv_pp;
  return op;
}

}  // namespace anchorcheck::surface
