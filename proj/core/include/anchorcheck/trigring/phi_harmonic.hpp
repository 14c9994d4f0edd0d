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

#ifndef ANCHORCHECK_TRIGRING_PHI_HARMONIC_HPP_
#define ANCHORCHECK_TRIGRING_PHI_HARMONIC_HPP_

#include <array>
#include <cstddef>

#include "anchorcheck/trigring/trig_poly.hpp"

namespace anchorcheck::trigring {

// f0(t) + fc(t) cos(phi) + fs(t) sin(phi).
struct PhiHarmonic {
  TrigPoly f0;
  TrigPoly fc;
  TrigPoly fs;

  static PhiHarmonic Constant(const TrigPoly& f) { return {f, {}, {}}; }
  static PhiHarmonic CosPhi(const TrigPoly& f) { return {{}, f, {}}; }
  static PhiHarmonic SinPhi(const TrigPoly& f) { return {{}, {}, f}; }

  bool is_zero() const { return f0.is_zero() && fc.is_zero() && fs.is_zero(); }
  // Largest pole over the three channels.
  unsigned pole() const;
  std::size_t term_count() const;

  PhiHarmonic operator-() const { return {-f0, -fc, -fs}; }
  PhiHarmonic& operator+=(const PhiHarmonic& o);
  PhiHarmonic& operator-=(const PhiHarmonic& o);
  friend PhiHarmonic operator+(PhiHarmonic x, const PhiHarmonic& y) { return x += y; }
  friend PhiHarmonic operator-(PhiHarmonic x, const PhiHarmonic& y) { return x -= y; }
  // Multiplication by a function of t alone.
  friend PhiHarmonic operator*(const TrigPoly& g, const PhiHarmonic& f) {
    return {g * f.f0, g * f.fc, g * f.fs};
  }
  PhiHarmonic scaled(const ParamRational& c) const {
    return {f0.scaled(c), fc.scaled(c), fs.scaled(c)};
  }

  friend bool operator==(const PhiHarmonic&, const PhiHarmonic&) = default;
};

using PhiVector = std::array<PhiHarmonic, 3>;

}  // namespace anchorcheck::trigring

#endif  // ANCHORCHECK_TRIGRING_PHI_HARMONIC_HPP_
