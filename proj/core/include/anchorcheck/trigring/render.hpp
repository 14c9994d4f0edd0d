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

#ifndef ANCHORCHECK_TRIGRING_RENDER_HPP_
#define ANCHORCHECK_TRIGRING_RENDER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "anchorcheck/trigring/phi_harmonic.hpp"

namespace anchorcheck::trigring {

// Concrete parameter values substituted at render time.
struct Instantiation {
  Rational a;
  Rational r;
};

// f = polynomial + sum_k digits[k] * gamma^-(k+1), where `polynomial` may
// involve a while every digit is free of a. This is the expansion of the
// numerator in powers of gamma after eliminating a = gamma - r cos t.
struct GammaExpansion {
  TrigNum polynomial;
  std::vector<TrigNum> digits;
};

// nullopt when some coefficient has a in its denominator.
std::optional<GammaExpansion> ExpandInGamma(const TrigPoly& f);

// Expression grammar: s = sin t, c = cos t, g = gamma; one term per
// (gamma power, trig monomial) with the gamma-free group first, then
// g^-1, g^-2, ...; within a group terms follow TrigNum order. Coefficients
// print as p/q with explicit a and r powers, e.g. "-1/r^2*s - 1/r*s*c*g^-1".
std::string Render(const TrigPoly& f,
                   const std::optional<Instantiation>& at = std::nullopt);

// Nonzero channels joined by " + ": the f0 expression as is, then
// "cos(phi)*(...)" and "sin(phi)*(...)".
std::string Render(const PhiHarmonic& f,
                   const std::optional<Instantiation>& at = std::nullopt);

}  // namespace anchorcheck::trigring

#endif  // ANCHORCHECK_TRIGRING_RENDER_HPP_
