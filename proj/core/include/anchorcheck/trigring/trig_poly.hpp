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

#ifndef ANCHORCHECK_TRIGRING_TRIG_POLY_HPP_
#define ANCHORCHECK_TRIGRING_TRIG_POLY_HPP_

#include <cstddef>
#include <optional>
#include <span>

#include "anchorcheck/trigring/trig_num.hpp"

namespace anchorcheck::trigring {

// One summand c * sin^sin_deg t * cos^cos_deg t / gamma^pole, not yet
// brought to canonical form.
struct RawTerm {
  unsigned sin_deg = 0;
  unsigned cos_deg = 0;
  unsigned pole = 0;
  ParamRational coef;
};

// num / gamma^pole with gamma = a + r cos t, in canonical form: either
// pole == 0 or gamma does not divide num. Zero is (0, pole 0). Structural
// equality of canonical forms is equality of functions on the torus for
// all admissible (a, r).
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(const ParamRational& c)  // NOLINT(runtime/explicit)
      : num_(TrigNum::Constant(c)) {}
  TrigPoly(long c) : TrigPoly(ParamRational(c)) {}  // NOLINT(runtime/explicit)
  TrigPoly(TrigNum num, unsigned pole);

  // Brings every term over the largest pole, reduces sin powers and
  // cancels common gamma factors.
  static TrigPoly Normalize(std::span<const RawTerm> raw);
  static TrigPoly Sin() { return TrigPoly(TrigNum::Sin(), 0); }
  static TrigPoly Cos() { return TrigPoly(TrigNum::Cos(), 0); }
  static TrigPoly Gamma() { return TrigPoly(TrigNum::Gamma(), 0); }
  // gamma^-k
  static TrigPoly InverseGamma(unsigned k = 1) {
    return TrigPoly(TrigNum::Constant(1), k);
  }

  const TrigNum& num() const { return num_; }
  unsigned pole() const { return pole_; }
  bool is_zero() const { return num_.is_zero(); }
  std::size_t term_count() const { return num_.term_count(); }
  // The plain ParamRational value when this has no t-dependence.
  std::optional<ParamRational> as_constant() const;

  TrigPoly operator-() const { return TrigPoly(-num_, pole_); }
  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o) { return *this += -o; }
  friend TrigPoly operator+(TrigPoly x, const TrigPoly& y) { return x += y; }
  friend TrigPoly operator-(TrigPoly x, const TrigPoly& y) { return x -= y; }
  friend TrigPoly operator*(const TrigPoly& x, const TrigPoly& y);
  TrigPoly scaled(const ParamRational& c) const {
    return TrigPoly(num_.scaled(c), pole_);
  }

  // d/dt, using d(gamma)/dt = -r sin t.
  TrigPoly ddt() const;

  // 1/f, defined only when f = k * gamma^m with k in Q(a, r).
  std::optional<TrigPoly> reciprocal() const;
  // Positive square root, defined only when f = k^2 * gamma^(2m) with k a
  // signed monomial in a, r over a perfect-square rational.
  std::optional<TrigPoly> sqrt() const;

  friend bool operator==(const TrigPoly& x, const TrigPoly& y) {
    return x.pole_ == y.pole_ && x.num_ == y.num_;
  }

 private:
  void Reduce();

  TrigNum num_;
  unsigned pole_ = 0;
};

// gamma^k expanded as a polynomial in cos t.
TrigNum GammaPower(unsigned k);

}  // namespace anchorcheck::trigring

#endif  // ANCHORCHECK_TRIGRING_TRIG_POLY_HPP_
