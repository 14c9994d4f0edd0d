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

#ifndef ANCHORCHECK_TRIGRING_TRIG_NUM_HPP_
#define ANCHORCHECK_TRIGRING_TRIG_NUM_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "anchorcheck/exactnum/param_rational.hpp"

namespace anchorcheck::trigring {

using exactnum::ParamRational;
using exactnum::Rational;

struct TrigTerm {
  unsigned sin_deg = 0;
  unsigned cos_deg = 0;
  ParamRational coef;
};

// Polynomial in s = sin t and c = cos t over Q(a, r), reduced modulo
// s^2 = 1 - c^2. Stored as E(c) + s * O(c) with dense coefficient vectors
// indexed by cos-degree and trailing zeros trimmed.
class TrigNum {
 public:
  TrigNum() = default;

  static TrigNum Constant(const ParamRational& c);
  // c * s^sin_deg * c^cos_deg, with even powers of s rewritten.
  static TrigNum Term(unsigned sin_deg, unsigned cos_deg, const ParamRational& c);
  static TrigNum Sin() { return Term(1, 0, 1); }
  static TrigNum Cos() { return Term(0, 1, 1); }
  // gamma = a + r cos t
  static TrigNum Gamma();

  // part(0) is the sin-free polynomial E, part(1) the sin coefficient O.
  const std::vector<ParamRational>& part(unsigned sin_deg) const {
    return parts_[sin_deg];
  }
  ParamRational coefficient(unsigned sin_deg, unsigned cos_deg) const;
  // Nonzero terms ordered by cos-degree descending, then sin-degree
  // descending.
  std::vector<TrigTerm> terms() const;

  bool is_zero() const { return parts_[0].empty() && parts_[1].empty(); }
  bool is_constant() const {
    return parts_[1].empty() && parts_[0].size() <= 1;
  }
  // Highest cos-degree over both parts; 0 for zero.
  unsigned cos_degree() const;
  std::size_t term_count() const;

  TrigNum operator-() const;
  TrigNum& operator+=(const TrigNum& o);
  TrigNum& operator-=(const TrigNum& o);
  friend TrigNum operator+(TrigNum x, const TrigNum& y) { return x += y; }
  friend TrigNum operator-(TrigNum x, const TrigNum& y) { return x -= y; }
  friend TrigNum operator*(const TrigNum& x, const TrigNum& y);
  TrigNum scaled(const ParamRational& c) const;

  TrigNum times_gamma() const;
  // Exact quotient by gamma, or nullopt when gamma does not divide.
  std::optional<TrigNum> divide_gamma() const;
  // (E(-a/r), O(-a/r)): the values of both parts on the zero set of gamma.
  std::pair<ParamRational, ParamRational> residues() const;
  // d/dt of the polynomial itself (the numerator rule, no gamma).
  TrigNum derivative() const;

  friend bool operator==(const TrigNum& x, const TrigNum& y);

 private:
  void Trim();

  std::array<std::vector<ParamRational>, 2> parts_;
};

}  // namespace anchorcheck::trigring

#endif  // ANCHORCHECK_TRIGRING_TRIG_NUM_HPP_
