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

#ifndef ANCHORCHECK_EXACTNUM_PARAM_POLY_HPP_
#define ANCHORCHECK_EXACTNUM_PARAM_POLY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anchorcheck/exactnum/rational.hpp"

namespace anchorcheck::exactnum {

// a^deg_a * r^deg_r. Ordered lexicographically on (deg_a, deg_r).
struct Monomial {
  std::uint32_t deg_a = 0;
  std::uint32_t deg_r = 0;

  bool divides(const Monomial& other) const {
    return deg_a <= other.deg_a && deg_r <= other.deg_r;
  }
  bool is_one() const { return deg_a == 0 && deg_r == 0; }

  friend Monomial operator*(Monomial x, Monomial y) {
    return {x.deg_a + y.deg_a, x.deg_r + y.deg_r};
  }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct PolyTerm {
  Monomial mono;
  Rational coef;
};

// Sparse polynomial in the torus parameters a and r with rational
// coefficients. Terms are kept in strictly descending lex order with no
// zero coefficients, so structural equality is mathematical equality.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(runtime/explicit)
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT(runtime/explicit)

  // Combines like terms and drops zeros; input order is irrelevant.
  static ParamPoly FromTerms(std::vector<PolyTerm> terms);
  static ParamPoly Single(const Rational& c, Monomial m);
  static ParamPoly A() { return Single(1, {1, 0}); }
  static ParamPoly R() { return Single(1, {0, 1}); }

  std::span<const PolyTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Leading term in lex order. Requires !is_zero().
  const PolyTerm& leading() const { return terms_.front(); }
  // Coefficient of 1 (the constant term), zero when absent.
  Rational constant_term() const;
  std::uint32_t degree_a() const;
  // Componentwise minimum exponents; {0,0} for zero.
  Monomial min_degrees() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
  friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);

  ParamPoly scaled(const Rational& c) const;
  ParamPoly times_monomial(const Rational& c, Monomial m) const;
  // Divides every exponent by m; requires m to divide every term.
  ParamPoly divided_by_monomial(Monomial m) const;

  // Quotient iff q divides *this exactly; nullopt otherwise (or q == 0).
  std::optional<ParamPoly> exact_divide(const ParamPoly& q) const;

  Rational evaluate(const Rational& a, const Rational& r) const;

  std::string to_string() const;

  friend bool operator==(const ParamPoly& x, const ParamPoly& y);

 private:
  std::vector<PolyTerm> terms_;
};

}  // namespace anchorcheck::exactnum

#endif  // ANCHORCHECK_EXACTNUM_PARAM_POLY_HPP_
