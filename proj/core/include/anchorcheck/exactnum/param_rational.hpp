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

#ifndef ANCHORCHECK_EXACTNUM_PARAM_RATIONAL_HPP_
#define ANCHORCHECK_EXACTNUM_PARAM_RATIONAL_HPP_

#include <optional>
#include <string>

#include "anchorcheck/exactnum/param_poly.hpp"
#include "anchorcheck/exactnum/rational.hpp"

namespace anchorcheck::exactnum {

// Element of Q(a, r) stored as num/den.
//
// Reduction is partial: the joint integer content and the common a/r
// monomial factor are cancelled, the denominator's leading coefficient is
// made positive, and a multi-term denominator is divided out when it
// divides the numerator exactly. Whenever the denominator is a monomial
// (the common case) the representation is unique. Equality always goes
// through cross-multiplication.
class ParamRational {
 public:
  ParamRational() : den_(1) {}
  ParamRational(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  ParamRational(long c) : ParamRational(Rational(c)) {}   // NOLINT
  ParamRational(ParamPoly p);                              // NOLINT
  // Throws std::domain_error when den is zero.
  ParamRational(ParamPoly num, ParamPoly den);

  static ParamRational A() { return ParamRational(ParamPoly::A()); }
  static ParamRational R() { return ParamRational(ParamPoly::R()); }

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // The value as a plain rational when it does not depend on a or r.
  std::optional<Rational> as_constant() const;
  bool has_monomial_den() const { return den_.is_monomial(); }
  // True when no a appears in the denominator.
  bool den_free_of_a() const { return den_.degree_a() == 0; }

  std::optional<ParamRational> inverse() const;
  // nullopt when the denominator vanishes at (a, r).
  std::optional<Rational> evaluate(const Rational& a, const Rational& r) const;
  // Total stored terms (numerator + denominator), used for size guards.
  std::size_t term_count() const { return num_.size() + den_.size(); }

  ParamRational operator-() const;
  ParamRational& operator+=(const ParamRational& o);
  ParamRational& operator-=(const ParamRational& o);
  ParamRational& operator*=(const ParamRational& o);
  // Throws std::domain_error on division by zero.
  ParamRational& operator/=(const ParamRational& o);

  friend ParamRational operator+(ParamRational x, const ParamRational& y) {
    return x += y;
  }
  friend ParamRational operator-(ParamRational x, const ParamRational& y) {
    return x -= y;
  }
  friend ParamRational operator*(ParamRational x, const ParamRational& y) {
    return x *= y;
  }
  friend ParamRational operator/(ParamRational x, const ParamRational& y) {
    return x /= y;
  }
  friend bool operator==(const ParamRational& x, const ParamRational& y);

  std::string to_string() const;

 private:
  void Canonicalize();

  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace anchorcheck::exactnum

#endif  // ANCHORCHECK_EXACTNUM_PARAM_RATIONAL_HPP_
