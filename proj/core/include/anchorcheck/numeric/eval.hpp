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

#ifndef ANCHORCHECK_NUMERIC_EVAL_HPP_
#define ANCHORCHECK_NUMERIC_EVAL_HPP_

#include <vector>

#include "anchorcheck/exactnum/rational.hpp"
#include "anchorcheck/trigring/phi_harmonic.hpp"

namespace anchorcheck::numeric {

using exactnum::Rational;
using trigring::PhiHarmonic;
using trigring::TrigPoly;

// A point (t, phi) on the torus with parameters a > r > 0.
class EvalPoint {
 public:
  // Throws std::invalid_argument unless a > r > 0.
  EvalPoint(double t, double phi, Rational a, Rational r);

  double t() const { return t_; }
  double phi() const { return phi_; }
  const Rational& a() const { return a_; }
  const Rational& r() const { return r_; }
  double a_value() const { return a_.to_double(); }
  double r_value() const { return r_.to_double(); }
  double gamma() const;

 private:
  double t_;
  double phi_;
  Rational a_;
  Rational r_;
};

// A TrigPoly with its coefficients substituted at fixed (a, r), ready for
// repeated evaluation in t.
class CompiledTrigPoly {
 public:
  CompiledTrigPoly(const TrigPoly& f, const Rational& a, const Rational& r);
  // Sums the terms in TrigNum order, then divides by gamma^pole.
  double operator()(double t) const;

 private:
  struct Term {
    unsigned sin_deg;
    unsigned cos_deg;
    double coef;
  };
  std::vector<Term> terms_;
  unsigned pole_;
  double a_;
  double r_;
};

double Eval(const TrigPoly& f, const EvalPoint& p);
double Eval(const PhiHarmonic& f, const EvalPoint& p);

}  // namespace anchorcheck::numeric

#endif  // ANCHORCHECK_NUMERIC_EVAL_HPP_
