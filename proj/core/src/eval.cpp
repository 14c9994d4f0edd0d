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

#include "anchorcheck/numeric/eval.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace anchorcheck::numeric {

EvalPoint::EvalPoint(double t, double phi, Rational a, Rational r)
    : t_(t), phi_(phi), a_(std::move(a)), r_(std::move(r)) {
  if (!(r_.sign() > 0 && a_ > r_)) {
    throw std::invalid_argument("EvalPoint: need a > r > 0, got a=" + a_.to_string() +
                                ", r=" + r_.to_string());
  }
}

double EvalPoint::gamma() const { return a_value() + r_value() * std::cos(t_); }

CompiledTrigPoly::CompiledTrigPoly(const TrigPoly& f, const Rational& a,
                                   const Rational& r)
    : pole_(f.pole()), a_(a.to_double()), r_(r.to_double()) {
  for (const auto& t : f.num().terms()) {
    auto v = t.coef.evaluate(a, r);
    if (!v) throw std::domain_error("CompiledTrigPoly: coefficient undefined at (a, r)");
    terms_.push_back({t.sin_deg, t.cos_deg, v->to_double()});
  }
}

double CompiledTrigPoly::operator()(double t) const {
  const double s = std::sin(t);
  const double c = std::cos(t);
  double sum = 0.0;
  for (const auto& term : terms_) {
    double v = term.coef;
    if (term.sin_deg == 1) v *= s;
    for (unsigned j = 0; j < term.cos_deg; ++j) v *= c;
    sum += v;
  }
  const double gamma = a_ + r_ * c;
  for (unsigned k = 0; k < pole_; ++k) sum /= gamma;
  return sum;
}

double Eval(const TrigPoly& f, const EvalPoint& p) {
  return CompiledTrigPoly(f, p.a(), p.r())(p.t());
}

double Eval(const PhiHarmonic& f, const EvalPoint& p) {
  return Eval(f.f0, p) + Eval(f.fc, p) * std::cos(p.phi()) +
         Eval(f.fs, p) * std::sin(p.phi());
}

}  // namespace anchorcheck::numeric
