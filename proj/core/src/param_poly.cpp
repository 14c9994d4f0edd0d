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

#include "anchorcheck/exactnum/param_poly.hpp"

#include <algorithm>
#include <utility>

namespace anchorcheck::exactnum {
namespace {

bool Descending(const PolyTerm& x, const PolyTerm& y) {
  return x.mono > y.mono;
}

// Merges two descending term lists, with y's coefficients multiplied by
// `sign` (+1 or -1).
std::vector<PolyTerm> Merge(const std::vector<PolyTerm>& x,
                            std::span<const PolyTerm> y, int sign) {
  std::vector<PolyTerm> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].mono > y[j].mono)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].mono > x[i].mono) {
      out.push_back(sign > 0 ? y[j] : PolyTerm{y[j].mono, -y[j].coef});
      ++j;
    } else {
      Rational c = sign > 0 ? x[i].coef + y[j].coef : x[i].coef - y[j].coef;
      if (!c.is_zero()) out.push_back({x[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string MonomialString(Monomial m) {
  std::string s;
  auto factor = [&s](const char* var, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += '^' + std::to_string(e);
  };
  factor("a", m.deg_a);
  factor("r", m.deg_r);
  return s;
}

Rational Power(const Rational& base, std::uint32_t e) {
  mpq_class out = 1;
  for (std::uint32_t k = 0; k < e; ++k) out *= base.value();
  return Rational(std::move(out));
}

}  // namespace

ParamPoly::ParamPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

ParamPoly ParamPoly::FromTerms(std::vector<PolyTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(), Descending);
  ParamPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coef += t.coef;
      if (out.terms_.back().coef.is_zero()) out.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

ParamPoly ParamPoly::Single(const Rational& c, Monomial m) {
  ParamPoly out;
  if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational ParamPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Rational(0);
}

std::uint32_t ParamPoly::degree_a() const {
  return terms_.empty() ? 0 : terms_.front().mono.deg_a;
}

Monomial ParamPoly::min_degrees() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) {
    m.deg_a = std::min(m.deg_a, t.mono.deg_a);
    m.deg_r = std::min(m.deg_r, t.mono.deg_r);
  }
  return m;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = Merge(terms_, o.terms_, +1);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = Merge(terms_, o.terms_, -1);
  return *this;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.is_monomial()) return x.times_monomial(y.terms_[0].coef, y.terms_[0].mono);
  if (x.is_monomial()) return y.times_monomial(x.terms_[0].coef, x.terms_[0].mono);
  std::vector<PolyTerm> prod;
  prod.reserve(x.size() * y.size());
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) {
      prod.push_back({s.mono * t.mono, s.coef * t.coef});
    }
  }
  return ParamPoly::FromTerms(std::move(prod));
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  ParamPoly out = *this;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

ParamPoly ParamPoly::times_monomial(const Rational& c, Monomial m) const {
  if (c.is_zero()) return {};
  ParamPoly out = *this;
  for (auto& t : out.terms_) {
    t.mono = t.mono * m;
    t.coef *= c;
  }
  return out;
}

ParamPoly ParamPoly::divided_by_monomial(Monomial m) const {
  ParamPoly out = *this;
  for (auto& t : out.terms_) {
    t.mono.deg_a -= m.deg_a;
    t.mono.deg_r -= m.deg_r;
  }
  return out;
}

std::optional<ParamPoly> ParamPoly::exact_divide(const ParamPoly& q) const {
  if (q.is_zero()) return std::nullopt;
  const PolyTerm& lead = q.leading();
  if (q.is_monomial()) {
    for (const auto& t : terms_) {
      if (!lead.mono.divides(t.mono)) return std::nullopt;
    }
    return divided_by_monomial(lead.mono).scaled(*lead.coef.inverse());
  }
  const Rational inv_lead = *lead.coef.inverse();
  ParamPoly rem = *this;
  std::vector<PolyTerm> quotient;
  while (!rem.is_zero()) {
    const PolyTerm& top = rem.leading();
    if (!lead.mono.divides(top.mono)) return std::nullopt;
    Monomial m{top.mono.deg_a - lead.mono.deg_a,
               top.mono.deg_r - lead.mono.deg_r};
    Rational c = top.coef * inv_lead;
    rem -= q.times_monomial(c, m);
    quotient.push_back({m, std::move(c)});
  }
  // Quotient terms are produced in strictly descending order.
  ParamPoly out;
  out.terms_ = std::move(quotient);
  return out;
}

Rational ParamPoly::evaluate(const Rational& a, const Rational& r) const {
  Rational sum;
  for (const auto& t : terms_) {
    sum += t.coef * Power(a, t.mono.deg_a) * Power(r, t.mono.deg_r);
  }
  return sum;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coef.sign() < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Rational mag = t.coef.abs();
    const std::string mono = MonomialString(t.mono);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const ParamPoly& x, const ParamPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].mono != y.terms_[i].mono ||
        x.terms_[i].coef != y.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

}  // namespace anchorcheck::exactnum
