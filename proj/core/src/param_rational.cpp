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

#include "anchorcheck/exactnum/param_rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace anchorcheck::exactnum {
namespace {

void MonomialFactors(Monomial m, std::vector<std::string>& out) {
  if (m.deg_a == 1) out.emplace_back("a");
  if (m.deg_a > 1) out.push_back("a^" + std::to_string(m.deg_a));
  if (m.deg_r == 1) out.emplace_back("r");
  if (m.deg_r > 1) out.push_back("r^" + std::to_string(m.deg_r));
}

std::string Join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += '*';
    s += p;
  }
  return s;
}

}  // namespace

ParamRational::ParamRational(ParamPoly p) : num_(std::move(p)), den_(1) {
  Canonicalize();
}

ParamRational::ParamRational(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  Canonicalize();
}

void ParamRational::Canonicalize() {
  if (den_.is_zero()) throw std::domain_error("ParamRational: zero denominator");
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  mpz_class lcm_den = 1;
  for (const ParamPoly* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              t.coef.value().get_den_mpz_t());
    }
  }
  mpz_class content = 0;
  for (const ParamPoly* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      mpz_class scaled = t.coef.numerator() * (lcm_den / t.coef.denominator());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  Rational factor(mpq_class(lcm_den, content));
  if (den_.leading().coef.sign() < 0) factor = -factor;
  if (!factor.is_one()) {
    num_ = num_.scaled(factor);
    den_ = den_.scaled(factor);
  }
  const Monomial mn = num_.min_degrees();
  const Monomial md = den_.min_degrees();
  const Monomial common{std::min(mn.deg_a, md.deg_a),
                        std::min(mn.deg_r, md.deg_r)};
  if (!common.is_one()) {
    num_ = num_.divided_by_monomial(common);
    den_ = den_.divided_by_monomial(common);
  }
  if (den_.size() > 1) {
    if (auto q = num_.exact_divide(den_)) {
      num_ = std::move(*q);
      den_ = ParamPoly(1);
      Canonicalize();
    }
  }
}

std::optional<Rational> ParamRational::as_constant() const {
  if (num_.is_zero()) return Rational(0);
  if (num_.size() != den_.size()) return std::nullopt;
  if (num_.leading().mono != den_.leading().mono) return std::nullopt;
  Rational k = num_.leading().coef / den_.leading().coef;
  if (num_ == den_.scaled(k)) return k;
  return std::nullopt;
}

std::optional<ParamRational> ParamRational::inverse() const {
  if (is_zero()) return std::nullopt;
  return ParamRational(den_, num_);
}

std::optional<Rational> ParamRational::evaluate(const Rational& a,
                                                const Rational& r) const {
  Rational d = den_.evaluate(a, r);
  if (d.is_zero()) return std::nullopt;
  return num_.evaluate(a, r) / d;
}

ParamRational ParamRational::operator-() const {
  ParamRational out = *this;
  out.num_ = -out.num_;
  return out;
}

ParamRational& ParamRational::operator+=(const ParamRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (den_.is_monomial() && o.den_.is_monomial() &&
             den_.leading().coef.is_integer() &&
             o.den_.leading().coef.is_integer()) {
    const PolyTerm& d1 = den_.leading();
    const PolyTerm& d2 = o.den_.leading();
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), d1.coef.value().get_num_mpz_t(),
            d2.coef.value().get_num_mpz_t());
    const Monomial m{std::max(d1.mono.deg_a, d2.mono.deg_a),
                     std::max(d1.mono.deg_r, d2.mono.deg_r)};
    const Rational lc{mpq_class(l)};
    num_ = num_.times_monomial(lc / d1.coef,
                               {m.deg_a - d1.mono.deg_a, m.deg_r - d1.mono.deg_r}) +
           o.num_.times_monomial(lc / d2.coef,
                                 {m.deg_a - d2.mono.deg_a, m.deg_r - d2.mono.deg_r});
    den_ = ParamPoly::Single(lc, m);
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  Canonicalize();
  return *this;
}

ParamRational& ParamRational::operator-=(const ParamRational& o) {
  return *this += -o;
}

ParamRational& ParamRational::operator*=(const ParamRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ParamRational();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  Canonicalize();
  return *this;
}

ParamRational& ParamRational::operator/=(const ParamRational& o) {
  auto inv = o.inverse();
  if (!inv) throw std::domain_error("ParamRational: division by zero");
  return *this *= *inv;
}

bool operator==(const ParamRational& x, const ParamRational& y) {
  if (x.den_ == y.den_) return x.num_ == y.num_;
  return x.num_ * y.den_ == y.num_ * x.den_;
}

std::string ParamRational::to_string() const {
  if (num_.is_zero()) return "0";
  std::string out;
  std::vector<std::string> num_factors;
  std::vector<std::string> den_factors;
  if (num_.is_monomial() && den_.is_monomial()) {
    const Rational q = num_.leading().coef / den_.leading().coef;
    if (q.sign() < 0) out += '-';
    const mpz_class p = abs(q.numerator());
    std::vector<std::string> mono;
    MonomialFactors(num_.leading().mono, mono);
    if (p != 1 || mono.empty()) num_factors.push_back(p.get_str());
    num_factors.insert(num_factors.end(), mono.begin(), mono.end());
    if (q.denominator() != 1) den_factors.push_back(q.denominator().get_str());
    MonomialFactors(den_.leading().mono, den_factors);
    out += Join(num_factors);
  } else {
    out += num_.is_monomial() ? num_.to_string() : "(" + num_.to_string() + ")";
    if (den_.is_monomial()) {
      const Rational& c = den_.leading().coef;
      if (!c.is_one()) den_factors.push_back(c.to_string());
      MonomialFactors(den_.leading().mono, den_factors);
    } else {
      den_factors.push_back("(" + den_.to_string() + ")");
    }
  }
  if (den_factors.size() == 1) {
    out += "/" + den_factors[0];
  } else if (den_factors.size() > 1) {
    out += "/(" + Join(den_factors) + ")";
  }
  return out;
}

}  // namespace anchorcheck::exactnum
