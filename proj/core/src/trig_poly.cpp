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

#include "anchorcheck/trigring/trig_poly.hpp"

#include <algorithm>
#include <utility>

namespace anchorcheck::trigring {
namespace {

TrigNum TimesGammaPower(TrigNum n, unsigned k) {
  for (unsigned i = 0; i < k; ++i) n = n.times_gamma();
  return n;
}

std::optional<exactnum::Rational> RationalSqrt(const exactnum::Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  const mpz_class n = q.numerator();
  const mpz_class d = q.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  return exactnum::Rational(mpq_class(mpz_class(sqrt(n)), mpz_class(sqrt(d))));
}

// sqrt of a ParamRational whose numerator and denominator are monomials
// with even exponents and perfect-square coefficients.
std::optional<ParamRational> MonomialSqrt(const ParamRational& x) {
  if (x.is_zero()) return ParamRational();
  if (!x.num().is_monomial() || !x.den().is_monomial()) return std::nullopt;
  auto half = [](const exactnum::PolyTerm& t) -> std::optional<exactnum::ParamPoly> {
    if (t.mono.deg_a % 2 || t.mono.deg_r % 2) return std::nullopt;
    auto root = RationalSqrt(t.coef);
    if (!root) return std::nullopt;
    return exactnum::ParamPoly::Single(*root, {t.mono.deg_a / 2, t.mono.deg_r / 2});
  };
  auto n = half(x.num().leading());
  auto d = half(x.den().leading());
  if (!n || !d) return std::nullopt;
  return ParamRational(std::move(*n), std::move(*d));
}

}  // namespace

TrigNum GammaPower(unsigned k) { return TimesGammaPower(TrigNum::Constant(1), k); }

TrigPoly::TrigPoly(TrigNum num, unsigned pole)
    : num_(std::move(num)), pole_(pole) {
  Reduce();
}

void TrigPoly::Reduce() {
  if (num_.is_zero()) {
    pole_ = 0;
    return;
  }
  while (pole_ > 0) {
    auto q = num_.divide_gamma();
    if (!q) break;
    num_ = std::move(*q);
    --pole_;
  }
}

TrigPoly TrigPoly::Normalize(std::span<const RawTerm> raw) {
  unsigned top = 0;
  for (const auto& t : raw) {
    if (!t.coef.is_zero()) top = std::max(top, t.pole);
  }
  TrigNum acc;
  for (const auto& t : raw) {
    if (t.coef.is_zero()) continue;
    acc += TimesGammaPower(TrigNum::Term(t.sin_deg, t.cos_deg, t.coef),
                           top - t.pole);
  }
  return TrigPoly(std::move(acc), top);
}

std::optional<ParamRational> TrigPoly::as_constant() const {
  if (pole_ != 0 || !num_.is_constant()) return std::nullopt;
  return num_.coefficient(0, 0);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const unsigned top = std::max(pole_, o.pole_);
  TrigNum sum = TimesGammaPower(num_, top - pole_);
  sum += TimesGammaPower(o.num_, top - o.pole_);
  num_ = std::move(sum);
  pole_ = top;
  Reduce();
  return *this;
}

TrigPoly operator*(const TrigPoly& x, const TrigPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return TrigPoly(x.num_ * y.num_, x.pole_ + y.pole_);
}

TrigPoly TrigPoly::ddt() const {
  // (N / g^p)' = (g N' + p r s N) / g^(p+1)
  if (pole_ == 0) return TrigPoly(num_.derivative(), 0);
  TrigNum top = num_.derivative().times_gamma();
  top += (TrigNum::Sin() * num_)
             .scaled(ParamRational::R() * ParamRational(static_cast<long>(pole_)));
  return TrigPoly(std::move(top), pole_ + 1);
}

std::optional<TrigPoly> TrigPoly::reciprocal() const {
  if (is_zero()) return std::nullopt;
  TrigNum n = num_;
  unsigned m = 0;
  while (!n.is_constant()) {
    auto q = n.divide_gamma();
    if (!q) return std::nullopt;
    n = std::move(*q);
    ++m;
  }
  const ParamRational inv = *n.coefficient(0, 0).inverse();
  // f = k g^(m - pole)
  if (pole_ >= m) return TrigPoly(GammaPower(pole_ - m).scaled(inv), 0);
  return TrigPoly(TrigNum::Constant(inv), m - pole_);
}

std::optional<TrigPoly> TrigPoly::sqrt() const {
  if (is_zero()) return TrigPoly();
  TrigNum n = num_;
  unsigned m = 0;
  while (!n.is_constant()) {
    auto q = n.divide_gamma();
    if (!q) return std::nullopt;
    n = std::move(*q);
    ++m;
  }
  if (m % 2 || pole_ % 2) return std::nullopt;
  auto k = MonomialSqrt(n.coefficient(0, 0));
  if (!k) return std::nullopt;
  if (pole_ == 0) return TrigPoly(GammaPower(m / 2).scaled(*k), 0);
  return TrigPoly(TrigNum::Constant(*k), pole_ / 2);
}

}  // namespace anchorcheck::trigring
