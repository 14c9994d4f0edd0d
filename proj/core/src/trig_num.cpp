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

#include "anchorcheck/trigring/trig_num.hpp"

#include <algorithm>

namespace anchorcheck::trigring {
namespace {

using Poly = std::vector<ParamRational>;

void TrimPoly(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void AddInto(Poly& acc, const Poly& p, bool negate = false) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (negate) {
      acc[i] -= p[i];
    } else {
      acc[i] += p[i];
    }
  }
  TrimPoly(acc);
}

Poly Multiply(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += x[i] * y[j];
    }
  }
  TrimPoly(out);
  return out;
}

// p * (1 - c^2)
Poly TimesOneMinusCosSquared(const Poly& p) {
  if (p.empty()) return {};
  Poly out(p.size() + 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + 2] -= p[i];
  }
  TrimPoly(out);
  return out;
}

Poly TimesGamma(const Poly& p, const ParamRational& a, const ParamRational& r) {
  if (p.empty()) return {};
  Poly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    out[i] += a * p[i];
    out[i + 1] += r * p[i];
  }
  TrimPoly(out);
  return out;
}

// Synthetic division by (r c + a), highest degree first.
std::optional<Poly> DivideGamma(const Poly& p, const ParamRational& a,
                                const ParamRational& r) {
  if (p.empty()) return Poly{};
  if (p.size() == 1) return std::nullopt;
  const std::size_t n = p.size() - 1;
  Poly q(n);
  const ParamRational inv_r = *r.inverse();
  q[n - 1] = p[n] * inv_r;
  for (std::size_t i = n - 1; i >= 1; --i) {
    q[i - 1] = (p[i] - a * q[i]) * inv_r;
  }
  if (!(p[0] - a * q[0]).is_zero()) return std::nullopt;
  TrimPoly(q);
  return q;
}

Poly Derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    out[i - 1] = p[i] * ParamRational(static_cast<long>(i));
  }
  TrimPoly(out);
  return out;
}

ParamRational Horner(const Poly& p, const ParamRational& x) {
  ParamRational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

TrigNum TrigNum::Constant(const ParamRational& c) {
  TrigNum out;
  if (!c.is_zero()) out.parts_[0] = {c};
  return out;
}

TrigNum TrigNum::Term(unsigned sin_deg, unsigned cos_deg, const ParamRational& c) {
  TrigNum out;
  if (c.is_zero()) return out;
  Poly p(cos_deg + 1);
  p[cos_deg] = c;
  for (unsigned k = 0; k < sin_deg / 2; ++k) p = TimesOneMinusCosSquared(p);
  out.parts_[sin_deg % 2] = std::move(p);
  return out;
}

TrigNum TrigNum::Gamma() {
  TrigNum out;
  out.parts_[0] = {ParamRational::A(), ParamRational::R()};
  return out;
}

ParamRational TrigNum::coefficient(unsigned sin_deg, unsigned cos_deg) const {
  if (sin_deg > 1) return {};
  const Poly& p = parts_[sin_deg];
  return cos_deg < p.size() ? p[cos_deg] : ParamRational();
}

std::vector<TrigTerm> TrigNum::terms() const {
  std::vector<TrigTerm> out;
  for (std::size_t j = cos_degree() + 1; j-- > 0;) {
    for (unsigned e : {1u, 0u}) {
      const Poly& p = parts_[e];
      if (j < p.size() && !p[j].is_zero()) {
        out.push_back({e, static_cast<unsigned>(j), p[j]});
      }
    }
  }
  return out;
}

unsigned TrigNum::cos_degree() const {
  const std::size_t n = std::max(parts_[0].size(), parts_[1].size());
  return n == 0 ? 0 : static_cast<unsigned>(n - 1);
}

std::size_t TrigNum::term_count() const {
  std::size_t n = 0;
  for (const Poly& p : parts_) {
    for (const auto& c : p) n += c.term_count();
  }
  return n;
}

TrigNum TrigNum::operator-() const {
  TrigNum out = *this;
  for (Poly& p : out.parts_) {
    for (auto& c : p) c = -c;
  }
  return out;
}

TrigNum& TrigNum::operator+=(const TrigNum& o) {
  AddInto(parts_[0], o.parts_[0]);
  AddInto(parts_[1], o.parts_[1]);
  return *this;
}

TrigNum& TrigNum::operator-=(const TrigNum& o) {
  AddInto(parts_[0], o.parts_[0], true);
  AddInto(parts_[1], o.parts_[1], true);
  return *this;
}

TrigNum operator*(const TrigNum& x, const TrigNum& y) {
  // (E1 + s O1)(E2 + s O2) = E1 E2 + (1 - c^2) O1 O2 + s (E1 O2 + O1 E2)
  TrigNum out;
  out.parts_[0] = Multiply(x.parts_[0], y.parts_[0]);
  AddInto(out.parts_[0],
          TimesOneMinusCosSquared(Multiply(x.parts_[1], y.parts_[1])));
  out.parts_[1] = Multiply(x.parts_[0], y.parts_[1]);
  AddInto(out.parts_[1], Multiply(x.parts_[1], y.parts_[0]));
  return out;
}

TrigNum TrigNum::scaled(const ParamRational& c) const {
  if (c.is_zero()) return {};
  TrigNum out = *this;
  for (Poly& p : out.parts_) {
    for (auto& v : p) {
      if (!v.is_zero()) v *= c;
    }
  }
  return out;
}

TrigNum TrigNum::times_gamma() const {
  const ParamRational a = ParamRational::A();
  const ParamRational r = ParamRational::R();
  TrigNum out;
  out.parts_[0] = TimesGamma(parts_[0], a, r);
  out.parts_[1] = TimesGamma(parts_[1], a, r);
  return out;
}

std::optional<TrigNum> TrigNum::divide_gamma() const {
  const ParamRational a = ParamRational::A();
  const ParamRational r = ParamRational::R();
  auto even = DivideGamma(parts_[0], a, r);
  if (!even) return std::nullopt;
  auto odd = DivideGamma(parts_[1], a, r);
  if (!odd) return std::nullopt;
  TrigNum out;
  out.parts_[0] = std::move(*even);
  out.parts_[1] = std::move(*odd);
  return out;
}

std::pair<ParamRational, ParamRational> TrigNum::residues() const {
  const ParamRational root = -ParamRational::A() / ParamRational::R();
  return {Horner(parts_[0], root), Horner(parts_[1], root)};
}

TrigNum TrigNum::derivative() const {
  // d/dt E(c) = -s E'(c);  d/dt s O(c) = c O(c) - (1 - c^2) O'(c)
  TrigNum out;
  const Poly de = Derivative(parts_[0]);
  const Poly dodd = Derivative(parts_[1]);
  Poly c_times_odd;
  if (!parts_[1].empty()) {
    c_times_odd.resize(parts_[1].size() + 1);
    std::copy(parts_[1].begin(), parts_[1].end(), c_times_odd.begin() + 1);
  }
  out.parts_[0] = std::move(c_times_odd);
  AddInto(out.parts_[0], TimesOneMinusCosSquared(dodd), true);
  AddInto(out.parts_[1], de, true);
  return out;
}

void TrigNum::Trim() {
  TrimPoly(parts_[0]);
  TrimPoly(parts_[1]);
}

bool operator==(const TrigNum& x, const TrigNum& y) {
  for (unsigned e : {0u, 1u}) {
    if (x.parts_[e].size() != y.parts_[e].size()) return false;
    for (std::size_t i = 0; i < x.parts_[e].size(); ++i) {
      if (!(x.parts_[e][i] == y.parts_[e][i])) return false;
    }
  }
  return true;
}

}  // namespace anchorcheck::trigring
