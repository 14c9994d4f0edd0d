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

#include "anchorcheck/trigring/render.hpp"

#include <map>
#include <utility>

namespace anchorcheck::trigring {
namespace {

using exactnum::Monomial;
using exactnum::ParamPoly;

std::string TrigMonomial(unsigned sin_deg, unsigned cos_deg, unsigned pole) {
  std::string s;
  auto append = [&s](const std::string& f) {
    if (!s.empty()) s += '*';
    s += f;
  };
  if (sin_deg == 1) append("s");
  if (cos_deg == 1) append("c");
  if (cos_deg > 1) append("c^" + std::to_string(cos_deg));
  if (pole > 0) append("g^-" + std::to_string(pole));
  return s;
}

bool PrintsNegative(const ParamRational& c) {
  return c.num().is_monomial() && c.num().leading().coef.sign() < 0;
}

class TermWriter {
 public:
  explicit TermWriter(const std::optional<Instantiation>& at) : at_(at) {}

  void Add(const TrigNum& n, unsigned pole) {
    for (const auto& t : n.terms()) {
      ParamRational c = t.coef;
      if (at_) {
        auto v = c.evaluate(at_->a, at_->r);
        c = v ? ParamRational(*v) : ParamRational();
        if (c.is_zero()) continue;
      }
      const bool neg = PrintsNegative(c);
      if (out_.empty()) {
        if (neg) out_ += '-';
      } else {
        out_ += neg ? " - " : " + ";
      }
      const ParamRational mag = neg ? -c : c;
      const std::string mono = TrigMonomial(t.sin_deg, t.cos_deg, pole);
      const auto one = mag.as_constant();
      if (mono.empty()) {
        out_ += mag.to_string();
      } else if (one && one->is_one()) {
        out_ += mono;
      } else {
        out_ += mag.to_string() + "*" + mono;
      }
    }
  }

  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  const std::optional<Instantiation>& at_;
  std::string out_;
};

// Splits num into sum_i P_i a^i with every P_i free of a.
std::vector<TrigNum> SplitByPowerOfA(const TrigNum& num) {
  std::vector<TrigNum> out;
  for (const auto& t : num.terms()) {
    for (const auto& pt : t.coef.num().terms()) {
      const std::uint32_t i = pt.mono.deg_a;
      if (out.size() <= i) out.resize(i + 1);
      ParamRational piece(ParamPoly::Single(pt.coef, {0, pt.mono.deg_r}),
                          t.coef.den());
      out[i] += TrigNum::Term(t.sin_deg, t.cos_deg, piece);
    }
  }
  return out;
}

}  // namespace

std::optional<GammaExpansion> ExpandInGamma(const TrigPoly& f) {
  for (const auto& t : f.num().terms()) {
    if (!t.coef.den_free_of_a()) return std::nullopt;
  }
  std::vector<TrigNum> coeffs = SplitByPowerOfA(f.num());
  const TrigNum rc = TrigNum::Term(0, 1, ParamRational::R());
  GammaExpansion out;
  // Each pass divides sum_i coeffs[i] a^i by (a + r c) and keeps the
  // remainder as the next digit, lowest gamma power first.
  std::vector<TrigNum> reversed_digits;
  for (unsigned k = 0; k < f.pole(); ++k) {
    if (coeffs.empty()) {
      reversed_digits.emplace_back();
      continue;
    }
    const std::size_t n = coeffs.size() - 1;
    std::vector<TrigNum> q(n);
    if (n > 0) {
      q[n - 1] = coeffs[n];
      for (std::size_t i = n - 1; i >= 1; --i) q[i - 1] = coeffs[i] - rc * q[i];
      reversed_digits.push_back(coeffs[0] - rc * q[0]);
    } else {
      reversed_digits.push_back(coeffs[0]);
    }
    coeffs = std::move(q);
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const ParamRational ai(ParamPoly::Single(1, Monomial{static_cast<std::uint32_t>(i), 0}));
    out.polynomial += coeffs[i].scaled(ai);
  }
  out.digits.assign(reversed_digits.rbegin(), reversed_digits.rend());
  return out;
}

std::string Render(const TrigPoly& f, const std::optional<Instantiation>& at) {
  TermWriter w(at);
  if (auto e = ExpandInGamma(f)) {
    w.Add(e->polynomial, 0);
    for (std::size_t k = 0; k < e->digits.size(); ++k) {
      w.Add(e->digits[k], static_cast<unsigned>(k + 1));
    }
  } else {
    w.Add(f.num(), f.pole());
  }
  return w.str();
}

std::string Render(const PhiHarmonic& f, const std::optional<Instantiation>& at) {
  if (f.fc.is_zero() && f.fs.is_zero()) return Render(f.f0, at);
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (!f.f0.is_zero()) append(Render(f.f0, at));
  if (!f.fc.is_zero()) append("cos(phi)*(" + Render(f.fc, at) + ")");
  if (!f.fs.is_zero()) append("sin(phi)*(" + Render(f.fs, at) + ")");
  return out;
}

}  // namespace anchorcheck::trigring
