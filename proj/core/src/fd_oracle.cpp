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

#include "anchorcheck/numeric/fd_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anchorcheck::numeric {
namespace {

Field FieldOf(const PhiHarmonic& f, const EvalPoint& p) {
  CompiledTrigPoly f0(f.f0, p.a(), p.r());
  CompiledTrigPoly fc(f.fc, p.a(), p.r());
  CompiledTrigPoly fs(f.fs, p.a(), p.r());
  return [f0, fc, fs](double t, double phi) {
    return f0(t) + fc(t) * std::cos(phi) + fs(t) * std::sin(phi);
  };
}

}  // namespace

double FdLaplacian(const Field& fn, const EvalPoint& p, double h) {
  if (!(h > 0)) throw std::invalid_argument("FdLaplacian: step must be positive");
  const double t = p.t();
  const double phi = p.phi();
  const double r = p.r_value();
  const double gamma = p.gamma();
  const double f = fn(t, phi);
  const double f_tt = (fn(t + h, phi) - 2 * f + fn(t - h, phi)) / (h * h);
  const double f_t = (fn(t + h, phi) - fn(t - h, phi)) / (2 * h);
  const double f_pp = (fn(t, phi + h) - 2 * f + fn(t, phi - h)) / (h * h);
  return -f_pp / (gamma * gamma) + std::sin(t) / (r * gamma) * f_t - f_tt / (r * r);
}

double FdLaplacianRichardson(const Field& fn, const EvalPoint& p, double h) {
  return (4 * FdLaplacian(fn, p, h / 2) - FdLaplacian(fn, p, h)) / 3;
}

std::vector<EvalPoint> DocumentedPoints() {
  constexpr double pi = std::numbers::pi;
  std::vector<EvalPoint> out;
  for (double t : {pi / 5, pi / 4, 2 * pi / 5, 3 * pi / 5, 7 * pi / 10}) {
    out.emplace_back(t, 0.0, Rational(2), Rational(1));
  }
  return out;
}

Adjudication Adjudicate(const TrigPoly& preimage, std::span<const Candidate> candidates,
                        std::span<const EvalPoint> points, double h, double tolerance) {
  if (points.size() < 5) throw std::invalid_argument("Adjudicate: need >= 5 points");
  if (candidates.empty()) throw std::invalid_argument("Adjudicate: no candidates");
  for (const auto& p : points) {
    if (std::abs(std::sin(2 * p.t())) < 1e-3) {
      throw std::invalid_argument("Adjudicate: point on the zero set of sin t cos t");
    }
  }
  Adjudication out;
  out.max_deviation.assign(candidates.size(), 0.0);
  const PhiHarmonic pre = PhiHarmonic::Constant(preimage);
  for (const auto& p : points) {
    const double oracle = FdLaplacianRichardson(FieldOf(pre, p), p, h);
    out.oracle.push_back(oracle);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double dev = std::abs(Eval(candidates[i].value, p) - oracle);
      out.max_deviation[i] = std::max(out.max_deviation[i], dev);
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (out.max_deviation[i] < out.max_deviation[best]) best = i;
  }
  out.conclusive = out.max_deviation[best] <= tolerance;
  out.winner = out.conclusive ? candidates[best].label : kInconclusive;
  return out;
}

Convergence ConvergenceOrder(const Field& fn, double exact_value, const EvalPoint& p,
                             double h) {
  Convergence c;
  c.error_h = std::abs(FdLaplacian(fn, p, h) - exact_value);
  c.error_half = std::abs(FdLaplacian(fn, p, h / 2) - exact_value);
  if (!std::isfinite(c.error_h) || !std::isfinite(c.error_half)) {
    throw std::domain_error("ConvergenceOrder: non-finite stencil value");
  }
  if (c.error_half > 0) c.order = std::log2(c.error_h / c.error_half);
  return c;
}

FdReport ConvergenceSuite(std::string label, const PhiHarmonic& preimage,
                          const PhiHarmonic& image, std::span<const EvalPoint> points,
                          double h) {
  FdReport rep;
  rep.label = std::move(label);
  rep.steps = {h, h / 2};
  for (const auto& p : points) {
    const Field fn = FieldOf(preimage, p);
    FdSample s;
    s.t = p.t();
    s.phi = p.phi();
    s.symbolic = Eval(image, p);
    s.oracle = FdLaplacian(fn, p, h);
    s.abs_error = std::abs(s.symbolic - s.oracle);
    s.order = ConvergenceOrder(fn, s.symbolic, p, h).order;
    rep.samples.push_back(s);
  }
  return rep;
}

}  // namespace anchorcheck::numeric
