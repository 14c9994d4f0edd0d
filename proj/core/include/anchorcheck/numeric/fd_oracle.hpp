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

#ifndef ANCHORCHECK_NUMERIC_FD_ORACLE_HPP_
#define ANCHORCHECK_NUMERIC_FD_ORACLE_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anchorcheck/numeric/eval.hpp"

namespace anchorcheck::numeric {

using Field = std::function<double(double t, double phi)>;

inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kAdjudicationTolerance = 1e-5;

// Anchor-ring Laplace-Beltrami operator by central differences:
// -(1/gamma^2) f_phiphi + sin t/(r gamma) f_t - (1/r^2) f_tt, with the
// coefficients evaluated in floating point at p. Throws
// std::invalid_argument for h <= 0.
double FdLaplacian(const Field& fn, const EvalPoint& p, double h);

// (4 D(h/2) - D(h)) / 3.
double FdLaplacianRichardson(const Field& fn, const EvalPoint& p, double h);

// t in {pi/5, pi/4, 2pi/5, 3pi/5, 7pi/10}, phi = 0, (a, r) = (2, 1).
std::vector<EvalPoint> DocumentedPoints();

struct Candidate {
  std::string label;
  TrigPoly value;
};

struct Adjudication {
  // Label of the winning candidate, or "inconclusive".
  std::string winner;
  bool conclusive = false;
  // Max |candidate - oracle| over the points, per candidate in input order.
  std::vector<double> max_deviation;
  // Richardson-refined oracle value of L(preimage) at each point.
  std::vector<double> oracle;
};

inline constexpr const char* kInconclusive = "inconclusive";

// Picks the candidate closest (max-norm over points) to the finite-
// difference Laplacian of `preimage`. Ties go to the earlier candidate.
// Throws std::invalid_argument for fewer than 5 points or a point on the
// zero set of sin t cos t.
Adjudication Adjudicate(const TrigPoly& preimage, std::span<const Candidate> candidates,
                        std::span<const EvalPoint> points, double h = kDefaultStep,
                        double tolerance = kAdjudicationTolerance);

struct Convergence {
  double error_h = 0;
  double error_half = 0;
  // log2(error_h / error_half); nullopt when error_half == 0 (exact).
  std::optional<double> order;
};

Convergence ConvergenceOrder(const Field& fn, double exact_value, const EvalPoint& p,
                             double h);

struct FdSample {
  double t = 0;
  double phi = 0;
  double symbolic = 0;
  double oracle = 0;
  double abs_error = 0;
  std::optional<double> order;
};

struct FdReport {
  std::string label;
  std::vector<double> steps;
  std::vector<FdSample> samples;
};

// Compares the symbolic `image` against the stencil applied to
// `preimage` at step h (oracle column) and estimates the order from h, h/2.
FdReport ConvergenceSuite(std::string label, const PhiHarmonic& preimage,
                          const PhiHarmonic& image, std::span<const EvalPoint> points,
                          double h);

}  // namespace anchorcheck::numeric

#endif  // ANCHORCHECK_NUMERIC_FD_ORACLE_HPP_
