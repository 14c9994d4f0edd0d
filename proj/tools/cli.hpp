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

#ifndef ANCHORCHECK_TOOLS_CLI_HPP_
#define ANCHORCHECK_TOOLS_CLI_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "anchorcheck/finitetype/certificate.hpp"
#include "anchorcheck/surface/anchor_ring.hpp"
#include "report.hpp"

namespace anchorcheck::cli {

using finitetype::IterationTrace;
using surface::SurfaceContext;
using trigring::Instantiation;
using trigring::PhiHarmonic;
using trigring::TrigPoly;

inline constexpr const char* kCeilingEnv = "ANCHORCHECK_TERM_CEILING";

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
};

struct RunConfig {
  std::string subcommand;
  unsigned order = 1;
  unsigned max_order = 8;
  std::string target = "n3";
  // nullopt is the symbolic (parameter-uniform) mode.
  std::optional<Instantiation> params;
  Format format = Format::kText;
  std::string output;
  std::size_t term_ceiling = finitetype::kDefaultTermCeiling;
  bool parallel = false;
  // Falsification control for verify: "H" or "K" shifts that curvature by 1.
  std::string perturb;
};

nlohmann::json ConfigJson(const RunConfig& config);

// "a=2,r=1" in either order; rationals allowed. Throws
// std::invalid_argument on syntax errors or unless a > r > 0.
Instantiation ParseParams(std::string_view text);

// n1..n3 are the Gauss map coordinates, x1..x3 the position coordinates.
// Throws std::invalid_argument for any other name.
PhiHarmonic TargetField(const SurfaceContext& ctx, std::string_view target);

// The closed form of L^k n3 as published, for the orders printed in full
// (k = 1, 2); nullopt otherwise.
std::optional<TrigPoly> PublishedIterate(unsigned k);

// Published candidate for adjudication at order k: the printed closed form
// when there is one, else the engine iterate with its leading coefficient
// replaced by the product formula. `trace` must reach order k of n3.
TrigPoly PublishedCandidate(unsigned k, const IterationTrace& trace);

// Top-level verdict sentence for a certificate.
std::string VerdictSentence(const finitetype::Certificate& cert,
                            std::string_view target);

// Parses argv (argv[0] is the program name), runs the subcommand and
// writes the report to `out` or the --output file. Diagnostics go to `err`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace anchorcheck::cli

#endif  // ANCHORCHECK_TOOLS_CLI_HPP_
