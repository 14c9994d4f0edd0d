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

#ifndef ANCHORCHECK_FINITETYPE_ITERATION_HPP_
#define ANCHORCHECK_FINITETYPE_ITERATION_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anchorcheck/exactnum/param_matrix.hpp"
#include "anchorcheck/surface/diff_op.hpp"
#include "anchorcheck/trigring/render.hpp"

namespace anchorcheck::finitetype {

using exactnum::ParamMatrix;
using exactnum::ParamRational;
using exactnum::Rational;
using surface::DiffOp;
using trigring::Instantiation;
using trigring::PhiHarmonic;
using trigring::TrigPoly;

inline constexpr std::size_t kDefaultTermCeiling = 200000;

enum class Channel { kConstant, kCosPhi, kSinPhi };

struct TraceEntry {
  unsigned order = 0;
  PhiHarmonic value;
  // Pole order of the trace's channel.
  unsigned pole = 0;
  std::optional<Rational> leading;
};

// entries[k] holds L^k f exactly, entries[0] being f itself.
struct IterationTrace {
  std::string label;
  Channel channel = Channel::kConstant;
  std::vector<TraceEntry> entries;

  const TrigPoly& channel_value(unsigned k) const;
};

// Thrown when an iterate's stored size passes the term ceiling.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(IterationTrace partial, unsigned order, std::size_t terms,
                        std::size_t ceiling);

  const IterationTrace& partial() const { return partial_; }
  unsigned order() const { return order_; }
  std::size_t terms() const { return terms_; }

 private:
  IterationTrace partial_;
  unsigned order_;
  std::size_t terms_;
};

// First nonzero channel of f (f0, then cos, then sin); kConstant for zero.
Channel PrimaryChannel(const PhiHarmonic& f);
const TrigPoly& ChannelOf(const PhiHarmonic& f, Channel ch);

// Computes L f, L^2 f, ..., L^max_order f. Throws std::invalid_argument
// for max_order == 0 and ResourceLimitExceeded past the ceiling.
IterationTrace Iterate(const DiffOp& op, const PhiHarmonic& f, unsigned max_order,
                       std::string label = {},
                       std::size_t term_ceiling = kDefaultTermCeiling);

// Columns are the numerator coefficient vectors of entries first..last,
// each channel brought over its largest gamma power among those entries.
// All-zero rows are dropped.
ParamMatrix CoefficientMatrix(const IterationTrace& trace, unsigned first,
                              unsigned last);

// Exact rank of entries 0..count-1 over Q(a, r), or over Q at the given
// parameter values.
std::size_t IterateRank(const IterationTrace& trace, unsigned count,
                        const std::optional<Instantiation>& at = std::nullopt);

// Monic relation L^m f + c_1 L^(m-1) f + ... + c_m f = 0; returns
// (c_1, ..., c_m) when one exists.
std::optional<std::vector<ParamRational>> AnnihilatorSearch(
    const IterationTrace& trace, unsigned degree,
    const std::optional<Instantiation>& at = std::nullopt);

}  // namespace anchorcheck::finitetype

#endif  // ANCHORCHECK_FINITETYPE_ITERATION_HPP_
