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

#include "anchorcheck/finitetype/iteration.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "anchorcheck/trigring/trig_poly.hpp"

namespace anchorcheck::finitetype {
namespace {

constexpr std::array<Channel, 3> kChannels = {Channel::kConstant, Channel::kCosPhi,
                                              Channel::kSinPhi};

std::string CeilingMessage(unsigned order, std::size_t terms, std::size_t ceiling) {
  return "term ceiling exceeded at order " + std::to_string(order) + ": " +
         std::to_string(terms) + " > " + std::to_string(ceiling);
}

}  // namespace

ResourceLimitExceeded::ResourceLimitExceeded(IterationTrace partial, unsigned order,
                                             std::size_t terms, std::size_t ceiling)
    : std::runtime_error(CeilingMessage(order, terms, ceiling)),
      partial_(std::move(partial)),
      order_(order),
      terms_(terms) {}

Channel PrimaryChannel(const PhiHarmonic& f) {
  if (!f.f0.is_zero()) return Channel::kConstant;
  if (!f.fc.is_zero()) return Channel::kCosPhi;
  if (!f.fs.is_zero()) return Channel::kSinPhi;
  return Channel::kConstant;
}

const TrigPoly& ChannelOf(const PhiHarmonic& f, Channel ch) {
  switch (ch) {
    case Channel::kCosPhi:
      return f.fc;
    case Channel::kSinPhi:
      return f.fs;
    case Channel::kConstant:
      break;
  }
  return f.f0;
}

const TrigPoly& IterationTrace::channel_value(unsigned k) const {
  return ChannelOf(entries.at(k).value, channel);
}

IterationTrace Iterate(const DiffOp& op, const PhiHarmonic& f, unsigned max_order,
                       std::string label, std::size_t term_ceiling) {
  if (max_order == 0) throw std::invalid_argument("Iterate: order must be >= 1");
  IterationTrace trace;
  trace.label = std::move(label);
  trace.channel = PrimaryChannel(f);
  trace.entries.push_back({0, f, ChannelOf(f, trace.channel).pole(), std::nullopt});
  for (unsigned k = 1; k <= max_order; ++k) {
    PhiHarmonic next = op.apply(trace.entries.back().value);
    const std::size_t terms = next.term_count();
    if (terms > term_ceiling) {
      throw ResourceLimitExceeded(std::move(trace), k, terms, term_ceiling);
    }
    const unsigned pole = ChannelOf(next, trace.channel).pole();
    trace.entries.push_back({k, std::move(next), pole, std::nullopt});
  }
  return trace;
}

ParamMatrix CoefficientMatrix(const IterationTrace& trace, unsigned first,
                              unsigned last) {
  const std::size_t ncols = last - first + 1;
  std::vector<std::vector<ParamRational>> rows;
  for (Channel ch : kChannels) {
    unsigned top = 0;
    for (unsigned k = first; k <= last; ++k) {
      top = std::max(top, ChannelOf(trace.entries.at(k).value, ch).pole());
    }
    std::vector<trigring::TrigNum> lifted;
    unsigned degree = 0;
    for (unsigned k = first; k <= last; ++k) {
      const TrigPoly& v = ChannelOf(trace.entries[k].value, ch);
      trigring::TrigNum n = v.num() * trigring::GammaPower(top - v.pole());
      degree = std::max(degree, n.cos_degree());
      lifted.push_back(std::move(n));
    }
    for (unsigned e : {0u, 1u}) {
      for (unsigned j = 0; j <= degree; ++j) {
        std::vector<ParamRational> row(ncols);
        bool nonzero = false;
        for (std::size_t col = 0; col < ncols; ++col) {
          row[col] = lifted[col].coefficient(e, j);
          nonzero = nonzero || !row[col].is_zero();
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return ParamMatrix(0, ncols);
  return ParamMatrix::FromRows(rows);
}

std::size_t IterateRank(const IterationTrace& trace, unsigned count,
                        const std::optional<Instantiation>& at) {
  if (count == 0) return 0;
  ParamMatrix m = CoefficientMatrix(trace, 0, count - 1);
  if (at) m = m.instantiate(at->a, at->r);
  return exactnum::BareissRank(m);
}

std::optional<std::vector<ParamRational>> AnnihilatorSearch(
    const IterationTrace& trace, unsigned degree,
    const std::optional<Instantiation>& at) {
  if (degree == 0 || degree >= trace.entries.size()) {
    throw std::invalid_argument("AnnihilatorSearch: trace too short for degree");
  }
  // Columns: L^(m-1) f, ..., f; right-hand side: -L^m f.
  ParamMatrix all = CoefficientMatrix(trace, 0, degree);
  if (at) all = all.instantiate(at->a, at->r);
  ParamMatrix lhs(all.rows(), degree);
  std::vector<ParamRational> rhs(all.rows());
  for (std::size_t i = 0; i < all.rows(); ++i) {
    rhs[i] = -all.at(i, degree);
    for (unsigned j = 0; j < degree; ++j) lhs.at(i, j) = all.at(i, degree - 1 - j);
  }
  return exactnum::SolveLinear(lhs, rhs);
}

}  // namespace anchorcheck::finitetype
