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

#include "anchorcheck/trigring/phi_harmonic.hpp"

#include <algorithm>

namespace anchorcheck::trigring {

unsigned PhiHarmonic::pole() const {
  return std::max({f0.pole(), fc.pole(), fs.pole()});
}

std::size_t PhiHarmonic::term_count() const {
  return f0.term_count() + fc.term_count() + fs.term_count();
}

PhiHarmonic& PhiHarmonic::operator+=(const PhiHarmonic& o) {
  f0 += o.f0;
  fc += o.fc;
  fs += o.fs;
  return *this;
}

PhiHarmonic& PhiHarmonic::operator-=(const PhiHarmonic& o) {
  f0 -= o.f0;
  fc -= o.fc;
  fs -= o.fs;
  return *this;
}

}  // namespace anchorcheck::trigring
