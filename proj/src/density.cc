// Copyright 2026 The netcake Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netcake/density.h"

#include <utility>

namespace netcake {

Density::Density(std::vector<Rational> breakpoints,
                 std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2) {
    throw InvalidDensity("density needs at least the breakpoints 0 and 1");
  }
  if (breakpoints_.front() != Rational(0) ||
      breakpoints_.back() != Rational(1)) {
    throw InvalidDensity("density breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw InvalidDensity("density breakpoints must be strictly increasing");
    }
  }
  if (values_.size() + 1 != breakpoints_.size()) {
    throw InvalidDensity("density needs exactly one value per segment");
  }
  for (const Rational& v : values_) {
    if (v.sign() < 0) {
      throw InvalidDensity("negative density value " + v.ToString());
    }
  }
}

Density Density::Uniform(const Rational& value) {
  return Density({Rational(0), Rational(1)}, {value});
}

Density Density::Step(const Rational& lo, const Rational& hi,
                      const Rational& value) {
  std::vector<Rational> bp{Rational(0)};
  std::vector<Rational> vals;
  if (Rational(0) < lo) {
    bp.push_back(lo);
    vals.push_back(Rational(0));
  }
  bp.push_back(hi);
  vals.push_back(value);
  if (hi < Rational(1)) {
    bp.push_back(Rational(1));
    vals.push_back(Rational(0));
  }
  return Density(std::move(bp), std::move(vals));
}

Rational Density::Total() const {
  Rational total;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    total += values_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
  }
  return total;
}

}  // namespace netcake
