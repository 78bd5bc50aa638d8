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

#ifndef NETCAKE_DENSITY_H_
#define NETCAKE_DENSITY_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "netcake/rational.h"

namespace netcake {

class InvalidDensity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Piecewise-constant, non-negative valuation density on [0, 1). values[k]
// applies on [breakpoints[k], breakpoints[k + 1]). The total mass need not
// be 1.
class Density {
 public:
  // Throws InvalidDensity unless breakpoints run strictly increasing from 0
  // to 1, there is one value per segment, and every value is >= 0.
  Density(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static Density Uniform(const Rational& value = Rational(1));

  // `value` on [lo, hi), zero elsewhere. 0 <= lo < hi <= 1.
  static Density Step(const Rational& lo, const Rational& hi,
                      const Rational& value);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t segments() const { return values_.size(); }

  Rational Total() const;

  friend bool operator==(const Density&, const Density&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

}  // namespace netcake

#endif  // NETCAKE_DENSITY_H_
