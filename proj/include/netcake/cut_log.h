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

#ifndef NETCAKE_CUT_LOG_H_
#define NETCAKE_CUT_LOG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "netcake/rational.h"

namespace netcake {

// Where a knife went down and who held it.
struct CutPoint {
  Rational position;
  std::string step;
  int agent = -1;
};

// Cuts charged under the conventional accounting: k - 1 to split into k
// parts, 2n for a two-agent n-way moving-knife division.
struct CutCharge {
  std::int64_t count = 0;
  std::string step;
  int agent = -1;
};

// Owned by a single protocol run. Operations that place knives take an
// optional CutLog* and record every point they introduce strictly inside
// the piece being divided; the protocols add the conventional charges.
class CutLog {
 public:
  void Record(Rational position, std::string step, int agent);
  void Charge(std::int64_t count, std::string step, int agent);

  const std::vector<CutPoint>& points() const { return points_; }
  const std::vector<CutCharge>& charges() const { return charges_; }

  // Sum of all charges.
  std::int64_t ChargedCount() const;
  // Number of distinct recorded positions.
  std::int64_t DistinctPointCount() const;

 private:
  std::vector<CutPoint> points_;
  std::vector<CutCharge> charges_;
};

}  // namespace netcake

#endif  // NETCAKE_CUT_LOG_H_
