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

#include "netcake/cut_log.h"

#include <algorithm>
#include <utility>

namespace netcake {

void CutLog::Record(Rational position, std::string step, int agent) {
  points_.push_back({std::move(position), std::move(step), agent});
}

void CutLog::Charge(std::int64_t count, std::string step, int agent) {
  charges_.push_back({count, std::move(step), agent});
}

std::int64_t CutLog::ChargedCount() const {
  std::int64_t total = 0;
  for (const CutCharge& c : charges_) total += c.count;
  return total;
}

std::int64_t CutLog::DistinctPointCount() const {
  std::vector<Rational> pos;
  pos.reserve(points_.size());
  for (const CutPoint& p : points_) pos.push_back(p.position);
  std::sort(pos.begin(), pos.end());
  return std::unique(pos.begin(), pos.end()) - pos.begin();
}

}  // namespace netcake
