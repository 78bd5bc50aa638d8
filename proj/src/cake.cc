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

#include "netcake/cake.h"

#include <algorithm>

#include "netcake/unrolled.h"

namespace netcake {

Rational Measure(const Density& d, const Piece& s) {
  const auto& bp = d.breakpoints();
  const auto& vals = d.values();
  Rational total;
  std::size_t k = 0;
  for (const Interval& iv : s.intervals()) {
    while (k + 1 < bp.size() && bp[k + 1] <= iv.lo) ++k;
    for (std::size_t j = k; j < vals.size() && bp[j] < iv.hi; ++j) {
      const Rational& lo = Max(bp[j], iv.lo);
      const Rational& hi = Min(bp[j + 1], iv.hi);
      total += vals[j] * (hi - lo);
    }
  }
  return total;
}

PrefixSplit PrefixCut(const Density& d, const Piece& s, const Rational& t,
                      CutLog* log, int agent) {
  UnrolledPiece u(s, {&d});
  if (t.sign() < 0 || u.Total(0) < t) {
    throw TargetExceedsMeasure("prefix target " + t.ToString() +
                               " exceeds measure " + u.Total(0).ToString());
  }
  Rational at = u.LeftmostAt(0, t);
  u.RecordCut(at, log, "prefix_cut", agent);
  return {u.Window(Rational(0), at), u.Window(at, u.length())};
}

std::vector<Piece> EqualSplit(const Density& d, const Piece& s, int k,
                              CutLog* log, int agent,
                              const std::string& step) {
  if (k < 1) throw std::invalid_argument("EqualSplit: k must be positive");
  UnrolledPiece u(s, {&d});
  const Rational& total = u.Total(0);

  std::vector<Rational> at{Rational(0)};
  for (int m = 1; m < k; ++m) {
    Rational frac(m, k);
    at.push_back(total.is_zero() ? u.length() * frac
                                 : u.LeftmostAt(0, total * frac));
  }
  at.push_back(u.length());

  std::vector<Piece> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) {
    if (m > 0) u.RecordCut(at[m], log, step, agent);
    out.push_back(u.Window(at[m], at[m + 1]));
  }
  return out;
}

}  // namespace netcake
