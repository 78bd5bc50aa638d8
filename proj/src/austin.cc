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

#include "netcake/austin.h"

#include <optional>
#include <stdexcept>

#include "netcake/unrolled.h"

namespace netcake {

namespace {

constexpr std::size_t kTiler = 0;  // agent i: every window holds 1/k of it
constexpr std::size_t kJudge = 1;  // agent j: we look for 1/k of it

// [a, b) in unrolled coordinates.
struct Window {
  Rational a;
  Rational b;
  friend bool operator==(const Window&, const Window&) = default;
};

Rational JudgeValue(const UnrolledPiece& u, const Window& w) {
  return u.Mass(kJudge, w.b) - u.Mass(kJudge, w.a);
}

// Slides from tile `from` to the next tile `to` along the set of windows
// holding exactly the tiler's share. With F the tiler's running mass, that
// set is {(a, b) : F(b) - F(a) = share}; we walk it monotonically, moving b
// across tiler-worthless cells first, then a across them, and otherwise
// advancing both so F rises equally at each end. Each step is linear in
// (a, b), and within a step a and b each stay in one cell, so the judge's
// value is linear along it. Returns the first window where the judge's
// value equals `want`, or nullopt if the walk reaches `to` without one.
std::optional<Window> Slide(const UnrolledPiece& u, const Window& from,
                            const Window& to, const Rational& end_level,
                            const Rational& want) {
  const Rational& length = u.length();
  Window cur = from;
  Rational level = u.Mass(kTiler, cur.a);
  Rational value = JudgeValue(u, cur);

  while (true) {
    if (value == want) return cur;
    if (cur == to) return std::nullopt;

    Window next = cur;
    bool b_flat = false;
    if (cur.b < length) {
      std::size_t cb = u.CellAt(cur.b);
      if (u.rate(cb, kTiler).is_zero()) {
        next.b = u.cell_end(cb);
        b_flat = true;
      }
    }
    if (!b_flat) {
      std::size_t ca = u.CellAt(cur.a);
      const Rational& ra = u.rate(ca, kTiler);
      if (ra.is_zero()) {
        next.a = u.cell_end(ca);
      } else {
        if (!(cur.b < length)) {
          throw std::logic_error("Slide: window ran off the piece");
        }
        std::size_t cb = u.CellAt(cur.b);
        const Rational& rb = u.rate(cb, kTiler);
        Rational rise = Min(ra * (u.cell_end(ca) - cur.a),
                            rb * (u.cell_end(cb) - cur.b));
        rise = Min(rise, end_level - level);
        if (rise.sign() <= 0) throw std::logic_error("Slide: walk stalled");
        next.a = cur.a + rise / ra;
        next.b = cur.b + rise / rb;
        level += rise;
      }
    }

    Rational next_value = JudgeValue(u, next);
    if ((value < want && want < next_value) ||
        (next_value < want && want < value)) {
      Rational tau = (want - value) / (next_value - value);
      return Window{cur.a + tau * (next.a - cur.a),
                    cur.b + tau * (next.b - cur.b)};
    }
    cur = std::move(next);
    value = std::move(next_value);
  }
}

Window FindWindow(const UnrolledPiece& u, int k) {
  const Rational& length = u.length();
  Rational share = u.Total(kTiler) / Rational(k);
  Rational want = u.Total(kJudge) / Rational(k);

  // Tiles [at[m], at[m + 1]) each hold `share`; the last one runs to the
  // end so the judge's tile values sum to its total.
  std::vector<Rational> at{Rational(0)};
  for (int m = 1; m < k; ++m) at.push_back(u.LeftmostAt(kTiler, share * m));
  at.push_back(length);

  std::vector<Rational> value;
  for (int m = 0; m < k; ++m) value.push_back(JudgeValue(u, {at[m], at[m + 1]}));

  // Tile values average to `want`, so either some tile hits it or two
  // neighbouring tiles straddle it.
  for (int m = 0; m < k; ++m) {
    if (value[m] == want) return {at[m], at[m + 1]};
    if (m + 1 < k && (value[m] < want) != (value[m + 1] < want)) {
      auto hit = Slide(u, {at[m], at[m + 1]}, {at[m + 1], at[m + 2]},
                       share * (m + 1), want);
      if (hit) return *hit;
    }
  }
  throw std::logic_error("ExactFraction: no agreeing window found");
}

}  // namespace

Piece ExactFraction(const Density& di, const Density& dj, int k,
                    const Piece& s, CutLog* log, int agent) {
  if (k < 1) throw std::invalid_argument("ExactFraction: k must be positive");
  if (k == 1) return s;

  UnrolledPiece u(s, {&di, &dj});
  Window w;
  if (u.Total(kTiler).is_zero()) {
    // Any window is exact for agent i; cut by j, or by length.
    w.b = u.Total(kJudge).is_zero()
              ? u.length() / Rational(k)
              : u.LeftmostAt(kJudge, u.Total(kJudge) / Rational(k));
  } else {
    w = FindWindow(u, k);
  }
  u.RecordCut(w.a, log, "austin", agent);
  u.RecordCut(w.b, log, "austin", agent);
  return u.Window(w.a, w.b);
}

std::vector<Piece> AustinCut(const Density& di, const Density& dj, int n,
                             const Piece& s, CutLog* log, int agent) {
  if (n < 1) throw std::invalid_argument("AustinCut: n must be positive");
  std::vector<Piece> out;
  out.reserve(static_cast<std::size_t>(n));
  Piece rest = s;
  for (int k = n; k >= 2; --k) {
    Piece p = ExactFraction(di, dj, k, rest, log, agent);
    rest = Difference(rest, p);
    out.push_back(std::move(p));
  }
  out.push_back(std::move(rest));
  return out;
}

}  // namespace netcake
