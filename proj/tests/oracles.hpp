#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include "sqpack/packing.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using sqpack::Scalar;

inline long long on_grid(const Scalar& v, long long scale) {
  Scalar s = v * scale;
  if (boost::multiprecision::denominator(s) != 1) throw std::invalid_argument("value is not on the oracle grid");
  return boost::multiprecision::numerator(s).convert_to<long long>();
}

// Motion planning by breadth-first search over left-bottom corners on a
// grid of step 1/scale. Moves: one step left, right or down. A square may
// start anywhere at the height of the highest top.
class GridReach {
 public:
  GridReach(const sqpack::Packing& p, const Scalar& side, long long scale = 64) : scale_(scale) {
    a_ = on_grid(side, scale);
    width_ = scale - a_ + 1;
    for (const auto& r : p.rects()) {
      boxes_.push_back({on_grid(r.left(), scale), on_grid(r.bottom(), scale), on_grid(r.right(), scale),
                        on_grid(r.top(), scale)});
      ymax_ = std::max(ymax_, boxes_.back()[3]);
    }
    reach_.assign(static_cast<std::size_t>(width_ * (ymax_ + 1)), 0);
    std::deque<std::pair<long long, long long>> todo;
    for (long long x = 0; x < width_; ++x)
      if (free(x, ymax_)) {
        reach_[idx(x, ymax_)] = 1;
        todo.emplace_back(x, ymax_);
      }
    while (!todo.empty()) {
      auto [x, y] = todo.front();
      todo.pop_front();
      const std::pair<long long, long long> next[3] = {{x - 1, y}, {x + 1, y}, {x, y - 1}};
      for (auto [nx, ny] : next) {
        if (nx < 0 || nx >= width_ || ny < 0) continue;
        if (reach_[idx(nx, ny)] || !free(nx, ny)) continue;
        reach_[idx(nx, ny)] = 1;
        todo.emplace_back(nx, ny);
      }
    }
  }

  // Corner (x, y) in real coordinates; must lie on the grid.
  bool reachable(const Scalar& x, const Scalar& y) const {
    long long gx = on_grid(x, scale_), gy = on_grid(y, scale_);
    if (gx < 0 || gx >= width_ || gy < 0) return false;
    if (gy > ymax_) return true;
    return reach_[idx(gx, gy)] != 0;
  }

  bool free(long long x, long long y) const {
    for (const auto& b : boxes_)
      if (x < b[2] && b[0] < x + a_ && y < b[3] && b[1] < y + a_) return false;
    return true;
  }

 private:
  std::size_t idx(long long x, long long y) const { return static_cast<std::size_t>(y * width_ + x); }

  long long scale_;
  long long a_ = 0;
  long long width_ = 0;
  long long ymax_ = 0;
  std::vector<std::array<long long, 4>> boxes_;
  std::vector<char> reach_;
};

// Max top among rects whose x-range meets the open footprint (x, x+a).
inline Scalar brute_rest_height(const sqpack::Packing& p, const Scalar& x, const Scalar& a) {
  Scalar h = 0;
  for (const auto& r : p.rects())
    if (r.left() < x + a && x < r.right() && r.top() > h) h = r.top();
  return h;
}

inline bool brute_supported(const sqpack::Packing& p, const Scalar& x, const Scalar& y, const Scalar& a) {
  if (y == 0) return true;
  for (const auto& r : p.rects())
    if (r.top() == y && r.left() < x + a && x < r.right()) return true;
  return false;
}

inline bool brute_disjoint(const sqpack::Packing& p, const Scalar& x, const Scalar& y, const Scalar& a) {
  for (const auto& r : p.rects())
    if (r.left() < x + a && x < r.right() && r.bottom() < y + a && y < r.top()) return false;
  return true;
}

// Lowest, then leftmost, legal position of a side-a square with corner on the
// 1/scale grid, found by exhaustive search.
inline std::optional<std::pair<Scalar, Scalar>> grid_bottom_left(const sqpack::Packing& p, const Scalar& a,
                                                                 long long scale = 64) {
  GridReach reach(p, a, scale);
  std::vector<Scalar> ys{Scalar(0)};
  for (const auto& r : p.rects()) ys.push_back(r.top());
  std::sort(ys.begin(), ys.end());
  for (const auto& y : ys) {
    long long steps = on_grid(1 - a, scale);
    for (long long i = 0; i <= steps; ++i) {
      Scalar x = Scalar(i) / scale;
      if (brute_disjoint(p, x, y, a) && brute_supported(p, x, y, a) && reach.reachable(x, y)) return {{x, y}};
    }
  }
  return std::nullopt;
}

}  // namespace oracle
