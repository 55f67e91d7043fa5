#include "sqpack/strategy.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqpack {

namespace {

struct LeftmostResult {
  std::optional<Scalar> attained;
  std::optional<Scalar> infimum;  // smallest infimum that is not attained
};

// Leftmost point of xs intersected with the union of open intervals.
LeftmostResult leftmost_in(const IntervalSet& xs, const std::vector<Interval>& open_support) {
  LeftmostResult res;
  for (const auto& part : xs.parts()) {
    for (const auto& s : open_support) {
      if (part.lo > s.lo) {
        if (part.lo < s.hi && (!res.attained || part.lo < *res.attained)) res.attained = part.lo;
      } else if (s.lo < part.hi && s.lo < s.hi) {
        if (!res.infimum || s.lo < *res.infimum) res.infimum = s.lo;
      }
    }
  }
  return res;
}

}  // namespace

Placement bl_place_next(const Packing& p, const SquareItem& item) {
  const Scalar& a = item.side;
  if (!(a > 0) || a > 1) throw std::invalid_argument("bl_place_next: side must lie in (0,1]");
  Reachability reach = reachable_positions(p, a);

  std::vector<Scalar> heights{Scalar(0)};
  for (const auto& r : p.rects()) heights.push_back(r.top());
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());

  for (const auto& y : heights) {
    IntervalSet xs = reach.at(y);
    if (xs.empty()) continue;
    if (y == 0) return Placement{item, xs.parts().front().lo, y};

    std::vector<Interval> support;
    for (const auto& r : p.rects())
      if (r.top() == y) support.emplace_back(r.left() - a, r.right());
    LeftmostResult best = leftmost_in(xs, support);
    if (!best.attained && !best.infimum) continue;
    if (best.infimum && (!best.attained || *best.infimum < *best.attained))
      throw InvariantError("bottom-left: leftmost supported position at y=" + to_string(y) + " is not attained");
    return Placement{item, *best.attained, y};
  }
  throw InvariantError("bottom-left: no supported reachable position");
}

Packing bl_run(const std::vector<SquareItem>& seq) {
  BottomLeftStrategy bl;
  for (const auto& item : seq) bl.place(item);
  return bl.packing();
}

Placement BottomLeftStrategy::place(const SquareItem& item) {
  Placement pl = bl_place_next(packing_, item);
  packing_.add(pl);
  return pl;
}

std::unique_ptr<OnlineStrategy> make_strategy(const std::string& name) {
  if (name == "bottomleft") return std::make_unique<BottomLeftStrategy>();
  if (name == "slot") return std::make_unique<SlotStrategy>();
  throw std::invalid_argument("unknown strategy '" + name + "' (expected bottomleft or slot)");
}

}  // namespace sqpack
