#include "sqpack/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sqpack {

Interval::Interval(Scalar l, Scalar h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw std::invalid_argument("interval with hi < lo");
}

// ---------------------------------------------------------------- IntervalSet

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (auto& iv : parts) {
    if (!parts_.empty() && iv.lo <= parts_.back().hi) {
      if (iv.hi > parts_.back().hi) parts_.back().hi = iv.hi;
    } else {
      parts_.push_back(std::move(iv));
    }
  }
}

IntervalSet IntervalSet::single(Scalar lo, Scalar hi) { return IntervalSet({Interval(std::move(lo), std::move(hi))}); }

Scalar IntervalSet::length() const {
  Scalar total = 0;
  for (const auto& iv : parts_) total += iv.length();
  return total;
}

bool IntervalSet::contains(const Scalar& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Scalar& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(x);
}

IntervalSet IntervalSet::components_meeting(const IntervalSet& other) const {
  std::vector<Interval> keep;
  std::size_t j = 0;
  const auto& o = other.parts_;
  for (const auto& iv : parts_) {
    while (j < o.size() && o[j].hi < iv.lo) ++j;
    if (j < o.size() && o[j].lo <= iv.hi) keep.push_back(iv);
  }
  IntervalSet out;
  out.parts_ = std::move(keep);
  return out;
}

IntervalSet interval_set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.parts();
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return IntervalSet(std::move(all));
}

IntervalSet interval_set_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Scalar& lo = std::max(pa[i].lo, pb[j].lo);
    const Scalar& hi = std::min(pa[i].hi, pb[j].hi);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (pa[i].hi < pb[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSet(std::move(out));
}

IntervalSet interval_set_subtract(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  for (const auto& iv : a.parts()) {
    if (iv.lo == iv.hi) {
      if (!b.contains(iv.lo)) out.push_back(iv);
      continue;
    }
    Scalar cur = iv.lo;
    bool open = true;  // whether [cur, ...] still belongs to the result
    for (const auto& cut : b.parts()) {
      if (cut.hi < cur || cut.lo > iv.hi) continue;
      if (cut.lo == cut.hi) continue;  // removing a point does not change the closure
      if (cut.lo > cur) out.emplace_back(cur, cut.lo);
      if (cut.hi >= iv.hi) {
        open = false;
        break;
      }
      cur = std::max(cur, cut.hi);
    }
    if (open && cur < iv.hi) out.emplace_back(cur, iv.hi);
  }
  return IntervalSet(std::move(out));
}

IntervalSet remove_open_intervals(const Interval& domain, std::span<const Interval> blocks) {
  std::vector<Interval> sorted;
  for (const auto& b : blocks)
    if (b.lo < b.hi && b.hi > domain.lo && b.lo < domain.hi) sorted.push_back(b);
  std::sort(sorted.begin(), sorted.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

  // Merge open intervals; (a,b) and (b,c) stay separate since b is free.
  std::vector<Interval> merged;
  for (auto& b : sorted) {
    if (!merged.empty() && b.lo < merged.back().hi) {
      if (b.hi > merged.back().hi) merged.back().hi = b.hi;
    } else {
      merged.push_back(std::move(b));
    }
  }

  std::vector<Interval> out;
  Scalar cur = domain.lo;
  bool alive = true;
  for (const auto& b : merged) {
    if (b.lo >= cur) {
      const Scalar& end = std::min(b.lo, domain.hi);
      out.emplace_back(cur, end);
    }
    if (b.hi > domain.hi) {
      alive = false;
      break;
    }
    if (b.hi > cur) cur = b.hi;
  }
  if (alive && cur <= domain.hi) out.emplace_back(cur, domain.hi);
  return IntervalSet(std::move(out));
}

// ------------------------------------------------------------------- Rect

Rect::Rect(Scalar x0, Scalar y0, Scalar x1, Scalar y1) : xs(std::move(x0), std::move(x1)), ys(std::move(y0), std::move(y1)) {}

// ------------------------------------------------------------ StepProfile

StepProfile::StepProfile() : breaks_{Scalar(0), Scalar(1)}, values_{Scalar(0)} {}

StepProfile::StepProfile(std::vector<Scalar> breaks, std::vector<Scalar> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
  if (breaks_.size() < 2 || values_.size() + 1 != breaks_.size()) throw std::invalid_argument("StepProfile: bad shape");
  if (breaks_.front() != 0 || breaks_.back() != 1) throw std::invalid_argument("StepProfile must cover [0,1]");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i - 1] < breaks_[i])) throw std::invalid_argument("StepProfile breakpoints must increase");
}

StepProfile StepProfile::upper_envelope(std::span<const Rect> rects) {
  std::vector<Scalar> xs{Scalar(0), Scalar(1)};
  for (const auto& r : rects) {
    xs.push_back(r.left());
    xs.push_back(r.right());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Scalar> breaks;
  std::vector<Scalar> values;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Interval slab(xs[i], xs[i + 1]);
    Scalar v = 0;
    for (const auto& r : rects)
      if (r.xs.overlaps_open(slab) && r.top() > v) v = r.top();
    if (!values.empty() && values.back() == v) continue;
    breaks.push_back(xs[i]);
    values.push_back(std::move(v));
  }
  breaks.push_back(Scalar(1));
  return StepProfile(std::move(breaks), std::move(values));
}

Scalar profile_max_over(const StepProfile& p, const Interval& iv) {
  if (!(iv.lo < iv.hi)) throw std::invalid_argument("profile_max_over: zero-length interval");
  const auto& b = p.breaks();
  const auto& v = p.values();
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (b[i] < iv.hi && iv.lo < b[i + 1]) {
      if (!best || v[i] > *best) best = v[i];
    }
  }
  if (!best) throw std::invalid_argument("profile_max_over: interval outside [0,1]");
  return *best;
}

// ------------------------------------------------------ RectilinearRegion

RectilinearRegion::RectilinearRegion(std::vector<Rect> cells) : cells_(std::move(cells)) {}

Scalar RectilinearRegion::area() const {
  Scalar total = 0;
  for (const auto& c : cells_) total += c.area();
  return total;
}

Rect RectilinearRegion::bounding_box() const {
  if (cells_.empty()) throw std::logic_error("bounding_box of empty region");
  Scalar x0 = cells_[0].left(), y0 = cells_[0].bottom(), x1 = cells_[0].right(), y1 = cells_[0].top();
  for (const auto& c : cells_) {
    x0 = std::min(x0, c.left());
    y0 = std::min(y0, c.bottom());
    x1 = std::max(x1, c.right());
    y1 = std::max(y1, c.top());
  }
  return Rect(x0, y0, x1, y1);
}

bool RectilinearRegion::intersects_open(const Rect& r) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Rect& c) { return c.interiors_overlap(r); });
}

namespace {

// Pieces of `side` not covered by the intervals in `shared`.
std::vector<Interval> uncovered(const Interval& side, std::vector<Interval> shared) {
  IntervalSet rest = interval_set_subtract(IntervalSet({side}), IntervalSet(std::move(shared)));
  std::vector<Interval> out;
  for (const auto& iv : rest.parts())
    if (iv.lo < iv.hi) out.push_back(iv);
  return out;
}

}  // namespace

std::vector<BoundaryEdge> RectilinearRegion::boundary_cycle() const {
  std::vector<BoundaryEdge> edges;
  for (const auto& c : cells_) {
    std::vector<Interval> left, right, below, above;
    for (const auto& d : cells_) {
      if (&d == &c) continue;
      if (d.right() == c.left() && d.ys.overlaps_open(c.ys))
        left.emplace_back(std::max(d.bottom(), c.bottom()), std::min(d.top(), c.top()));
      if (d.left() == c.right() && d.ys.overlaps_open(c.ys))
        right.emplace_back(std::max(d.bottom(), c.bottom()), std::min(d.top(), c.top()));
      if (d.top() == c.bottom() && d.xs.overlaps_open(c.xs))
        below.emplace_back(std::max(d.left(), c.left()), std::min(d.right(), c.right()));
      if (d.bottom() == c.top() && d.xs.overlaps_open(c.xs))
        above.emplace_back(std::max(d.left(), c.left()), std::min(d.right(), c.right()));
    }
    for (const auto& s : uncovered(c.xs, below)) edges.push_back({{s.lo, c.bottom()}, {s.hi, c.bottom()}});
    for (const auto& s : uncovered(c.ys, right)) edges.push_back({{c.right(), s.lo}, {c.right(), s.hi}});
    for (const auto& s : uncovered(c.xs, above)) edges.push_back({{s.hi, c.top()}, {s.lo, c.top()}});
    for (const auto& s : uncovered(c.ys, left)) edges.push_back({{c.left(), s.hi}, {c.left(), s.lo}});
  }
  if (edges.empty()) throw InvariantError("region has no boundary");

  // Edges along one line may be split at cell boundaries; join them into
  // a cycle by matching endpoints.
  std::multimap<Point, std::size_t> by_start;
  for (std::size_t i = 0; i < edges.size(); ++i) by_start.emplace(edges[i].from, i);
  for (auto it = by_start.begin(); it != by_start.end();) {
    auto range = by_start.equal_range(it->first);
    if (std::distance(range.first, range.second) > 1) throw InvariantError("region boundary touches itself at a point");
    it = range.second;
  }

  std::vector<BoundaryEdge> cycle;
  std::vector<bool> used(edges.size(), false);
  std::size_t cur = 0;
  for (std::size_t steps = 0; steps < edges.size(); ++steps) {
    if (used[cur]) throw InvariantError("region boundary is not a single cycle");
    used[cur] = true;
    cycle.push_back(edges[cur]);
    auto next = by_start.find(edges[cur].to);
    if (next == by_start.end()) throw InvariantError("open region boundary");
    cur = next->second;
  }
  if (cur != 0 || std::find(used.begin(), used.end(), false) != used.end())
    throw InvariantError("region boundary is not a single cycle");

  // Merge collinear neighbours.
  auto direction = [](const BoundaryEdge& e) {
    return std::pair<int, int>{(e.to.x > e.from.x) - (e.to.x < e.from.x), (e.to.y > e.from.y) - (e.to.y < e.from.y)};
  };
  std::vector<BoundaryEdge> merged;
  for (const auto& e : cycle) {
    if (!merged.empty() && direction(merged.back()) == direction(e))
      merged.back().to = e.to;
    else
      merged.push_back(e);
  }
  if (merged.size() > 1 && direction(merged.back()) == direction(merged.front())) {
    merged.front().from = merged.back().from;
    merged.pop_back();
  }
  return merged;
}

// ---------------------------------------------------------- components

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool covered_by_cut(const Interval& xs, const Scalar& y, std::span<const Rect> cuts) {
  for (const auto& c : cuts)
    if (c.bottom() == y && c.left() <= xs.lo && xs.hi <= c.right()) return true;
  return false;
}

}  // namespace

std::vector<std::vector<Rect>> cell_components(std::span<const Rect> cells, std::span<const Rect> cuts) {
  DisjointSets sets(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Rect& a = cells[i];
      const Rect& b = cells[j];
      bool side_by_side = (a.right() == b.left() || b.right() == a.left()) && a.ys.overlaps_open(b.ys);
      bool stacked = false;
      if ((a.top() == b.bottom() || b.top() == a.bottom()) && a.xs.overlaps_open(b.xs)) {
        const Scalar& y = a.top() == b.bottom() ? a.top() : a.bottom();
        Interval shared(std::max(a.left(), b.left()), std::min(a.right(), b.right()));
        stacked = !covered_by_cut(shared, y, cuts);
      }
      if (side_by_side || stacked) sets.unite(i, j);
    }
  }
  std::map<std::size_t, std::vector<Rect>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[sets.find(i)].push_back(cells[i]);
  std::vector<std::vector<Rect>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  return out;
}

std::vector<RectilinearRegion> free_components(std::span<const Rect> obstacles, const Scalar& ceiling) {
  for (std::size_t i = 0; i < obstacles.size(); ++i)
    for (std::size_t j = i + 1; j < obstacles.size(); ++j)
      if (obstacles[i].interiors_overlap(obstacles[j])) throw std::invalid_argument("free_components: overlapping obstacles");

  std::vector<Scalar> xs{Scalar(0), Scalar(1)};
  for (const auto& r : obstacles) {
    if (r.left() > 0 && r.left() < 1) xs.push_back(r.left());
    if (r.right() > 0 && r.right() < 1) xs.push_back(r.right());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Rect> cells;
  Interval column(Scalar(0), ceiling);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Interval slab(xs[i], xs[i + 1]);
    std::vector<Interval> blocked;
    for (const auto& r : obstacles)
      if (r.xs.overlaps_open(slab)) blocked.push_back(r.ys);
    IntervalSet free_ys = remove_open_intervals(column, blocked);
    for (const auto& free : free_ys.parts())
      if (free.lo < free.hi) cells.emplace_back(slab.lo, free.lo, slab.hi, free.hi);
  }

  std::vector<RectilinearRegion> out;
  for (auto& comp : cell_components(cells)) {
    bool open_top = std::any_of(comp.begin(), comp.end(), [&](const Rect& c) { return c.top() == ceiling; });
    if (!open_top) out.emplace_back(std::move(comp));
  }
  // Deterministic order: by lowest-leftmost cell.
  std::sort(out.begin(), out.end(), [](const RectilinearRegion& a, const RectilinearRegion& b) {
    Rect ba = a.bounding_box(), bb = b.bounding_box();
    if (ba.top() != bb.top()) return ba.top() > bb.top();
    return ba.left() < bb.left();
  });
  return out;
}

}  // namespace sqpack
