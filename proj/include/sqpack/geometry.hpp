#pragma once

#include "sqpack/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sqpack {

// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
  Scalar lo;
  Scalar hi;

  Interval() = default;
  Interval(Scalar l, Scalar h);

  Scalar length() const { return hi - lo; }
  bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
  // True when the open interiors share a segment of positive length.
  bool overlaps_open(const Interval& o) const { return lo < o.hi && o.lo < hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted union of pairwise disjoint, non-touching closed intervals.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);  // normalizes
  static IntervalSet single(Scalar lo, Scalar hi);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  Scalar length() const;
  bool contains(const Scalar& x) const;
  // Intervals of this set that share at least one point with `other`.
  IntervalSet components_meeting(const IntervalSet& other) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet interval_set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_set_intersect(const IntervalSet& a, const IntervalSet& b);
// Closure of a \ b.
IntervalSet interval_set_subtract(const IntervalSet& a, const IntervalSet& b);

// domain minus the union of the OPEN intervals (lo, hi) in `blocks`.
// Isolated points between touching blocks survive.
IntervalSet remove_open_intervals(const Interval& domain, std::span<const Interval> blocks);

struct Point {
  Scalar x;
  Scalar y;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

struct Rect {
  Interval xs;
  Interval ys;

  Rect() = default;
  Rect(Scalar x0, Scalar y0, Scalar x1, Scalar y1);

  const Scalar& left() const { return xs.lo; }
  const Scalar& right() const { return xs.hi; }
  const Scalar& bottom() const { return ys.lo; }
  const Scalar& top() const { return ys.hi; }
  Scalar width() const { return xs.length(); }
  Scalar height() const { return ys.length(); }
  Scalar area() const { return width() * height(); }
  bool interiors_overlap(const Rect& o) const { return xs.overlaps_open(o.xs) && ys.overlaps_open(o.ys); }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Piecewise-constant function on [0,1]; value[i] holds on [breaks[i], breaks[i+1]).
class StepProfile {
 public:
  StepProfile();  // constant zero
  StepProfile(std::vector<Scalar> breaks, std::vector<Scalar> values);

  // Upper envelope of the tops of the given rects (0 where none).
  static StepProfile upper_envelope(std::span<const Rect> rects);

  const std::vector<Scalar>& breaks() const { return breaks_; }
  const std::vector<Scalar>& values() const { return values_; }

 private:
  std::vector<Scalar> breaks_;
  std::vector<Scalar> values_;
};

// Max of the profile over the open interior of iv. Throws on zero-length iv.
Scalar profile_max_over(const StepProfile& p, const Interval& iv);

// A directed boundary edge; the region lies to the left of (from -> to).
struct BoundaryEdge {
  Point from;
  Point to;
};

// Connected rectilinear region stored as interior-disjoint cells.
class RectilinearRegion {
 public:
  RectilinearRegion() = default;
  explicit RectilinearRegion(std::vector<Rect> cells);

  const std::vector<Rect>& cells() const { return cells_; }
  Scalar area() const;
  Rect bounding_box() const;
  // Whether the open region intersects the open rect.
  bool intersects_open(const Rect& r) const;
  // Boundary as a single counterclockwise cycle of axis-parallel edges, with
  // collinear consecutive edges merged. Throws if the boundary is not one
  // simple cycle.
  std::vector<BoundaryEdge> boundary_cycle() const;

 private:
  std::vector<Rect> cells_;
};

// Bounded connected components of ([0,1] x [0,ceiling]) minus the obstacle
// interiors. Components reaching the ceiling are treated as open to the top
// and dropped. Throws std::invalid_argument on overlapping obstacles.
std::vector<RectilinearRegion> free_components(std::span<const Rect> obstacles, const Scalar& ceiling);

// Connected components of a cell set. Cells are adjacent when they share an
// edge of positive length that is not covered by one of the `cuts`
// (horizontal segments given as degenerate rects with ys.lo == ys.hi).
std::vector<std::vector<Rect>> cell_components(std::span<const Rect> cells, std::span<const Rect> cuts = {});

}  // namespace sqpack
