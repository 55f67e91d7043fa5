#pragma once

#include "sqpack/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqpack {

struct SquareItem {
  int id = 0;  // 1-based arrival index
  Scalar side;
};

// Validates 0 < side <= 1.
SquareItem make_item(int id, Scalar side);
std::vector<SquareItem> make_items(const std::vector<Scalar>& sides);

struct Placement {
  SquareItem item;
  Scalar x;  // left edge
  Scalar y;  // bottom edge

  const Scalar& side() const { return item.side; }
  Scalar right() const { return x + item.side; }
  Scalar top() const { return y + item.side; }
  Rect rect() const { return Rect(x, y, x + item.side, y + item.side); }
};

// Squares placed so far in a strip of width 1, in arrival order.
class Packing {
 public:
  Packing() = default;

  // Appends without validity checks beyond strip bounds.
  void add(Placement pl);

  const std::vector<Placement>& placements() const { return placements_; }
  const std::vector<Rect>& rects() const { return rects_; }
  const StepProfile& top_profile() const { return profile_; }
  std::size_t size() const { return placements_.size(); }
  bool empty() const { return placements_.empty(); }

 private:
  std::vector<Placement> placements_;
  std::vector<Rect> rects_;
  StepProfile profile_;
};

// Landing height of a vertical drop of a side-a square with left edge x.
Scalar rest_height(const Packing& p, const Scalar& x, const Scalar& a);

// Rests on the strip bottom or on a placed top with positive-length contact.
bool is_supported(const Packing& p, const Placement& pl);

Scalar packing_height(const Packing& p);

// Left-edge positions reachable by a side-a square from above the packing
// along paths that never move up. Free space is closed: sliding along
// square sides is allowed.
class Reachability {
 public:
  struct Level {
    Scalar y;
    IntervalSet xs;
  };
  struct Slab {
    Scalar y_lo;
    std::optional<Scalar> y_hi;  // empty for the slab above everything
    IntervalSet xs;
  };

  Reachability(Scalar side, std::vector<Level> levels, std::vector<Slab> slabs);

  const Scalar& side() const { return side_; }
  // Event levels in descending y; the last one is y = 0.
  const std::vector<Level>& levels() const { return levels_; }
  // slabs()[0] lies above levels()[0]; slabs()[i] lies between levels i and i-1.
  const std::vector<Slab>& slabs() const { return slabs_; }

  // Reachable left edges at height y.
  IntervalSet at(const Scalar& y) const;
  bool contains(const Scalar& x, const Scalar& y) const;

 private:
  Scalar side_;
  std::vector<Level> levels_;
  std::vector<Slab> slabs_;
};

Reachability reachable_positions(const Packing& p, const Scalar& a);
bool is_tetris_reachable(const Packing& p, const Placement& pl);

enum class Violation { none, out_of_strip, overlap, unsupported, unreachable };
std::string to_string(Violation v);

struct StepVerdict {
  bool in_strip = true;
  bool overlap_free = true;
  bool supported = true;
  bool reachable = true;
  bool ok() const { return in_strip && overlap_free && supported && reachable; }
};

// Checks one placement against the packing before it.
StepVerdict verify_step(const Packing& so_far, const Placement& pl);
Violation first_violation(const StepVerdict& v);

struct VerificationReport {
  std::vector<StepVerdict> steps;
  std::optional<std::size_t> first_failure;  // 1-based step
  Violation violation = Violation::none;

  bool passed() const { return !first_failure.has_value(); }
  std::string describe() const;
};

// Replays the arrivals and checks every step against the placements before it.
// Throws std::invalid_argument on a length or id mismatch.
VerificationReport verify_packing(const std::vector<SquareItem>& seq, const std::vector<Placement>& pls);
VerificationReport verify_packing(const Packing& p);

}  // namespace sqpack
