#pragma once

#include "sqpack/report.hpp"
#include "sqpack/strategy.hpp"

#include <string>
#include <vector>

namespace sqpack {

// Equal-area enlargement of a slot placement. For a <= 1/2 it stays inside
// the slot of twice the width; larger squares grow to the right only and
// are clipped to the strip.
struct Shadow {
  int owner = 0;  // 0-based placement index
  RectilinearRegion region;
  Scalar delta;
  Scalar delta_prime;
  bool clipped = false;
};

// (A u A^S) restricted to the slot A was placed in.
struct Widening {
  int owner = 0;
  Rect rect;
};

struct ChargeRegion {
  std::vector<Rect> cells;
  Scalar area;
};

// regions[i] holds the points charged to square i; the last entry is the
// closing square.
struct ChargeMap {
  std::vector<ChargeRegion> regions;
};

// Slot of level k whose left boundary is the placement's left edge.
SlotId slot_of(const Placement& pl, int k);

Shadow shadow_of(const Placement& pl, int k, int owner = 0);
Widening widening_of(const Placement& pl, int k, int owner = 0);

// `closed` ends with the side-1 closing square; levels has one entry per
// placement. Points in no widening are charged to the first widening
// straight above them; ties go to the lower index.
ChargeMap charge_map(const Packing& closed, const std::vector<int>& levels);

struct SlotAnalysis {
  Packing closed;
  std::vector<int> levels;  // per placement of `closed`
  std::vector<Shadow> shadows;
  std::vector<Widening> widenings;
  ChargeMap charges;
  Scalar height;           // before closing
  Scalar area_sum;         // original squares
  Scalar area_sum_closed;  // including the closing square
  Scalar charged_area;
  std::vector<CheckLine> checks;

  bool passed() const { return all_pass(checks); }
  std::string report() const;
};

// Per-square 8/13 bounds and the height inequalities.
std::vector<CheckLine> check_slot_bounds(const SlotAnalysis& a);

// Closes a SlotAlgorithm run with a side-1 square in slot (0,0) and builds
// shadows, widenings, the charge map and the checks.
SlotAnalysis analyze_slot(const SlotState& run);
SlotAnalysis analyze_slot(const std::vector<SquareItem>& seq);

}  // namespace sqpack
