#pragma once

#include "sqpack/packing.hpp"
#include "sqpack/report.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sqpack {

enum class Side { left, bottom, right, top };
std::string to_string(Side s);

enum class OwnerKind {
  square,
  floor,       // strip bottom, treated as a ground square below y = 0
  left_wall,
  right_wall,
  virtual_lid, // bottom of a virtual copy closing a split-off hole
  cut,         // top of that copy, seen from the hole above the cut
};

struct Owner {
  OwnerKind kind = OwnerKind::square;
  int index = -1;  // placement index for squares, lid index for virtual_lid/cut

  bool is_square() const { return kind == OwnerKind::square; }
  friend bool operator==(const Owner&, const Owner&) = default;
};

// A maximal piece of a hole boundary lying on one side of one owner.
// Pieces run counterclockwise: the hole is on the left.
struct BoundaryPiece {
  Point from;
  Point to;
  Owner owner;
  Side side;  // side of the owner the piece lies on

  Scalar length() const;
  bool contains(const Point& p) const;
};

// Consecutive pieces sharing an owner: one entry of the sequence A~_1..A~_k.
struct BoundaryRun {
  Owner owner;
  std::vector<BoundaryPiece> pieces;

  const Point& start() const { return pieces.front().from; }
  const Point& end() const { return pieces.back().to; }
  // Total length this run contributes on the given side of its owner.
  Scalar length_on(Side s) const;
};

// Virtual copy of square `up` closing the hole below the unsupported
// section MN, with its lower-right corner at N.
struct VirtualLid {
  int up = -1;
  int low = -1;
  Point m;
  Point n;
  bool case_b = false;
  Scalar up_side;

  Rect copy() const { return Rect(n.x - up_side, n.y, n.x, n.y + up_side); }
};

enum class HoleType { type_i, type_ii };
enum class WallContact { none, left, right };
std::string to_string(HoleType t);
std::string to_string(WallContact w);

struct SideKey {
  int square = -1;
  Side side = Side::bottom;
  bool copy = false;  // side of the square's virtual copy
  friend auto operator<=>(const SideKey&, const SideKey&) = default;
};

struct ChargeTerm {
  SideKey key;
  Scalar coefficient;
  Scalar length;
};

struct Hole {
  int id = 0;
  int parent = -1;  // hole this one was split from
  RectilinearRegion region;
  Scalar area;
  std::vector<BoundaryRun> runs;  // runs[0] is A~_1 (the lid); counterclockwise
  Point p;                        // left end of the lid segment
  Point q;                        // right end of the lid segment
  WallContact wall = WallContact::none;
  std::optional<int> virtual_lid;  // index into the analysis' lid table

  std::optional<HoleType> type;  // walls excepted
  std::optional<Point> dl_origin;  // P'
  Scalar diagonal_overlap;         // x-extent of D_l inside the hole; 0 when diagonal-free
  std::optional<Point> dr_origin;  // Q'
  Scalar bound;
  std::vector<ChargeTerm> terms;

  std::size_t k() const { return runs.size(); }
  // Number of real squares on the boundary.
  std::size_t square_count() const;
  const BoundaryRun& run(std::size_t one_based) const { return runs.at(one_based - 1); }
};

struct ChargeLedger {
  std::map<SideKey, Scalar> coefficient;  // max over holes, per side
  std::vector<Scalar> total;              // c_i per square, closing square last
  Scalar weighted_sum;                    // sum of c_i a_i^2
};

struct BottomLeftAnalysis {
  Packing closed;
  Scalar height;    // before closing
  Scalar area_sum;  // sum of a_i^2 over the original squares
  Scalar hole_area;
  std::vector<Hole> extracted;  // before splitting
  std::vector<Hole> holes;      // diagonal-free
  std::vector<VirtualLid> lids;
  ChargeLedger ledger;
  std::vector<CheckLine> checks;

  bool passed() const { return all_pass(checks); }
  std::string report() const;
};

// Appends the side-1 closing square where BottomLeft would put it.
Packing close_packing(const Packing& p);

// Bounded free components of a closed packing with their boundary owners,
// lid and wall contact. Throws InvariantError on structural violations.
std::vector<Hole> extract_holes(const Packing& closed);

// Type by the neighbor relation of A~_k and A~_{k-1}. Throws InvariantError
// when neither holds.
HoleType classify_hole(const Packing& closed, const Hole& h, const std::vector<VirtualLid>& lids = {});

// Full pipeline: close, extract, split along left diagonals, bound every
// hole, build the charge ledger. Structural violations throw InvariantError;
// bound comparisons are reported as checks.
BottomLeftAnalysis analyze_bottom_left(const Packing& p);

}  // namespace sqpack
