#pragma once

#include "sqpack/packing.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sqpack {

// An online packing strategy: sees one square at a time and commits it.
class OnlineStrategy {
 public:
  virtual ~OnlineStrategy() = default;
  virtual std::string name() const = 0;
  // Chooses a position for `item`, appends it to the packing and returns it.
  virtual Placement place(const SquareItem& item) = 0;
  virtual const Packing& packing() const = 0;
};

// ---------------------------------------------------------------- BottomLeft

// Lowest reachable supported position, leftmost among the lowest.
Placement bl_place_next(const Packing& p, const SquareItem& item);
Packing bl_run(const std::vector<SquareItem>& seq);

class BottomLeftStrategy final : public OnlineStrategy {
 public:
  std::string name() const override { return "bottomleft"; }
  Placement place(const SquareItem& item) override;
  const Packing& packing() const override { return packing_; }

 private:
  Packing packing_;
};

// ------------------------------------------------------------- SlotAlgorithm

struct SlotId {
  int level = 0;       // width 2^-level
  long long index = 0; // 0 <= index < 2^level

  Scalar left() const;
  Scalar right() const;
  Scalar width() const;
  friend bool operator==(const SlotId&, const SlotId&) = default;
};

struct DyadicRounding {
  int level;  // k with 2^-k >= a > 2^-(k+1)
  Scalar width;
};
DyadicRounding round_to_dyadic(const Scalar& a);

// Packing plus a max-tree of landing heights over the finest dyadic
// columns touched so far. The tree is a cache of the raw geometry.
class SlotState {
 public:
  // Finest slot level the state supports (sides down to 2^-18).
  static constexpr int kMaxTreeLevel = 18;

  const Packing& packing() const { return packing_; }
  int tree_level() const { return level_; }
  // Compares every cached node against the geometry; throws InvariantError.
  void check_consistency() const;

  // Max placed top over the slot's open x-interior.
  Scalar slot_height(const SlotId& slot) const;
  // Landing height of a side-a square dropped along the slot's left boundary.
  Scalar drop_height(const SlotId& slot, const Scalar& a) const;

  SlotId choose_slot(const Scalar& a);
  Placement place_next(const SquareItem& item);
  // Slot each placement was put into, in arrival order.
  const std::vector<SlotId>& slots_used() const { return slots_; }

 private:
  void grow_to(int level);
  void record(const Placement& pl);
  Scalar range_max(long long lo, long long hi) const;  // leaves [lo, hi)

  Packing packing_;
  std::vector<SlotId> slots_;
  int level_ = 0;
  std::vector<Scalar> tree_ = std::vector<Scalar>(2, Scalar(0));  // heap layout, root at 1
};

SlotId choose_slot(SlotState& s, const Scalar& a);
Placement slot_place_next(SlotState& s, const SquareItem& item);
Packing slot_run(const std::vector<SquareItem>& seq);
// Same run, also reporting the slot of every square.
SlotState slot_run_state(const std::vector<SquareItem>& seq);

class SlotStrategy final : public OnlineStrategy {
 public:
  std::string name() const override { return "slot"; }
  Placement place(const SquareItem& item) override { return state_.place_next(item); }
  const Packing& packing() const override { return state_.packing(); }
  const SlotState& state() const { return state_; }

 private:
  SlotState state_;
};

std::unique_ptr<OnlineStrategy> make_strategy(const std::string& name);

}  // namespace sqpack
