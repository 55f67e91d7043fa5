#include "sqpack/strategy.hpp"

#include <stdexcept>

namespace sqpack {

Scalar SlotId::left() const { return Scalar(index) * dyadic(level); }
Scalar SlotId::right() const { return Scalar(index + 1) * dyadic(level); }
Scalar SlotId::width() const { return dyadic(level); }

DyadicRounding round_to_dyadic(const Scalar& a) {
  if (!(a > 0) || a > 1) throw std::invalid_argument("round_to_dyadic: side must lie in (0,1]");
  int k = 0;
  Scalar w = 1;
  while (w / 2 >= a) {
    w /= 2;
    ++k;
  }
  return {k, w};
}

namespace {

BigInt ceil_scaled(const Scalar& v, int level) {
  Scalar s = v * Scalar(BigInt(1) << level);
  BigInt num = boost::multiprecision::numerator(s);
  BigInt den = boost::multiprecision::denominator(s);
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q;
}

long long floor_index(const Scalar& v, int level) {
  Scalar s = v * Scalar(BigInt(1) << level);
  BigInt q = boost::multiprecision::numerator(s) / boost::multiprecision::denominator(s);
  return q.convert_to<long long>();
}

}  // namespace

void SlotState::grow_to(int level) {
  if (level <= level_) return;
  if (level > kMaxTreeLevel)
    throw std::domain_error("slot algorithm supports sides down to 2^-" + std::to_string(kMaxTreeLevel));
  level_ = level;
  tree_.assign(std::size_t(2) << level_, Scalar(0));
  for (const auto& pl : packing_.placements()) record(pl);
}

void SlotState::record(const Placement& pl) {
  const long long n = 1LL << level_;
  long long lo = floor_index(pl.x, level_);
  long long hi = ceil_scaled(pl.right(), level_).convert_to<long long>();
  Scalar top = pl.top();
  for (long long i = lo; i < hi; ++i)
    if (tree_[n + i] < top) tree_[n + i] = top;
  for (long long l = (n + lo) / 2, h = (n + hi - 1) / 2; l >= 1; l /= 2, h /= 2)
    for (long long i = l; i <= h; ++i) tree_[i] = std::max(tree_[2 * i], tree_[2 * i + 1]);
}

Scalar SlotState::range_max(long long lo, long long hi) const {
  const long long n = 1LL << level_;
  Scalar best = 0;
  for (long long l = lo + n, h = hi + n; l < h; l /= 2, h /= 2) {
    if (l & 1) best = std::max(best, tree_[l++]);
    if (h & 1) best = std::max(best, tree_[--h]);
  }
  return best;
}

Scalar SlotState::slot_height(const SlotId& slot) const {
  if (slot.level > level_) return profile_max_over(packing_.top_profile(), Interval(slot.left(), slot.right()));
  return tree_[(std::size_t(1) << slot.level) + slot.index];
}

Scalar SlotState::drop_height(const SlotId& slot, const Scalar& a) const {
  if (slot.level > level_) return rest_height(packing_, slot.left(), a);
  long long lo = slot.index << (level_ - slot.level);
  long long hi = ceil_scaled(slot.left() + a, level_).convert_to<long long>();
  return range_max(lo, hi);
}

SlotId SlotState::choose_slot(const Scalar& a) {
  DyadicRounding r = round_to_dyadic(a);
  grow_to(r.level);
  SlotId best{r.level, 0};
  Scalar best_y = drop_height(best, a);
  for (long long j = 1; j < (1LL << r.level); ++j) {
    SlotId s{r.level, j};
    Scalar y = drop_height(s, a);
    if (y < best_y) {
      best_y = y;
      best = s;
    }
  }
  return best;
}

Placement SlotState::place_next(const SquareItem& item) {
  SlotId s = choose_slot(item.side);
  Placement pl{item, s.left(), drop_height(s, item.side)};
  packing_.add(pl);
  record(pl);
  slots_.push_back(s);
  return pl;
}

void SlotState::check_consistency() const {
  for (int l = 0; l <= level_; ++l)
    for (long long j = 0; j < (1LL << l); ++j) {
      SlotId s{l, j};
      Scalar cached = tree_[(std::size_t(1) << l) + j];
      Scalar actual = profile_max_over(packing_.top_profile(), Interval(s.left(), s.right()));
      if (cached != actual)
        throw InvariantError("slot tree node (" + std::to_string(l) + "," + std::to_string(j) + ") holds " +
                             to_string(cached) + ", geometry gives " + to_string(actual));
    }
}

SlotId choose_slot(SlotState& s, const Scalar& a) { return s.choose_slot(a); }
Placement slot_place_next(SlotState& s, const SquareItem& item) { return s.place_next(item); }

SlotState slot_run_state(const std::vector<SquareItem>& seq) {
  SlotState s;
  for (const auto& item : seq) s.place_next(item);
  return s;
}

Packing slot_run(const std::vector<SquareItem>& seq) { return slot_run_state(seq).packing(); }

}  // namespace sqpack
