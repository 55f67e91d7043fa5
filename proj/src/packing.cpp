#include "sqpack/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqpack {

SquareItem make_item(int id, Scalar side) {
  if (!(side > 0) || side > 1) throw std::invalid_argument("square side must lie in (0,1], got " + to_string(side));
  return SquareItem{id, std::move(side)};
}

std::vector<SquareItem> make_items(const std::vector<Scalar>& sides) {
  std::vector<SquareItem> out;
  out.reserve(sides.size());
  for (std::size_t i = 0; i < sides.size(); ++i) out.push_back(make_item(static_cast<int>(i + 1), sides[i]));
  return out;
}

void Packing::add(Placement pl) {
  if (pl.x < 0 || pl.right() > 1 || pl.y < 0) throw std::invalid_argument("placement leaves the strip");
  Rect r = pl.rect();

  // Raise the skyline over [x, x+a].
  std::vector<Scalar> breaks;
  std::vector<Scalar> values;
  const auto& ob = profile_.breaks();
  const auto& ov = profile_.values();
  auto push = [&](const Scalar& b, const Scalar& v) {
    if (!values.empty() && values.back() == v) return;
    breaks.push_back(b);
    values.push_back(v);
  };
  std::vector<Scalar> cuts(ob.begin(), ob.end() - 1);
  cuts.push_back(r.left());
  if (r.right() < 1) cuts.push_back(r.right());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::size_t seg = 0;
  for (const auto& c : cuts) {
    while (seg + 1 < ob.size() - 1 && ob[seg + 1] <= c) ++seg;
    Scalar v = ov[seg];
    if (c >= r.left() && c < r.right() && r.top() > v) v = r.top();
    push(c, v);
  }
  breaks.push_back(Scalar(1));
  profile_ = StepProfile(std::move(breaks), std::move(values));

  rects_.push_back(std::move(r));
  placements_.push_back(std::move(pl));
}

Scalar rest_height(const Packing& p, const Scalar& x, const Scalar& a) {
  if (x < 0 || x + a > 1 || !(a > 0)) throw std::invalid_argument("rest_height: position outside the strip");
  return profile_max_over(p.top_profile(), Interval(x, x + a));
}

bool is_supported(const Packing& p, const Placement& pl) {
  if (pl.y == 0) return true;
  Interval span(pl.x, pl.right());
  for (const auto& r : p.rects())
    if (r.top() == pl.y && r.xs.overlaps_open(span)) return true;
  return false;
}

Scalar packing_height(const Packing& p) {
  Scalar h = 0;
  for (const auto& r : p.rects()) h = std::max(h, r.top());
  return h;
}

// ------------------------------------------------------------ reachability

Reachability::Reachability(Scalar side, std::vector<Level> levels, std::vector<Slab> slabs)
    : side_(std::move(side)), levels_(std::move(levels)), slabs_(std::move(slabs)) {}

IntervalSet Reachability::at(const Scalar& y) const {
  if (y < 0) return {};
  if (y > levels_.front().y) return slabs_.front().xs;
  // Levels are descending.
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].y == y) return levels_[i].xs;
    if (levels_[i].y < y) return slabs_[i].xs;
  }
  return {};
}

bool Reachability::contains(const Scalar& x, const Scalar& y) const { return at(y).contains(x); }

namespace {

// Configuration obstacle of a placed square for a moving side-a square:
// the open box (l - a, r) x (b - a, t) of forbidden left-bottom corners.
struct ConfigBox {
  Interval xs;
  Scalar y_lo;
  Scalar y_hi;
};

IntervalSet free_at(const std::vector<ConfigBox>& boxes, const Interval& domain, const Scalar& y_probe_lo,
                    const Scalar& y_probe_hi) {
  // Boxes whose open y-range contains the probe (a point or an open slab).
  std::vector<Interval> blocks;
  for (const auto& b : boxes)
    if (b.y_lo <= y_probe_lo && y_probe_hi <= b.y_hi && b.y_lo < y_probe_hi && y_probe_lo < b.y_hi) blocks.push_back(b.xs);
  return remove_open_intervals(domain, blocks);
}

}  // namespace

Reachability reachable_positions(const Packing& p, const Scalar& a) {
  if (!(a > 0) || a > 1) throw std::invalid_argument("reachable_positions: side must lie in (0,1]");
  Interval domain(Scalar(0), Scalar(1) - a);

  std::vector<ConfigBox> boxes;
  std::vector<Scalar> events{Scalar(0)};
  for (const auto& r : p.rects()) {
    boxes.push_back({Interval(r.left() - a, r.right()), r.bottom() - a, r.top()});
    events.push_back(r.top());
    if (r.bottom() - a > 0) events.push_back(r.bottom() - a);
  }
  std::sort(events.begin(), events.end(), std::greater<>());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<Reachability::Level> levels;
  std::vector<Reachability::Slab> slabs;
  IntervalSet reach = IntervalSet({domain});
  slabs.push_back({events.front(), std::nullopt, reach});

  for (std::size_t k = 0; k < events.size(); ++k) {
    const Scalar& y = events[k];
    // At a level a box blocks only if y lies strictly inside its y-range.
    IntervalSet level_free;
    {
      std::vector<Interval> blocks;
      for (const auto& b : boxes)
        if (b.y_lo < y && y < b.y_hi) blocks.push_back(b.xs);
      level_free = remove_open_intervals(domain, blocks);
    }
    reach = level_free.components_meeting(reach);
    levels.push_back({y, reach});
    if (k + 1 == events.size()) break;

    const Scalar& below = events[k + 1];
    IntervalSet slab_free = free_at(boxes, domain, below, y);
    reach = slab_free.components_meeting(interval_set_intersect(reach, slab_free));
    slabs.push_back({below, y, reach});
  }
  return Reachability(a, std::move(levels), std::move(slabs));
}

bool is_tetris_reachable(const Packing& p, const Placement& pl) {
  return reachable_positions(p, pl.side()).contains(pl.x, pl.y);
}

// ------------------------------------------------------------ verification

std::string to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::out_of_strip: return "out of strip";
    case Violation::overlap: return "overlap";
    case Violation::unsupported: return "unsupported";
    case Violation::unreachable: return "unreachable";
  }
  return "?";
}

std::string VerificationReport::describe() const {
  if (passed()) return "valid packing (" + std::to_string(steps.size()) + " squares)";
  return to_string(violation) + " at step " + std::to_string(*first_failure);
}

StepVerdict verify_step(const Packing& so_far, const Placement& pl) {
  StepVerdict v;
  v.in_strip = pl.x >= 0 && pl.right() <= 1 && pl.y >= 0;
  if (v.in_strip) {
    Rect r = pl.rect();
    v.overlap_free = std::none_of(so_far.rects().begin(), so_far.rects().end(),
                                  [&](const Rect& o) { return o.interiors_overlap(r); });
    v.supported = is_supported(so_far, pl);
    v.reachable = v.overlap_free && is_tetris_reachable(so_far, pl);
  } else {
    v.overlap_free = v.supported = v.reachable = false;
  }
  return v;
}

Violation first_violation(const StepVerdict& v) {
  return v.ok()             ? Violation::none
         : !v.in_strip      ? Violation::out_of_strip
         : !v.overlap_free  ? Violation::overlap
         : !v.supported     ? Violation::unsupported
                            : Violation::unreachable;
}

VerificationReport verify_packing(const std::vector<SquareItem>& seq, const std::vector<Placement>& pls) {
  if (seq.size() != pls.size()) throw std::invalid_argument("verify_packing: sequence and placement counts differ");
  VerificationReport report;
  Packing so_far;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Placement& pl = pls[i];
    if (pl.item.id != seq[i].id || pl.item.side != seq[i].side)
      throw std::invalid_argument("verify_packing: placement " + std::to_string(i + 1) + " does not match its item");

    StepVerdict v = verify_step(so_far, pl);
    report.steps.push_back(v);
    if (!v.ok() && !report.first_failure) {
      report.first_failure = i + 1;
      report.violation = first_violation(v);
    }
    if (v.in_strip) so_far.add(pl);
  }
  return report;
}

VerificationReport verify_packing(const Packing& p) {
  std::vector<SquareItem> seq;
  for (const auto& pl : p.placements()) seq.push_back(pl.item);
  return verify_packing(seq, p.placements());
}

}  // namespace sqpack
