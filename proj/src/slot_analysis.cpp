#include "sqpack/slot_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sqpack {

SlotId slot_of(const Placement& pl, int k) {
  Scalar s = pl.x / dyadic(k);
  if (boost::multiprecision::denominator(s) != 1)
    throw std::invalid_argument("placement is not on a slot boundary of level " + std::to_string(k));
  SlotId id{k, boost::multiprecision::numerator(s).convert_to<long long>()};
  if (id.index < 0 || pl.right() > id.right()) throw std::invalid_argument("placement does not fit its slot");
  return id;
}

namespace {

struct Extent {
  Scalar left;   // A u A^S spans [left, right]
  Scalar right;
  Scalar delta;
  Scalar delta_prime;
};

Extent extent_of(const Placement& pl, int k) {
  const Scalar& a = pl.side();
  if (a <= make_scalar(1, 2)) {
    if (k < 1) throw std::invalid_argument("a square of side at most 1/2 has slot level >= 1");
    SlotId twice{k - 1, slot_of(pl, k).index / 2};
    Scalar delta = twice.right() - pl.right();
    Scalar dp = std::min(a, delta);
    return {pl.x - (a - dp), pl.right() + dp, delta, dp};
  }
  return {pl.x, pl.right() + a, 1 - pl.right(), a};
}

}  // namespace

Shadow shadow_of(const Placement& pl, int k, int owner) {
  Extent e = extent_of(pl, k);
  Shadow s;
  s.owner = owner;
  s.delta = e.delta;
  s.delta_prime = e.delta_prime;
  Scalar right = e.right;
  if (right > 1) {
    s.clipped = true;
    right = 1;
  }
  std::vector<Rect> cells;
  if (e.left < pl.x) cells.emplace_back(e.left, pl.y, pl.x, pl.top());
  if (pl.right() < right) cells.emplace_back(pl.right(), pl.y, right, pl.top());
  s.region = RectilinearRegion(std::move(cells));
  return s;
}

Widening widening_of(const Placement& pl, int k, int owner) {
  Extent e = extent_of(pl, k);
  SlotId t = slot_of(pl, k);
  return {owner, Rect(std::max(e.left, t.left()), pl.y, std::min(e.right, t.right()), pl.top())};
}

ChargeMap charge_map(const Packing& closed, const std::vector<int>& levels) {
  const auto& pls = closed.placements();
  if (pls.empty() || levels.size() != pls.size()) throw std::invalid_argument("charge_map: one level per placement");
  const Scalar ceiling = pls.back().y;

  std::vector<Widening> ws;
  std::vector<Scalar> xs{Scalar(0), Scalar(1)};
  for (std::size_t i = 0; i < pls.size(); ++i) {
    ws.push_back(widening_of(pls[i], levels[i], static_cast<int>(i)));
    xs.push_back(ws.back().rect.left());
    xs.push_back(ws.back().rect.right());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<std::size_t> order(ws.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ws[a].rect.bottom() != ws[b].rect.bottom()) return ws[a].rect.bottom() < ws[b].rect.bottom();
    return a < b;
  });

  ChargeMap cm;
  cm.regions.resize(pls.size());
  for (std::size_t c = 0; c + 1 < xs.size(); ++c) {
    const Scalar &x0 = xs[c], &x1 = xs[c + 1];
    Scalar cur = 0;
    for (std::size_t i : order) {
      if (cur >= ceiling) break;
      const Rect& r = ws[i].rect;
      if (r.left() > x0 || r.right() < x1) continue;
      if (r.bottom() > cur) {
        auto& cells = cm.regions[i].cells;
        if (!cells.empty() && cells.back().right() == x0 && cells.back().ys == Interval(cur, r.bottom()))
          cells.back() = Rect(cells.back().left(), cur, x1, r.bottom());
        else
          cells.emplace_back(x0, cur, x1, r.bottom());
      }
      cur = std::max(cur, r.top());
    }
    if (cur < ceiling) throw InvariantError("upward ray from the strip meets no widening");
  }
  for (auto& reg : cm.regions)
    for (const auto& r : reg.cells) reg.area += r.area();
  return cm;
}

std::vector<CheckLine> check_slot_bounds(const SlotAnalysis& a) {
  std::vector<CheckLine> out;
  const Scalar bound = make_scalar(8, 13);
  const auto& pls = a.closed.placements();
  for (std::size_t i = 0; i < pls.size(); ++i) {
    Scalar sq = pls[i].side() * pls[i].side();
    if (pls[i].side() <= make_scalar(1, 2))
      out.push_back(check_eq("square" + std::to_string(i + 1) + ".shadow_area", a.shadows[i].region.area(), sq));
    out.push_back(check_le("square" + std::to_string(i + 1) + ".charged_area", a.charges.regions[i].area, bound * sq));
  }
  out.push_back(check_le("slot_height_identity", a.height, 2 * a.area_sum + a.charged_area));
  out.push_back(check_le("slot_height_bound", a.height, 2 * a.area_sum + bound * a.area_sum_closed));
  out.push_back(check_le("slot_competitive_bound", a.height, make_scalar(34, 13) * a.area_sum + bound));
  return out;
}

SlotAnalysis analyze_slot(const SlotState& run) {
  SlotAnalysis a;
  const Packing& p = run.packing();
  a.height = packing_height(p);
  a.closed = p;
  a.closed.add(Placement{make_item(static_cast<int>(p.size()) + 1, Scalar(1)), Scalar(0), a.height});
  for (const auto& s : run.slots_used()) a.levels.push_back(s.level);
  a.levels.push_back(0);

  const auto& pls = a.closed.placements();
  for (std::size_t i = 0; i < pls.size(); ++i) {
    a.shadows.push_back(shadow_of(pls[i], a.levels[i], static_cast<int>(i)));
    a.widenings.push_back(widening_of(pls[i], a.levels[i], static_cast<int>(i)));
    Scalar sq = pls[i].side() * pls[i].side();
    a.area_sum_closed += sq;
    if (i + 1 < pls.size()) a.area_sum += sq;
  }
  a.charges = charge_map(a.closed, a.levels);
  for (const auto& r : a.charges.regions) a.charged_area += r.area;
  a.checks = check_slot_bounds(a);
  return a;
}

SlotAnalysis analyze_slot(const std::vector<SquareItem>& seq) { return analyze_slot(slot_run_state(seq)); }

std::string SlotAnalysis::report() const {
  std::ostringstream out;
  out << "squares " << closed.size() - 1 << "\n";
  out << "height " << to_fraction(height) << "\n";
  out << "area_sum " << to_fraction(area_sum) << "\n";
  out << "charged_area " << to_fraction(charged_area) << "\n";
  for (std::size_t i = 0; i < widenings.size(); ++i) {
    const Rect& r = widenings[i].rect;
    out << "WIDENING " << i + 1 << " level " << levels[i] << " x " << to_fraction(r.left()) << " " << to_fraction(r.right())
        << " y " << to_fraction(r.bottom()) << " " << to_fraction(r.top()) << "\n";
  }
  for (std::size_t i = 0; i < charges.regions.size(); ++i)
    if (charges.regions[i].area > 0) out << "CHARGE " << i + 1 << " " << to_fraction(charges.regions[i].area) << "\n";
  for (const auto& c : checks) out << format_check(c) << "\n";
  return out.str();
}

}  // namespace sqpack
