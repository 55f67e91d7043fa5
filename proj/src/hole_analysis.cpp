#include "sqpack/hole_analysis.hpp"

#include "sqpack/strategy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace sqpack {

std::string to_string(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::bottom: return "bottom";
    case Side::right: return "right";
    case Side::top: return "top";
  }
  return "?";
}

std::string to_string(HoleType t) { return t == HoleType::type_i ? "I" : "II"; }

std::string to_string(WallContact w) {
  switch (w) {
    case WallContact::none: return "none";
    case WallContact::left: return "left";
    case WallContact::right: return "right";
  }
  return "?";
}

Scalar BoundaryPiece::length() const { return abs(to.x - from.x) + abs(to.y - from.y); }

bool BoundaryPiece::contains(const Point& p) const {
  if (from.x == to.x)
    return p.x == from.x && std::min(from.y, to.y) <= p.y && p.y <= std::max(from.y, to.y);
  return p.y == from.y && std::min(from.x, to.x) <= p.x && p.x <= std::max(from.x, to.x);
}

Scalar BoundaryRun::length_on(Side s) const {
  Scalar total = 0;
  for (const auto& pc : pieces)
    if (pc.side == s) total += pc.length();
  return total;
}

std::size_t Hole::square_count() const {
  return static_cast<std::size_t>(
      std::count_if(runs.begin(), runs.end(), [](const BoundaryRun& r) { return r.owner.is_square(); }));
}

Packing close_packing(const Packing& p) {
  Placement pl = bl_place_next(p, make_item(static_cast<int>(p.size()) + 1, Scalar(1)));
  if (pl.x != 0 || pl.y != packing_height(p))
    throw InvariantError("closing square did not land at (0, height)");
  Packing closed = p;
  closed.add(pl);
  return closed;
}

namespace {

std::string show(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

std::string show(const Owner& o) {
  switch (o.kind) {
    case OwnerKind::square: return "square " + std::to_string(o.index + 1);
    case OwnerKind::floor: return "floor";
    case OwnerKind::left_wall: return "left wall";
    case OwnerKind::right_wall: return "right wall";
    case OwnerKind::virtual_lid: return "virtual lid " + std::to_string(o.index);
    case OwnerKind::cut: return "cut " + std::to_string(o.index);
  }
  return "?";
}

struct Context {
  std::vector<Rect> rects;
  Scalar ceiling;
  std::vector<VirtualLid> lids;

  Rect owner_rect(const Owner& o) const {
    switch (o.kind) {
      case OwnerKind::square: return rects.at(static_cast<std::size_t>(o.index));
      case OwnerKind::floor: return Rect(Scalar(0), Scalar(-1), Scalar(1), Scalar(0));
      case OwnerKind::left_wall: return Rect(Scalar(-1), Scalar(0), Scalar(0), ceiling);
      case OwnerKind::right_wall: return Rect(Scalar(1), Scalar(0), Scalar(2), ceiling);
      case OwnerKind::virtual_lid:
      case OwnerKind::cut: return lids.at(static_cast<std::size_t>(o.index)).copy();
    }
    throw InvariantError("unknown owner");
  }
};

bool right_neighbor(const Rect& a, const Rect& b) { return b.left() == a.right() && a.ys.overlaps_open(b.ys); }
bool top_neighbor(const Rect& a, const Rect& b) { return b.bottom() == a.top() && a.xs.overlaps_open(b.xs); }
bool bottom_neighbor(const Rect& a, const Rect& b) { return b.top() == a.bottom() && a.xs.overlaps_open(b.xs); }
// Contact that may reduce to a shared corner.
bool touches_right(const Rect& a, const Rect& b) { return b.left() == a.right() && b.bottom() <= a.top() && a.bottom() <= b.top(); }
bool touches_below(const Rect& a, const Rect& b) { return b.top() == a.bottom() && b.left() <= a.right() && a.left() <= b.right(); }

struct Cover {
  Scalar lo;
  Scalar hi;
  Owner owner;
  Side side;
};

// A hole under construction: its cells plus the virtual segments that may
// bound it.
struct Work {
  Hole hole;
  std::vector<Owner> virtual_owners;
  std::optional<int> own_lid;
  std::optional<Point> dl_origin;
};

std::vector<BoundaryPiece> attribute(const Context& cx, const Work& w) {
  std::vector<BoundaryPiece> pieces;
  for (const auto& e : w.hole.region.boundary_cycle()) {
    std::vector<Cover> covers;
    bool horizontal = e.from.y == e.to.y;
    bool forward = horizontal ? e.to.x > e.from.x : e.to.y > e.from.y;
    Scalar lo = horizontal ? std::min(e.from.x, e.to.x) : std::min(e.from.y, e.to.y);
    Scalar hi = horizontal ? std::max(e.from.x, e.to.x) : std::max(e.from.y, e.to.y);
    IntervalSet open_parts = IntervalSet::single(lo, hi);

    auto take = [&](const Interval& span, const Owner& o, Side s) {
      for (const auto& part : open_parts.parts()) {
        Scalar a = std::max(part.lo, span.lo), b = std::min(part.hi, span.hi);
        if (a < b) covers.push_back({a, b, o, s});
      }
    };

    if (horizontal) {
      const Scalar& y = e.from.y;
      // Interior above (moving +x) or below (moving -x).
      for (const auto& vo : w.virtual_owners) {
        const VirtualLid& lid = cx.lids.at(static_cast<std::size_t>(vo.index));
        if (lid.m.y != y) continue;
        if ((forward && vo.kind == OwnerKind::cut) || (!forward && vo.kind == OwnerKind::virtual_lid))
          take(Interval(lid.m.x, lid.n.x), vo, forward ? Side::top : Side::bottom);
      }
      Scalar taken = 0;
      for (const auto& c : covers) taken += c.hi - c.lo;
      if (taken > 0) {
        std::vector<Interval> used;
        for (const auto& c : covers) used.emplace_back(c.lo, c.hi);
        open_parts = interval_set_subtract(open_parts, IntervalSet(used));
      }
      for (std::size_t i = 0; i < cx.rects.size(); ++i) {
        const Rect& r = cx.rects[i];
        if (forward ? r.top() == y : r.bottom() == y) take(r.xs, Owner{OwnerKind::square, static_cast<int>(i)}, forward ? Side::top : Side::bottom);
      }
      if (forward && y == 0) take(Interval(Scalar(0), Scalar(1)), Owner{OwnerKind::floor, -1}, Side::top);
    } else {
      const Scalar& x = e.from.x;
      // Moving +y: material to the east. Moving -y: material to the west.
      for (std::size_t i = 0; i < cx.rects.size(); ++i) {
        const Rect& r = cx.rects[i];
        if (forward ? r.left() == x : r.right() == x) take(r.ys, Owner{OwnerKind::square, static_cast<int>(i)}, forward ? Side::left : Side::right);
      }
      if (!forward && x == 0) take(Interval(Scalar(0), cx.ceiling), Owner{OwnerKind::left_wall, -1}, Side::right);
      if (forward && x == 1) take(Interval(Scalar(0), cx.ceiling), Owner{OwnerKind::right_wall, -1}, Side::left);
    }

    Scalar covered = 0;
    for (const auto& c : covers) covered += c.hi - c.lo;
    if (covered != hi - lo)
      throw InvariantError("hole boundary edge " + show(e.from) + "-" + show(e.to) + " is not covered by the packing");
    std::sort(covers.begin(), covers.end(), [&](const Cover& a, const Cover& b) { return forward ? a.lo < b.lo : a.lo > b.lo; });
    for (const auto& c : covers) {
      Point from = horizontal ? Point{forward ? c.lo : c.hi, e.from.y} : Point{e.from.x, forward ? c.lo : c.hi};
      Point to = horizontal ? Point{forward ? c.hi : c.lo, e.from.y} : Point{e.from.x, forward ? c.hi : c.lo};
      if (!pieces.empty() && pieces.back().owner == c.owner && pieces.back().side == c.side && pieces.back().to == from) {
        pieces.back().to = to;
      } else {
        pieces.push_back({from, to, c.owner, c.side});
      }
    }
  }
  if (pieces.size() > 1 && pieces.front().owner == pieces.back().owner && pieces.front().side == pieces.back().side &&
      pieces.back().to == pieces.front().from) {
    pieces.front().from = pieces.back().from;
    pieces.pop_back();
  }
  return pieces;
}

// Groups pieces into owner runs and identifies the lid, P, Q and wall contact.
void rebuild(const Context& cx, Work& w) {
  Hole& h = w.hole;
  std::vector<BoundaryPiece> pieces = attribute(cx, w);

  bool left = false, right = false;
  for (const auto& pc : pieces) {
    left = left || pc.owner.kind == OwnerKind::left_wall;
    right = right || pc.owner.kind == OwnerKind::right_wall;
  }
  if (left && right) throw InvariantError("hole " + std::to_string(h.id) + " touches both strip walls");
  h.wall = left ? WallContact::left : right ? WallContact::right : WallContact::none;
  h.virtual_lid = w.own_lid;

  auto find_piece = [&](auto pred) -> std::size_t {
    std::size_t found = pieces.size();
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (pred(pieces[i])) {
        if (found != pieces.size()) throw InvariantError("hole " + std::to_string(h.id) + ": boundary owner appears twice");
        found = i;
      }
    return found;
  };

  std::size_t lid = pieces.size();
  if (w.own_lid) {
    lid = find_piece([&](const BoundaryPiece& pc) { return pc.owner == Owner{OwnerKind::virtual_lid, *w.own_lid}; });
  } else if (h.wall == WallContact::left) {
    std::size_t wall = find_piece([](const BoundaryPiece& pc) { return pc.owner.kind == OwnerKind::left_wall; });
    lid = (wall + pieces.size() - 1) % pieces.size();
  } else if (h.wall == WallContact::right) {
    std::size_t wall = find_piece([](const BoundaryPiece& pc) { return pc.owner.kind == OwnerKind::right_wall; });
    lid = (wall + 1) % pieces.size();
  } else {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const auto& pc = pieces[i];
      if (pc.side != Side::bottom || pc.from.y != pc.to.y) continue;
      if (lid == pieces.size() || pc.from.y > pieces[lid].from.y ||
          (pc.from.y == pieces[lid].from.y && pc.to.x < pieces[lid].to.x))
        lid = i;
    }
  }
  if (lid >= pieces.size() || pieces[lid].side != Side::bottom)
    throw InvariantError("hole " + std::to_string(h.id) + ": no lid segment found");
  h.p = pieces[lid].to;
  h.q = pieces[lid].from;

  // Rotate so that the lid run comes first.
  std::size_t start = lid;
  std::size_t guard = 0;
  while (pieces[(start + pieces.size() - 1) % pieces.size()].owner == pieces[lid].owner) {
    start = (start + pieces.size() - 1) % pieces.size();
    if (++guard > pieces.size()) throw InvariantError("hole " + std::to_string(h.id) + " is bounded by a single owner");
  }
  h.runs.clear();
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    const auto& pc = pieces[(start + j) % pieces.size()];
    if (h.runs.empty() || !(h.runs.back().owner == pc.owner)) h.runs.push_back({pc.owner, {}});
    h.runs.back().pieces.push_back(pc);
  }
  if (h.runs.size() > 1 && h.runs.front().owner == h.runs.back().owner)
    throw InvariantError("hole " + std::to_string(h.id) + ": lid run is not contiguous");

  // Each square contributes one connected curve.
  std::set<int> seen;
  for (const auto& r : h.runs)
    if (r.owner.is_square() && !seen.insert(r.owner.index).second)
      throw InvariantError("hole " + std::to_string(h.id) + ": " + show(r.owner) + " meets the boundary in two curves");
}

Work make_work(const Context& cx, int id, RectilinearRegion region) {
  Work w;
  w.hole.id = id;
  w.hole.area = region.area();
  w.hole.region = std::move(region);
  rebuild(cx, w);
  return w;
}

// Left diagonal origin P'.
Point left_diagonal_origin(const Context& cx, const Hole& h) {
  if (h.k() < 3) throw InvariantError("hole " + std::to_string(h.id) + " has fewer than three boundary owners");
  const BoundaryRun& second = h.run(2);
  if (!second.owner.is_square())
    throw InvariantError("hole " + std::to_string(h.id) + ": A~_2 is " + show(second.owner) + ", not a square");
  if (second.pieces.back().side == Side::right) return second.end();
  Rect r = cx.owner_rect(second.owner);
  return Point{r.right(), r.bottom()};
}

// Whether the slope -1 ray leaving p downwards starts inside the hole.
bool runs_into(const Hole& h, const Point& p) {
  return std::any_of(h.region.cells().begin(), h.region.cells().end(), [&](const Rect& cell) {
    return cell.left() <= p.x && p.x < cell.right() && cell.bottom() < p.y && p.y <= cell.top();
  });
}

// Horizontal extent of the part of the left diagonal inside the open hole.
Scalar diagonal_overlap(const Hole& h, const Point& origin) {
  Scalar c = origin.x + origin.y;
  Scalar total = 0;
  for (const auto& cell : h.region.cells()) {
    Scalar lo = std::max({cell.left(), c - cell.top(), origin.x});
    Scalar hi = std::min(cell.right(), c - cell.bottom());
    if (lo < hi) total += hi - lo;
  }
  return total;
}

struct Crossing {
  std::size_t run;  // zero-based
  Point f;
  bool case_b;
};

std::optional<Crossing> find_crossing(const Context& cx, const Hole& h, const Point& origin) {
  Scalar c = origin.x + origin.y;
  for (std::size_t i = 2; i < h.k(); ++i) {
    const BoundaryRun& run = h.runs[i];
    if (!run.owner.is_square()) continue;
    Rect r = cx.owner_rect(run.owner);
    if (!(r.left() + r.bottom() < c && c < r.right() + r.top())) continue;
    Scalar xf = std::min(r.right(), c - r.bottom());
    if (xf <= origin.x) continue;
    Point f{xf, c - xf};
    // Only a crossing that lets the diagonal run on into the hole counts;
    // touching the boundary at a corner does not.
    if (!runs_into(h, f)) continue;
    bool case_b = xf < r.right() || f.y == r.bottom();
    return Crossing{i, f, case_b};
  }
  return std::nullopt;
}

// Splits w along MN; returns the part below the cut and leaves the rest in w.
Work split(Context& cx, Work& w, const Crossing& cr, std::set<int>& copied, int next_id) {
  const Hole& h = w.hole;
  std::size_t up_run = cr.case_b ? cr.run : cr.run - 1;
  std::size_t low_run = cr.case_b ? cr.run + 1 : cr.run;
  if (low_run >= h.k()) throw InvariantError("hole " + std::to_string(h.id) + ": crossing at the end of the boundary");
  const Owner& up = h.runs[up_run].owner;
  const Owner& low = h.runs[low_run].owner;
  if (!up.is_square() || !low.is_square())
    throw InvariantError("hole " + std::to_string(h.id) + ": split squares are " + show(up) + " and " + show(low));
  Rect ur = cx.owner_rect(up), lr = cx.owner_rect(low);
  if (!bottom_neighbor(ur, lr))
    throw InvariantError("" + show(low) + " is not a bottom neighbor of " + show(up) + " in hole " +
                         std::to_string(h.id));

  Point m{lr.right(), lr.top()};
  const Scalar& y = m.y;
  std::vector<Interval> below;
  for (const auto& c : h.region.cells())
    if (c.bottom() < y && y <= c.top()) below.push_back(c.xs);
  IntervalSet unsupported(below);
  std::optional<Interval> section;
  for (const auto& part : unsupported.parts())
    if (part.hi > m.x) {
      section = part;
      break;
    }
  if (!section || section->lo != m.x)
    throw InvariantError("leftmost unsupported section right of " + show(m) + " does not start there (hole " +
                         std::to_string(h.id) + ")");
  Point n{section->hi, y};
  if (!(n.x - m.x < ur.width()))
    throw InvariantError("|MN| = " + to_string(n.x - m.x) + " is not below the side " + to_string(ur.width()) +
                         " of " + show(up));
  if (!copied.insert(up.index).second) throw InvariantError("second virtual copy of " + show(up));

  int lid_index = static_cast<int>(cx.lids.size());
  cx.lids.push_back(VirtualLid{up.index, low.index, m, n, cr.case_b, ur.width()});

  std::vector<Rect> cells;
  for (const auto& c : h.region.cells()) {
    if (!(c.bottom() < y && y < c.top() && c.xs.overlaps_open(Interval(m.x, n.x)))) {
      cells.push_back(c);
      continue;
    }
    std::vector<Scalar> xs{c.left()};
    if (c.left() < m.x && m.x < c.right()) xs.push_back(m.x);
    if (c.left() < n.x && n.x < c.right()) xs.push_back(n.x);
    xs.push_back(c.right());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (Interval(xs[i], xs[i + 1]).overlaps_open(Interval(m.x, n.x))) {
        cells.emplace_back(xs[i], c.bottom(), xs[i + 1], y);
        cells.emplace_back(xs[i], y, xs[i + 1], c.top());
      } else {
        cells.emplace_back(xs[i], c.bottom(), xs[i + 1], c.top());
      }
    }
  }
  std::vector<Rect> cut{Rect(m.x, y, n.x, y)};
  auto comps = cell_components(cells, cut);
  if (comps.size() != 2)
    throw InvariantError("hole " + std::to_string(h.id) + ": cutting along MN gives " + std::to_string(comps.size()) +
                         " parts");
  auto is_star = [&](const std::vector<Rect>& comp) {
    return std::any_of(comp.begin(), comp.end(), [&](const Rect& c) {
      return c.top() == y && m.x <= c.left() && c.right() <= n.x;
    });
  };
  std::size_t star_i = is_star(comps[0]) ? 0 : 1;
  if (!is_star(comps[star_i]) || is_star(comps[1 - star_i]))
    throw InvariantError("hole " + std::to_string(h.id) + ": cannot tell the parts of the split apart");

  Work star;
  star.hole.id = next_id;
  star.hole.parent = h.id;
  star.hole.region = RectilinearRegion(std::move(comps[star_i]));
  star.hole.area = star.hole.region.area();
  if (star.hole.region.bounding_box().top() != y)
    throw InvariantError("part below MN rises above the cut in hole " + std::to_string(h.id));
  star.virtual_owners = w.virtual_owners;
  star.virtual_owners.push_back(Owner{OwnerKind::virtual_lid, lid_index});
  star.own_lid = lid_index;
  rebuild(cx, star);

  w.hole.region = RectilinearRegion(std::move(comps[1 - star_i]));
  w.hole.area = w.hole.region.area();
  w.virtual_owners.push_back(Owner{OwnerKind::cut, lid_index});
  rebuild(cx, w);
  return star;
}

void check_right_diagonal(const Hole& h, const Point& qp) {
  Scalar d = qp.y - qp.x;
  for (const auto& c : h.region.cells()) {
    Scalar lo = std::max(c.left(), c.bottom() - d);
    Scalar hi = std::min({c.right(), c.top() - d, qp.x});
    if (lo < hi)
      throw InvariantError("right diagonal from " + show(qp) + " enters hole " + std::to_string(h.id));
  }
}

HoleType classify(const Context& cx, const Hole& h) {
  if (h.k() < 3) throw InvariantError("hole " + std::to_string(h.id) + " has fewer than three boundary owners");
  Rect prev = cx.owner_rect(h.run(h.k() - 1).owner);
  Rect last = cx.owner_rect(h.run(h.k()).owner);
  if (right_neighbor(prev, last)) return HoleType::type_i;
  if (top_neighbor(prev, last)) return HoleType::type_ii;
  throw InvariantError("in hole " + std::to_string(h.id) + ", " + show(h.run(h.k()).owner) +
                       " is neither a right nor a top neighbor of " + show(h.run(h.k() - 1).owner));
}

void finalize(const Context& cx, Hole& h) {
  const std::size_t k = h.k();
  if (k < 3) throw InvariantError("hole " + std::to_string(h.id) + " has fewer than three boundary owners");
  const BoundaryRun& lid = h.run(1);
  Scalar beta1 = BoundaryPiece{h.q, h.p, lid.owner, Side::bottom}.length();

  auto add = [&](const Owner& o, Side s, bool copy, Scalar coef, const Scalar& len) {
    if (!o.is_square() || len == 0) return;
    h.terms.push_back({SideKey{o.index, s, copy}, std::move(coef), len});
  };
  auto add_lid = [&] {
    if (!h.virtual_lid) {
      add(lid.owner, Side::bottom, false, Scalar(1), beta1);
      return;
    }
    const VirtualLid& vl = cx.lids.at(static_cast<std::size_t>(*h.virtual_lid));
    Rect ur = cx.rects.at(static_cast<std::size_t>(vl.up));
    Rect lr = cx.rects.at(static_cast<std::size_t>(vl.low));
    Owner up{OwnerKind::square, vl.up};
    if (ur.left() < lr.left()) {
      add(up, Side::bottom, true, make_scalar(1, 2), beta1);
      if (vl.case_b) add(up, Side::bottom, false, Scalar(1), std::min(ur.right(), lr.right()) - std::max(ur.left(), lr.left()));
    } else {
      add(up, Side::bottom, false, Scalar(1), beta1);
    }
  };

  if (h.wall == WallContact::left) {
    const BoundaryRun& last = h.run(k);
    if (!last.owner.is_square()) throw InvariantError("left-wall hole " + std::to_string(h.id) + " ends at " + show(last.owner));
    Scalar lambda = last.length_on(Side::left);
    h.bound = beta1 * beta1 + lambda * lambda / 2;
    add_lid();
    add(last.owner, Side::left, false, make_scalar(1, 2), lambda);
    h.dr_origin = h.run(k - 1).end();
    check_right_diagonal(h, *h.dr_origin);
    return;
  }

  Scalar rho2 = h.run(2).length_on(Side::right);
  h.bound = beta1 * beta1 + rho2 * rho2 / 2;
  add_lid();
  add(h.run(2).owner, Side::right, false, make_scalar(1, 2), rho2);
  if (h.wall == WallContact::right) return;

  h.type = classify(cx, h);
  if (*h.type == HoleType::type_ii) {
    Scalar beta_k = h.run(k).length_on(Side::bottom);
    Scalar lambda = h.run(k - 1).length_on(Side::left);
    h.bound += beta_k * beta_k + lambda * lambda / 2;
    add(h.run(k).owner, Side::bottom, false, Scalar(1), beta_k);
    add(h.run(k - 1).owner, Side::left, false, make_scalar(1, 2), lambda);
  }

  // Consecutive squares between A~_2 and A~_{k-1} step down or right.
  for (std::size_t i = 2; i + 2 <= k; ++i) {
    const Owner& a = h.run(i).owner;
    const Owner& b = h.run(i + 1).owner;
    if (!a.is_square() || b.kind == OwnerKind::cut || b.kind == OwnerKind::virtual_lid) continue;
    Rect ar = cx.owner_rect(a), br = cx.owner_rect(b);
    if (!touches_below(ar, br) && !touches_right(ar, br))
      throw InvariantError("in hole " + std::to_string(h.id) + ", " + show(b) + " follows " + show(a) +
                           " without being its bottom or right neighbor");
  }

  h.dr_origin = *h.type == HoleType::type_i ? h.run(k - 1).end() : h.run(k - 2).end();
  check_right_diagonal(h, *h.dr_origin);
}

Context make_context(const Packing& closed) {
  Context cx;
  cx.rects = closed.rects();
  cx.ceiling = packing_height(closed);
  return cx;
}

}  // namespace

std::vector<Hole> extract_holes(const Packing& closed) {
  Context cx = make_context(closed);
  std::vector<Hole> out;
  int id = 0;
  for (auto& region : free_components(cx.rects, cx.ceiling)) out.push_back(make_work(cx, ++id, std::move(region)).hole);
  return out;
}

HoleType classify_hole(const Packing& closed, const Hole& h, const std::vector<VirtualLid>& lids) {
  Context cx = make_context(closed);
  cx.lids = lids;
  if (h.wall != WallContact::none) throw InvariantError("hole " + std::to_string(h.id) + " touches a strip wall");
  return classify(cx, h);
}

BottomLeftAnalysis analyze_bottom_left(const Packing& p) {
  BottomLeftAnalysis a;
  a.closed = close_packing(p);
  a.height = packing_height(p);
  for (const auto& r : p.rects()) a.area_sum += r.area();

  Context cx = make_context(a.closed);
  std::deque<Work> queue;
  int next_id = 0;
  for (auto& region : free_components(cx.rects, cx.ceiling)) {
    Work w = make_work(cx, ++next_id, std::move(region));
    a.extracted.push_back(w.hole);
    queue.push_back(std::move(w));
  }

  std::set<int> copied;
  std::size_t splits = 0;
  while (!queue.empty()) {
    Work w = std::move(queue.front());
    queue.pop_front();
    if (w.hole.wall != WallContact::left) {
      w.dl_origin = left_diagonal_origin(cx, w.hole);
      // A diagonal that starts inside the hole has no first crossing to split at.
      while (!runs_into(w.hole, *w.dl_origin)) {
        auto cr = find_crossing(cx, w.hole, *w.dl_origin);
        if (!cr) break;
        if (++splits > 10000) throw InvariantError("hole splitting does not terminate");
        queue.push_back(split(cx, w, *cr, copied, ++next_id));
      }
    }
    w.hole.dl_origin = w.dl_origin;
    if (w.dl_origin) w.hole.diagonal_overlap = diagonal_overlap(w.hole, *w.dl_origin);
    finalize(cx, w.hole);
    a.holes.push_back(std::move(w.hole));
  }
  std::sort(a.holes.begin(), a.holes.end(), [](const Hole& x, const Hole& y) { return x.id < y.id; });
  a.lids = cx.lids;

  // Per-hole bounds.
  for (const auto& h : a.holes) {
    a.hole_area += h.area;
    a.checks.push_back(check_eq("hole" + std::to_string(h.id) + ".diagonal_free", h.diagonal_overlap, Scalar(0)));
    a.checks.push_back(check_le("hole" + std::to_string(h.id) + ".area_bound", h.area, h.bound));
  }
  Scalar extracted_area = 0;
  for (const auto& h : a.extracted) extracted_area += h.area;
  a.checks.push_back(check_eq("split_preserves_area", a.hole_area, extracted_area));
  a.checks.push_back(check_eq("height_identity", a.height, a.area_sum + extracted_area));

  // Ledger: per side the largest coefficient over all holes.
  std::map<SideKey, Scalar> load;
  for (const auto& h : a.holes)
    for (const auto& t : h.terms) {
      auto [it, fresh] = a.ledger.coefficient.try_emplace(t.key, t.coefficient);
      if (!fresh && t.coefficient > it->second) it->second = t.coefficient;
      load[t.key] += t.coefficient * t.length * t.length;
    }
  const auto& rects = a.closed.rects();
  a.ledger.total.assign(rects.size(), Scalar(0));
  for (const auto& [key, c] : a.ledger.coefficient) a.ledger.total.at(static_cast<std::size_t>(key.square)) += c;

  Scalar worst_slack = 0;
  std::string worst_side = "none";
  for (const auto& [key, l] : load) {
    Scalar side = rects.at(static_cast<std::size_t>(key.square)).width();
    Scalar over = l - a.ledger.coefficient.at(key) * side * side;
    if (worst_side == "none" || over > worst_slack) {
      worst_slack = over;
      worst_side = std::to_string(key.square + 1) + (key.copy ? "'" : "") + "." + to_string(key.side);
    }
  }
  a.checks.push_back(check_le("side_capacity[" + worst_side + "]", worst_slack, Scalar(0)));

  Scalar max_total = 0;
  Scalar all_area = 0;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    Scalar sq = rects[i].area();
    a.ledger.weighted_sum += a.ledger.total[i] * sq;
    all_area += sq;
    max_total = std::max(max_total, a.ledger.total[i]);
  }
  a.checks.push_back(check_le("max_square_charge", max_total, make_scalar(5, 2)));
  a.checks.push_back(check_le("ledger_sound", a.hole_area, a.ledger.weighted_sum));
  a.checks.push_back(check_le("aggregate_hole_bound", a.hole_area, make_scalar(5, 2) * all_area));
  a.checks.push_back(check_le("bottomleft_height_bound", a.height, make_scalar(7, 2) * a.area_sum + make_scalar(5, 2)));
  return a;
}

std::string BottomLeftAnalysis::report() const {
  std::ostringstream out;
  out << "squares " << closed.size() - 1 << "\n";
  out << "height " << to_fraction(height) << "\n";
  out << "area_sum " << to_fraction(area_sum) << "\n";
  out << "hole_area " << to_fraction(hole_area) << "\n";
  out << "holes " << extracted.size() << " split_into " << holes.size() << " virtual_lids " << lids.size() << "\n";
  for (const auto& h : holes) {
    out << "HOLE " << h.id << " parent " << (h.parent < 0 ? std::string("-") : std::to_string(h.parent)) << " area "
        << to_fraction(h.area) << " bound " << to_fraction(h.bound) << " type "
        << (h.type ? to_string(*h.type) : std::string("-")) << " wall " << to_string(h.wall) << " lid "
        << (h.virtual_lid ? "virtual" : "real") << " k " << h.k() << "\n";
  }
  for (std::size_t i = 0; i < ledger.total.size(); ++i)
    if (ledger.total[i] > 0) out << "CHARGE " << i + 1 << " " << to_fraction(ledger.total[i]) << "\n";
  for (const auto& c : checks) out << format_check(c) << "\n";
  return out.str();
}

}  // namespace sqpack
