#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqpack/hole_analysis.hpp"
#include "sqpack/strategy.hpp"

#include <algorithm>
#include <random>

using namespace sqpack;

namespace {

Scalar q(const char* s) { return parse_scalar(s); }

Packing packing_of(std::initializer_list<std::tuple<const char*, const char*, const char*>> sq) {
  Packing p;
  int id = 1;
  for (auto [x, y, a] : sq) p.add(Placement{make_item(id++, q(a)), q(x), q(y)});
  return p;
}

const Hole& hole_with_area(const BottomLeftAnalysis& a, const Scalar& area) {
  for (const auto& h : a.holes)
    if (h.area == area) return h;
  FAIL("no hole of area " << to_fraction(area));
  return a.holes.front();
}

Scalar charge(const BottomLeftAnalysis& a, int square, Side s, bool copy = false) {
  auto it = a.ledger.coefficient.find(SideKey{square, s, copy});
  return it == a.ledger.coefficient.end() ? Scalar(0) : it->second;
}

// Free cells of a 1/16 grid below the closing square, grouped by 4-connectivity.
std::vector<Scalar> grid_hole_areas(const Packing& closed) {
  const int w = 16;
  Scalar top = closed.placements().back().y;
  int rows = static_cast<int>(to_double(top * w) + 0.5);
  std::vector<int> grid(static_cast<std::size_t>(w * rows), 0);
  for (const auto& r : closed.rects())
    for (int y = 0; y < rows; ++y)
      for (int x = 0; x < w; ++x) {
        Scalar cx = make_scalar(2 * x + 1, 2 * w), cy = make_scalar(2 * y + 1, 2 * w);
        if (r.left() < cx && cx < r.right() && r.bottom() < cy && cy < r.top()) grid[y * w + x] = 1;
      }
  std::vector<Scalar> areas;
  for (int s = 0; s < w * rows; ++s) {
    if (grid[s]) continue;
    long cells = 0;
    std::vector<int> stack{s};
    grid[s] = 2;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      ++cells;
      int x = c % w, y = c / w;
      int nb[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
      for (auto& n : nb)
        if (n[0] >= 0 && n[0] < w && n[1] >= 0 && n[1] < rows && !grid[n[1] * w + n[0]]) {
          grid[n[1] * w + n[0]] = 2;
          stack.push_back(n[1] * w + n[0]);
        }
    }
    areas.push_back(make_scalar(cells, w * w));
  }
  std::sort(areas.begin(), areas.end());
  return areas;
}

}  // namespace

TEST_CASE("closing square") {
  Packing c = close_packing(Packing{});
  REQUIRE(c.size() == 1);
  CHECK(c.placements()[0].x == 0);
  CHECK(c.placements()[0].y == 0);
  CHECK(packing_height(c) == 1);

  c = close_packing(packing_of({{"0", "0", "1/2"}}));
  CHECK(c.placements().back().y == q("1/2"));

  c = close_packing(bl_run(make_items({q("1/2"), q("1/2"), q("3/5")})));
  CHECK(c.placements().back().x == 0);
  CHECK(c.placements().back().y == q("11/10"));
}

TEST_CASE("ground row leaves no holes") {
  Packing p = bl_run(make_items({q("1/2"), q("1/2")}));
  CHECK(extract_holes(close_packing(p)).empty());
  BottomLeftAnalysis a = analyze_bottom_left(p);
  CHECK(a.holes.empty());
  CHECK(a.ledger.weighted_sum == 0);
  CHECK(a.passed());
}

TEST_CASE("height identity on a three-square run") {
  BottomLeftAnalysis a = analyze_bottom_left(bl_run(make_items({q("1/2"), q("1/2"), q("3/5")})));
  CHECK(a.height == q("11/10"));
  CHECK(a.hole_area == q("6/25"));
  REQUIRE(a.holes.size() == 1);
  CHECK(a.holes[0].wall == WallContact::right);
  CHECK(a.passed());
}

TEST_CASE("left wall hole charges lid bottom and last left side") {
  // Square of side 3/4 standing off the left wall by 1/4.
  BottomLeftAnalysis a = analyze_bottom_left(packing_of({{"1/4", "0", "3/4"}}));
  REQUIRE(a.holes.size() == 1);
  const Hole& h = a.holes[0];
  CHECK(h.wall == WallContact::left);
  CHECK(h.area == q("3/16"));
  CHECK(h.p == Point{q("0"), q("3/4")});
  CHECK(h.q == Point{q("1/4"), q("3/4")});
  CHECK(h.bound == q("1/16") + q("9/32"));
  CHECK(charge(a, 1, Side::bottom) == 1);
  CHECK(charge(a, 0, Side::left) == q("1/2"));
  CHECK(a.passed());
}

TEST_CASE("right wall hole mirrors the left one") {
  BottomLeftAnalysis a = analyze_bottom_left(packing_of({{"0", "0", "3/4"}}));
  REQUIRE(a.holes.size() == 1);
  const Hole& h = a.holes[0];
  CHECK(h.wall == WallContact::right);
  CHECK(h.area == q("3/16"));
  CHECK(h.bound == q("1/16") + q("9/32"));
  CHECK(charge(a, 1, Side::bottom) == 1);
  CHECK(charge(a, 0, Side::right) == q("1/2"));
  CHECK(a.passed());
}

TEST_CASE("raised U is a Type I hole") {
  // Two 7/16 squares with a 1/8 square between them; the closing square is the lid.
  Packing p = bl_run(make_items({q("7/16"), q("1/8"), q("7/16")}));
  REQUIRE(p.placements()[1].x == q("7/16"));
  REQUIRE(p.placements()[2].x == q("9/16"));
  BottomLeftAnalysis a = analyze_bottom_left(p);
  REQUIRE(a.holes.size() == 1);
  const Hole& h = a.holes[0];
  CHECK(h.wall == WallContact::none);
  CHECK(h.k() == 4);
  CHECK(h.square_count() == 4);
  REQUIRE(h.type);
  CHECK(*h.type == HoleType::type_i);
  CHECK(classify_hole(a.closed, h) == HoleType::type_i);
  CHECK(h.area == q("5/128"));
  CHECK(h.run(1).owner.index == 3);
  CHECK(h.run(2).owner.index == 0);
  CHECK(h.run(3).owner.index == 1);
  CHECK(h.run(4).owner.index == 2);
  CHECK(*h.dl_origin == Point{q("7/16"), q("1/8")});
  CHECK(h.bound == q("1/64") + q("25/512"));
  CHECK(charge(a, 3, Side::bottom) == 1);
  CHECK(charge(a, 0, Side::right) == q("1/2"));
  CHECK(a.passed());
}

TEST_CASE("Type II hole under an overhanging square") {
  Packing p = bl_run(make_items({q("1/2"), q("5/8"), q("1/4"), q("3/8")}));
  BottomLeftAnalysis a = analyze_bottom_left(p);
  const Hole& h = hole_with_area(a, q("1/32"));
  CHECK(h.wall == WallContact::none);
  REQUIRE(h.type);
  CHECK(*h.type == HoleType::type_ii);
  CHECK(h.p == Point{q("1/2"), q("1/2")});
  CHECK(h.q == Point{q("5/8"), q("1/2")});
  // beta_1 = 1/8, rho_2 = 1/4; the last two squares meet the hole only with sides that are not charged.
  CHECK(h.bound == q("1/64") + q("1/32"));
  CHECK(a.hole_area == q("9/32"));
  CHECK(a.passed());
}

TEST_CASE("left diagonal crossing creates a virtual lid") {
  Packing p = bl_run(make_items({q("1/4"), q("5/8"), q("3/4")}));
  BottomLeftAnalysis a = analyze_bottom_left(p);
  REQUIRE(a.extracted.size() == 2);
  REQUIRE(a.holes.size() == 3);
  REQUIRE(a.lids.size() == 1);
  const VirtualLid& lid = a.lids[0];
  CHECK(lid.up == 2);
  CHECK(lid.low == 1);
  CHECK_FALSE(lid.case_b);
  CHECK(lid.m == Point{q("7/8"), q("5/8")});
  CHECK(lid.n == Point{q("1"), q("5/8")});
  CHECK(lid.copy() == Rect(q("1/4"), q("5/8"), q("1"), q("11/8")));

  const Hole& star = hole_with_area(a, q("5/64"));
  CHECK(star.virtual_lid == 0);
  CHECK(star.parent == 1);
  CHECK(star.bound == q("1/64") + q("25/128"));
  const Hole& rest = hole_with_area(a, q("3/16"));
  CHECK_FALSE(rest.virtual_lid);
  CHECK(rest.bound == q("1/16") + q("9/32"));

  // Square 3 (index 2): bottom 1 for the left wall hole, right 1/2, copy bottom 1/2.
  CHECK(charge(a, 2, Side::bottom) == 1);
  CHECK(charge(a, 2, Side::right) == q("1/2"));
  CHECK(charge(a, 2, Side::bottom, true) == q("1/2"));
  CHECK(a.ledger.total[2] == 2);
  CHECK(a.ledger.total[1] == 1);
  CHECK(a.hole_area == q("23/64"));
  CHECK(a.passed());
}

TEST_CASE("diagonal entering a right wall shaft is reported") {
  // Three 3/4 squares stacked at the left leave a 1/4 shaft of depth 3/2 at the right wall.
  BottomLeftAnalysis a = analyze_bottom_left(bl_run(make_items({q("1/4"), q("3/4"), q("3/4"), q("3/4")})));
  const Hole& shaft = hole_with_area(a, q("3/8"));
  CHECK(shaft.wall == WallContact::right);
  CHECK(shaft.diagonal_overlap == q("1/4"));
  CHECK(shaft.bound == q("11/32"));
  CHECK_FALSE(a.passed());
  const CheckLine* f = first_failure(a.checks);
  REQUIRE(f != nullptr);
  CHECK(f->name.find("diagonal_free") != std::string::npos);
}

TEST_CASE("report lines") {
  BottomLeftAnalysis a = analyze_bottom_left(bl_run(make_items({q("1/4"), q("5/8"), q("3/4")})));
  std::string r = a.report();
  CHECK(r.find("height 11/8") != std::string::npos);
  CHECK(r.find("CHECK height_identity PASS 11/8 == 11/8") != std::string::npos);
  CHECK(r.find("HOLE 3 parent 1") != std::string::npos);
}

TEST_CASE("hole areas agree with grid flood fill") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::vector<Scalar> sides;
    for (int i = 0; i < 10; ++i) sides.push_back(make_scalar(static_cast<long>(rng() % 16 + 1), 16));
    Packing closed = close_packing(bl_run(make_items(sides)));
    std::vector<Scalar> got;
    for (const auto& h : extract_holes(closed)) got.push_back(h.area);
    std::sort(got.begin(), got.end());
    CHECK(got == grid_hole_areas(closed));
  }
}

TEST_CASE("random runs keep the hole structure and charge limits") {
  std::mt19937_64 rng(5);
  int diagonal_free = 0;
  for (int t = 0; t < 150; ++t) {
    std::vector<Scalar> sides;
    for (int i = 0; i < 16; ++i) sides.push_back(make_scalar(static_cast<long>(rng() % 64 + 1), 64));
    Packing p = bl_run(make_items(sides));
    BottomLeftAnalysis a;
    REQUIRE_NOTHROW(a = analyze_bottom_left(p));
    Scalar sq = 0;
    for (const auto& r : a.closed.rects()) sq += r.area();
    CHECK(a.height == a.area_sum + a.hole_area);
    CHECK(a.hole_area <= make_scalar(5, 2) * sq);
    for (const auto& c : a.ledger.total) CHECK(c <= make_scalar(5, 2));
    for (const auto& h : a.holes) {
      if (h.diagonal_overlap != 0) continue;
      ++diagonal_free;
      CHECK(h.area <= h.bound);
    }
  }
  CHECK(diagonal_free > 0);
}
