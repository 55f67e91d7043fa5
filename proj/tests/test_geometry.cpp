#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqpack/geometry.hpp"

#include <random>

using namespace sqpack;

namespace {

Scalar q(const char* s) { return parse_scalar(s); }
IntervalSet iset(std::initializer_list<std::pair<const char*, const char*>> parts) {
  std::vector<Interval> v;
  for (auto [lo, hi] : parts) v.emplace_back(q(lo), q(hi));
  return IntervalSet(v);
}
Rect rect(const char* x0, const char* y0, const char* x1, const char* y1) { return Rect(q(x0), q(y0), q(x1), q(y1)); }

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(q("3/6") == make_scalar(1, 2));
  CHECK(q("0.125") == make_scalar(1, 8));
  CHECK(q("-2") == Scalar(-2));
  CHECK(q("1.") == Scalar(1));
  CHECK(to_fraction(Scalar(0)) == "0/1");
  CHECK(to_fraction(make_scalar(6, 4)) == "3/2");
  CHECK(to_string(Scalar(2)) == "2");
  CHECK(dyadic(3) == make_scalar(1, 8));
  CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q("abc"), std::invalid_argument);
  CHECK_THROWS_AS(q(""), std::invalid_argument);
}

TEST_CASE("interval set union") {
  CHECK(interval_set_union(iset({{"0", "1/2"}}), iset({{"1/2", "1"}})) == iset({{"0", "1"}}));
  CHECK(interval_set_union(IntervalSet{}, iset({{"1/4", "3/4"}})) == iset({{"1/4", "3/4"}}));
  CHECK(interval_set_union(iset({{"0", "1/4"}, {"1/2", "1"}}), iset({{"1/8", "5/8"}})) == iset({{"0", "1"}}));
}

TEST_CASE("interval set intersect") {
  CHECK(interval_set_intersect(iset({{"0", "1"}}), iset({{"1/4", "1/2"}})) == iset({{"1/4", "1/2"}}));
  CHECK(interval_set_intersect(iset({{"0", "1/4"}}), iset({{"1/2", "1"}})).empty());
  CHECK(interval_set_intersect(iset({{"0", "1/2"}, {"3/4", "1"}}), iset({{"1/4", "7/8"}})) ==
        iset({{"1/4", "1/2"}, {"3/4", "7/8"}}));
}

TEST_CASE("interval set subtract") {
  CHECK(interval_set_subtract(iset({{"0", "1"}}), iset({{"1/4", "1/2"}})) == iset({{"0", "1/4"}, {"1/2", "1"}}));
  CHECK(interval_set_subtract(iset({{"0", "1"}}), IntervalSet{}) == iset({{"0", "1"}}));
  CHECK(interval_set_subtract(iset({{"0", "1"}}), iset({{"0", "1"}})).empty());
}

TEST_CASE("removing open intervals keeps touching points") {
  std::vector<Interval> blocks{Interval(q("-1/2"), q("1/2")), Interval(q("1/2"), q("1"))};
  IntervalSet r = remove_open_intervals(Interval(Scalar(0), Scalar(1)), blocks);
  CHECK(r == iset({{"1/2", "1/2"}, {"1", "1"}}));
}

TEST_CASE("interval set identities on random dyadic sets") {
  std::mt19937_64 rng(7);
  auto random_set = [&] {
    std::vector<Interval> v;
    int n = static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      long a = static_cast<long>(rng() % 33), b = static_cast<long>(rng() % 33);
      if (a > b) std::swap(a, b);
      v.emplace_back(make_scalar(a, 32), make_scalar(b, 32));
    }
    return IntervalSet(v);
  };
  for (int it = 0; it < 500; ++it) {
    IntervalSet a = random_set(), b = random_set();
    CHECK(interval_set_union(a, b).length() + interval_set_intersect(a, b).length() == a.length() + b.length());
    IntervalSet back = interval_set_union(interval_set_subtract(a, b), interval_set_intersect(a, b));
    CHECK(back.length() == a.length());
    // Lengths measured on a fine grid of midpoints.
    for (int k = 0; k < 64; ++k) {
      Scalar x = make_scalar(2 * k + 1, 128);
      CHECK(interval_set_union(a, b).contains(x) == (a.contains(x) || b.contains(x)));
      CHECK(interval_set_intersect(a, b).contains(x) == (a.contains(x) && b.contains(x)));
    }
  }
}

TEST_CASE("profile max over open interiors") {
  StepProfile flat;
  CHECK(profile_max_over(flat, Interval(Scalar(0), Scalar(1))) == 0);
  std::vector<Rect> rs{rect("0", "0", "1/2", "1/4")};
  StepProfile p = StepProfile::upper_envelope(rs);
  CHECK(profile_max_over(p, Interval(q("1/2"), Scalar(1))) == 0);
  CHECK(profile_max_over(p, Interval(q("1/4"), q("3/4"))) == q("1/4"));
  CHECK_THROWS(profile_max_over(p, Interval(q("1/4"), q("1/4"))));
}

TEST_CASE("free components") {
  SUBCASE("solid block") {
    std::vector<Rect> obs{rect("0", "0", "1", "1")};
    CHECK(free_components(obs, Scalar(1)).empty());
  }
  SUBCASE("step under a lid") {
    std::vector<Rect> obs{rect("0", "0", "1/2", "1/2"), rect("1/2", "0", "1", "1/4"), rect("0", "1/2", "1", "3/2")};
    auto holes = free_components(obs, q("3/2"));
    REQUIRE(holes.size() == 1);
    CHECK(holes[0].area() == q("1/8"));
    CHECK(holes[0].bounding_box() == rect("1/2", "1/4", "1", "1/2"));
  }
  SUBCASE("U-shaped notch") {
    std::vector<Rect> obs{rect("0", "0", "3/8", "1/4"), rect("5/8", "0", "1", "1/4"), rect("0", "1/4", "1", "5/4")};
    auto holes = free_components(obs, q("5/4"));
    REQUIRE(holes.size() == 1);
    CHECK(holes[0].area() == q("1/16"));
    auto cyc = holes[0].boundary_cycle();
    CHECK(cyc.size() == 4);
  }
  SUBCASE("overlapping obstacles rejected") {
    std::vector<Rect> obs{rect("0", "0", "1/2", "1/2"), rect("1/4", "1/4", "3/4", "3/4")};
    CHECK_THROWS_AS(free_components(obs, Scalar(1)), std::invalid_argument);
  }
  SUBCASE("components touching at a corner stay separate") {
    // Two pockets meeting only at the point (1/2, 1/4).
    std::vector<Rect> obs{rect("0", "0", "1/2", "1/4"), rect("1/2", "1/4", "1", "1/2"), rect("0", "1/2", "1", "3/2")};
    auto holes = free_components(obs, q("3/2"));
    REQUIRE(holes.size() == 2);
    CHECK(holes[0].area() + holes[1].area() == q("1/4"));
  }
}

TEST_CASE("free area identity on random stacked rows") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    // Rows of dyadic blocks, each row resting on a full-width slab, then a lid.
    std::vector<Rect> obs;
    Scalar y = 0;
    for (int row = 0; row < 3; ++row) {
      Scalar x = 0;
      Scalar h = make_scalar(static_cast<long>(rng() % 4 + 1), 8);
      while (x < 1) {
        Scalar w = make_scalar(static_cast<long>(rng() % 4 + 1), 16);
        if (x + w > 1) w = 1 - x;
        if (rng() % 2) obs.emplace_back(x, y, x + w, y + h * make_scalar(static_cast<long>(rng() % 4 + 1), 4));
        x += w;
      }
      y += h;
      obs.emplace_back(Scalar(0), y, Scalar(1), y + make_scalar(1, 16));
      y += make_scalar(1, 16);
    }
    Scalar used = 0;
    for (const auto& r : obs) used += r.area();
    Scalar free_area = 0;
    for (const auto& h : free_components(obs, y)) {
      free_area += h.area();
      CHECK_NOTHROW(h.boundary_cycle());
    }
    CHECK(free_area + used == y);
  }
}

TEST_CASE("leading zeros are decimal") {
  CHECK(q("010/012") == make_scalar(5, 6));
  CHECK(q("00.5") == make_scalar(1, 2));
  CHECK(q("0.0625") == make_scalar(1, 16));
}
