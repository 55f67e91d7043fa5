#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqpack/io.hpp"
#include "sqpack/strategy.hpp"

using namespace sqpack;

namespace {

Scalar q(const char* s) { return parse_scalar(s); }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("instance parsing") {
  InstanceFile f = parse_instance("1/2\n1/2\n3/5\n");
  CHECK(f.sides == std::vector<Scalar>{q("1/2"), q("1/2"), q("3/5")});
  CHECK(f.lines == std::vector<int>{1, 2, 3});

  f = parse_instance("0.25 # quarter\n");
  CHECK(f.sides == std::vector<Scalar>{q("1/4")});

  f = parse_instance("# header\n\n  1 \n\n0.5\n");
  CHECK(f.sides == std::vector<Scalar>{q("1"), q("1/2")});
  CHECK(f.lines == std::vector<int>{3, 5});
}

TEST_CASE("instance errors name the line") {
  CHECK_THROWS_WITH_AS(parse_instance("5/4\n"), "line 1: side 5/4 is not in (0,1]", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("1/2\n0\n"), "line 2: side 0 is not in (0,1]", ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("1/2\nabc\n"), "line 2: bad side 'abc'", ParseError);
  CHECK_THROWS_AS(parse_instance("1/2 1/4\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("1/0\n"), ParseError);
}

TEST_CASE("instance text round trip") {
  std::vector<Scalar> s{q("1/3"), q("1"), q("0.125")};
  CHECK(parse_instance(format_instance(s)).sides == s);
}

TEST_CASE("placements csv") {
  Packing p;
  p.add(Placement{make_item(1, q("1")), q("0"), q("0")});
  CHECK(placements_csv(p) == "id,side,x,y\n1,1/1,0/1,0/1\n");

  Packing three = bl_run(make_items({q("1/2"), q("1/2"), q("3/5")}));
  std::string csv = placements_csv(three);
  CHECK(csv == "id,side,x,y\n1,1/2,0/1,0/1\n2,1/2,1/2,0/1\n3,3/5,0/1,1/2\n");
  auto back = parse_placements_csv(csv);
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(back[i].item.id == three.placements()[i].item.id);
    CHECK(back[i].side() == three.placements()[i].side());
    CHECK(back[i].x == three.placements()[i].x);
    CHECK(back[i].y == three.placements()[i].y);
  }
  CHECK(verify_packing(make_items({q("1/2"), q("1/2"), q("3/5")}), back).passed());
}

TEST_CASE("placements csv errors") {
  CHECK_THROWS_AS(parse_placements_csv(""), ParseError);
  CHECK_THROWS_AS(parse_placements_csv("a,b,c,d\n"), ParseError);
  CHECK_THROWS_AS(parse_placements_csv("id,side,x,y\n1,1/2,0\n"), ParseError);
  CHECK_THROWS_AS(parse_placements_csv("id,side,x,y\nx,1/2,0,0\n"), ParseError);
  CHECK_THROWS_AS(parse_placements_csv("id,side,x,y\n1,3/2,0,0\n"), ParseError);
}

TEST_CASE("svg rendering") {
  std::string empty = render_svg(Packing{});
  CHECK(count(empty, "<rect") == 1);
  CHECK(count(empty, "class=\"square\"") == 0);

  Packing three = bl_run(make_items({q("1/2"), q("1/2"), q("3/5")}));
  std::string svg = render_svg(three);
  CHECK(count(svg, "class=\"square\"") == 3);
  CHECK(svg == render_svg(three));
  // y axis points up: the first square sits at the bottom of the 1.1 tall strip.
  CHECK(svg.find("<rect class=\"square\" x=\"10.000\" y=\"250.000\" width=\"200.000\"") != std::string::npos);

  SvgOptions opt;
  opt.hatched.push_back(Rect(q("3/5"), q("1/2"), q("1"), q("11/10")));
  std::string hatched = render_svg(three, opt);
  CHECK(count(hatched, "class=\"hole\"") == 1);
  CHECK(hatched.find("url(#hatch)") != std::string::npos);
}

TEST_CASE("random sides stay on the grid") {
  auto a = gen_random(200, 7, q("1/64"), q("1"));
  CHECK(a == gen_random(200, 7, q("1/64"), q("1")));
  CHECK(a != gen_random(200, 8, q("1/64"), q("1")));
  for (const auto& s : a) {
    CHECK(s >= q("1/64"));
    CHECK(s <= 1);
    CHECK(boost::multiprecision::denominator(s * (1L << 20)) == 1);
  }
  auto narrow = gen_random(50, 1, q("1/3"), q("1/3") + q("1/1048576"));
  for (const auto& s : narrow) CHECK(s == q("349526/1048576"));
  CHECK_THROWS_AS(gen_random(5, 1, q("1/3"), q("1/3")), std::invalid_argument);
}

TEST_CASE("run statistics") {
  RunStats s = run_stats(bl_run(make_items({q("1/2"), q("1/2"), q("3/5")})));
  CHECK(s.n == 3);
  CHECK(s.height == q("11/10"));
  CHECK(s.area_sum == q("43/50"));
  CHECK(s.max_side == q("3/5"));
  CHECK(s.ratio == q("55/43"));
  CHECK(format_stats(s).find("height 11/10\n") != std::string::npos);

  RunStats tall = run_stats(bl_run(make_items({q("1/10")})));
  CHECK(tall.ratio == 1);
}
