#include "doctest.h"

#include <random>

#include "khc/curves.hpp"

using namespace khc;

namespace {

MappingClass mul(const MappingClass& a, const MappingClass& b) {
  MappingClass c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return c;
}

// random word in the twist generators, determinant 1
MappingClass random_mcg(std::mt19937& rng) {
  MappingClass g;
  for (int step = 0; step < 6; ++step) {
    int k = std::uniform_int_distribution<int>(-3, 3)(rng);
    MappingClass t;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      t.m[1][0] = k;  // twist along 0
    } else {
      t.m[0][1] = k;  // twist along inf
    }
    g = mul(t, g);
  }
  return g;
}

}  // namespace

TEST_CASE("slope canonical form") {
  CHECK(Slope::make(2, 4) == Slope::make(1, 2));
  CHECK(Slope::make(-3, -6) == Slope::make(1, 2));
  CHECK(Slope::make(3, -6) == Slope::make(-1, 2));
  CHECK(Slope::make(5, 0) == Slope::infinity());
  CHECK(Slope::make(-5, 0) == Slope::infinity());
  CHECK(Slope::make(0, -7) == Slope::make(0, 1));
  CHECK(Slope::make(4, 1).str() == "4");
  CHECK(Slope::make(-3, 2).str() == "-3/2");
  CHECK(Slope::infinity().str() == "inf");
  CHECK_THROWS(Slope::make(0, 0));
}

TEST_CASE("mapping class action on slopes") {
  MappingClass twist4;
  twist4.m[1][0] = 4;  // [[1,0],[4,1]]
  CHECK(mcg_apply(twist4, Slope::make(0, 1)) == Slope::make(4, 1));
  CHECK(mcg_apply(twist4, Slope::infinity()) == Slope::infinity());

  MappingClass rot;  // [[0,-1],[1,0]]
  rot.m[0][0] = 0;
  rot.m[0][1] = -1;
  rot.m[1][0] = 1;
  rot.m[1][1] = 0;
  Curve arc0 = parse_curve("a(0)");
  CHECK(mcg_apply(rot, arc0) == parse_curve("a(inf)"));

  Curve r10 = parse_curve("r1(0)");
  CHECK(mcg_apply(twist4, r10) == parse_curve("r1(4)"));
  CHECK(mcg_apply(MappingClass{}, parse_curve("s2(inf)")) ==
        parse_curve("s2(inf)"));
}

TEST_CASE("action is a group action") {
  std::mt19937 rng(20240817 + 3);
  for (int t = 0; t < 50; ++t) {
    MappingClass a = random_mcg(rng), b = random_mcg(rng);
    Slope s = Slope::make(std::uniform_int_distribution<int>(-9, 9)(rng),
                          std::uniform_int_distribution<int>(0, 9)(rng) == 0
                              ? 0
                              : std::uniform_int_distribution<int>(1, 9)(rng));
    if (s.q == 0) s = Slope::infinity();
    CHECK(mcg_apply(a, mcg_apply(b, s)) == mcg_apply(mul(a, b), s));
  }
}

TEST_CASE("intersection formulas") {
  // arc against specials: 2 n |det|, so a(0) meets s_{2n}(inf) in 4n points
  for (int n = 1; n <= 10; ++n) {
    Curve s;
    s.kind = CurveKind::Special;
    s.slope = Slope::infinity();
    s.n = 2 * n;
    CHECK(min_intersections(parse_curve("a(0)"), s) == 4 * n);
  }
  CHECK(min_intersections(parse_curve("a(inf)"), parse_curve("s2(inf)")) == 0);

  // arc against rationals: subscript times |det|, or 2n when parallel
  for (int m = -6; m <= 6; ++m) {
    Curve am = parse_curve("a(" + std::to_string(m) + ")");
    Curve r14 = parse_curve("r1(4)");
    CHECK(min_intersections(am, r14) == (m == 4 ? 2 : std::abs(m - 4)));
  }
  CHECK(min_intersections(parse_curve("a(1/2)"), parse_curve("r3(1/2)")) == 6);
  CHECK(min_intersections(parse_curve("r2(0)"), parse_curve("a(1)")) == 2);

  CHECK_THROWS(min_intersections(parse_curve("a(0)"), parse_curve("a(1)")));
  CHECK_THROWS(min_intersections(parse_curve("r1(0)"), parse_curve("s2(0)")));
}

TEST_CASE("intersections are mcg equivariant") {
  std::mt19937 rng(20240817 + 4);
  for (int t = 0; t < 40; ++t) {
    MappingClass g = random_mcg(rng);
    Curve a = parse_curve("a(" + std::to_string(t % 7 - 3) + ")");
    Curve c;
    c.kind = t % 2 ? CurveKind::Rational : CurveKind::Special;
    c.n = t % 2 ? 1 + t % 3 : 2 * (1 + t % 3);
    c.slope = Slope::make(t % 5 - 2, 1 + t % 4);
    CHECK(min_intersections(mcg_apply(g, a), mcg_apply(g, c)) ==
          min_intersections(a, c));
  }
}

TEST_CASE("curve literals round trip") {
  for (const char* text :
       {"a(0)", "a(inf)", "r1(-4)", "r2(1/2)", "s2(inf)",
        "h^{5/2} q^{11/2} s2(inf)", "h^{-3} q^{1/2} r1(0)"}) {
    Curve c = parse_curve(text);
    CHECK(parse_curve(c.str()) == c);
  }
  CHECK(parse_curve("  a( 1 / 2 ) ") == parse_curve("a(1/2)"));
  CHECK_THROWS(parse_curve("a(0) junk"));
  CHECK_THROWS(parse_curve("t3(0)"));
  CHECK_THROWS(parse_curve("r0(1)"));
  CHECK_THROWS(parse_curve("h^{1/3} a(0)"));
}

TEST_CASE("multicurve literals") {
  Multicurve mc = parse_multicurve("r1(4) + 2*s2(inf)");
  CHECK(mc.size() == 3);
  CHECK(mc[0] == parse_curve("r1(4)"));
  CHECK(mc[1] == parse_curve("s2(inf)"));
  CHECK(mc[1] == mc[2]);
  CHECK(parse_multicurve("a(0)").size() == 1);
  CHECK_THROWS(parse_multicurve(""));
  CHECK_THROWS(parse_multicurve("r1(4) +"));
}
