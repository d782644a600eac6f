#include "doctest.h"

#include <map>
#include <random>

#include "khc/cube.hpp"
#include "khc/diagram.hpp"
#include "test_util.hpp"

using namespace khc;
using khtest::dims;

namespace {

// d is a map gen -> targets; check d(d(x)) = 0 over F2 and gradings.
void check_complex(const CubeComplex& c) {
  for (size_t i = 0; i < c.gens.size(); ++i) {
    std::map<int, int> twice;
    for (int j : c.d[i]) {
      CHECK(c.gens[j].h2 == c.gens[i].h2 + 2);
      CHECK(c.gens[j].q2 == c.gens[i].q2);
      for (int k : c.d[j]) twice[k] ^= 1;
    }
    for (const auto& [k, parity] : twice) {
      (void)k;
      CHECK(parity == 0);
    }
  }
}

}  // namespace

TEST_CASE("reduced unknot sits at the origin") {
  CHECK(kh_reduced_cube(parse_pd("U bp 1")) == dims({{0, 0, 1}}));
  CHECK(kh_reduced_cube(parse_pd("X(2,2,1,1)")) == dims({{0, 0, 1}}));
  CHECK(kh_reduced_cube(parse_pd("X(1,2,2,1)")) == dims({{0, 0, 1}}));
}

TEST_CASE("split unknots tensor in") {
  CHECK(kh_reduced_cube(braid_closure(2, {})) ==
        dims({{-1, 0, 1}, {1, 0, 1}}));
  CHECK(kh_reduced_cube(braid_closure(3, {})).total() == 4);
}

TEST_CASE("trefoil values") {
  BigradedDims pos = dims({{2, 0, 1}, {6, 2, 1}, {8, 3, 1}});
  CHECK(kh_reduced_cube(braid_closure(2, {1, 1, 1})) == pos);
  CHECK(kh_reduced_cube(gen_torus_link(2, 3)) == pos);
  // mirrors negate both gradings
  BigradedDims neg = dims({{-2, 0, 1}, {-6, -2, 1}, {-8, -3, 1}});
  CHECK(kh_reduced_cube(gen_torus_link(2, -3)) == neg);
  CHECK(kh_reduced_cube(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) bp 1")) ==
        neg);
  CHECK(kh_reduced_cube(gen_torus_link(2, 3)).determinant() == 3);
}

TEST_CASE("hopf link and small torus links") {
  CHECK(kh_reduced_cube(gen_torus_link(2, 2)) == dims({{1, 0, 1}, {5, 2, 1}}));
  CHECK(kh_reduced_cube(gen_torus_link(2, 4)) ==
        dims({{3, 0, 1}, {7, 2, 1}, {9, 3, 1}, {11, 4, 1}}));
  CHECK(kh_reduced_cube(gen_torus_link(2, 5)) ==
        dims({{4, 0, 1}, {8, 2, 1}, {10, 3, 1}, {12, 4, 1}, {14, 5, 1}}));
  // T(3,2) is the trefoil again
  CHECK(kh_reduced_cube(gen_torus_link(3, 2)) ==
        dims({{2, 0, 1}, {6, 2, 1}, {8, 3, 1}}));
}

TEST_CASE("torus knot T(3,4)") {
  // first non-thin case: one pair breaks off the main diagonal
  BigradedDims t34 = kh_reduced_cube(gen_torus_link(3, 4));
  CHECK(t34 ==
        dims({{6, 0, 1}, {10, 2, 1}, {12, 3, 1}, {12, 4, 1}, {16, 5, 1}}));
  CHECK(t34.determinant() == 3);
}

TEST_CASE("two-bridge diagrams are thin with dim = det = |p|") {
  for (auto [p, q] : {std::pair{3, 1}, {5, 2}, {7, 2}, {7, 3}, {9, 2}, {5, 4},
                      {8, 3}, {4, 1}, {6, 1}}) {
    BigradedDims kh = kh_reduced_cube(gen_two_bridge(p, q));
    CAPTURE(p);
    CAPTURE(q);
    CHECK(kh.total() == p);
    CHECK(kh.determinant() == p);
    // delta-thin: single diagonal
    int d2 = 1 << 30;
    for (const auto& [bg, n] : kh.table()) {
      (void)n;
      if (d2 == 1 << 30) d2 = delta2(bg.q2, bg.h2);
      CHECK(delta2(bg.q2, bg.h2) == d2);
    }
  }
}

TEST_CASE("figure eight table") {
  CHECK(kh_reduced_cube(gen_two_bridge(5, 2)) ==
        dims({{-4, -2, 1}, {-2, -1, 1}, {0, 0, 1}, {2, 1, 1}, {4, 2, 1}}));
}

TEST_CASE("mirror negates the table") {
  std::mt19937 rng(20240817);
  for (int t = 0; t < 12; ++t) {
    Diagram d = khtest::random_closure(rng, 7);
    BigradedDims a = kh_reduced_cube(d);
    BigradedDims b = kh_reduced_cube(mirror(d));
    BigradedDims flip;
    for (const auto& [bg, n] : a.table()) flip.add(-bg.q2, -bg.h2, n);
    CHECK(b == flip);
  }
}

TEST_CASE("complex invariants on random diagrams") {
  std::mt19937 rng(20240817 + 1);
  for (int t = 0; t < 30; ++t) {
    Diagram d = khtest::random_closure(rng, 8);
    check_complex(build_reduced_cube(d));
  }
}

TEST_CASE("oracle bound enforced") {
  CHECK_THROWS(build_reduced_cube(gen_torus_link(2, 15)));
  CHECK_NOTHROW(build_reduced_cube(gen_torus_link(2, 14)));
}
