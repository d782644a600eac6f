#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "khc/diagram.hpp"
#include "khc/inversions.hpp"
#include "khc/scan.hpp"
#include "khc/typed.hpp"
#include "test_util.hpp"

using namespace khc;

namespace {

const char* kDataFile = KHC_DATA_DIR "/inversions.txt";

InversionRecord record(const std::string& line) { return parse_record(line); }

BigradedDims negated(const BigradedDims& d) {
  BigradedDims out;
  for (const auto& [g, dim] : d.table()) out.add(-g.q2, -g.h2, dim);
  return out;
}

long long expected_surgery(const InversionRecord& r, int n) {
  return 4LL * r.n + (n == r.k ? 2 : std::abs(n - r.k));
}

}  // namespace

TEST_CASE("record grammar round-trips and rejects malformed lines") {
  const InversionRecord r =
      record("knot=4_1 inv=1 k=0 n=2 shifts=(5/2,11/2);(13/2,9/2)");
  CHECK(r.knot == "4_1");
  CHECK(r.inv == 1);
  CHECK(r.k == 0);
  CHECK(r.n == 2);
  REQUIRE(r.shifts2.size() == 2);
  CHECK(r.shifts2[0] == std::pair<int, int>{5, 11});
  CHECK(r.shifts2[1] == std::pair<int, int>{13, 9});
  CHECK(r.str() == "knot=4_1 inv=1 k=0 n=2 shifts=(5/2,11/2);(13/2,9/2)");

  // integer shifts print without a denominator and reparse
  InversionRecord w;
  w.knot = "x";
  w.inv = 2;
  w.k = -8;
  w.n = 1;
  w.shifts2 = {{4, -2}};
  CHECK(w.str() == "knot=x inv=2 k=-8 n=1 shifts=(2,-1)");
  CHECK(record(w.str()).shifts2[0] == std::pair<int, int>{4, -2});

  CHECK_THROWS(record(""));
  CHECK_THROWS(record("knot=a inv=1 k=4 n=1"));
  CHECK_THROWS(record("inv=1 knot=a k=4 n=1 shifts=(1,1)"));
  CHECK_THROWS(record("knot=a inv=3 k=4 n=1 shifts=(1,1)"));
  CHECK_THROWS(record("knot=a inv=1 k=x n=1 shifts=(1,1)"));
  CHECK_THROWS(record("knot=a inv=1 k=4 n=0 shifts="));
  CHECK_THROWS(record("knot=a inv=1 k=4 n=2 shifts=(1,1)"));
  CHECK_THROWS(record("knot=a inv=1 k=4 n=1 shifts=(1/3,1)"));
  CHECK_THROWS(record("knot=a inv=1 k=4 n=1 shifts=(1;1)"));
  CHECK_THROWS(record("knot=a inv=1 k=4 n=1 shifts=(1,1) junk"));
}

TEST_CASE("table files load with line-numbered errors") {
  CHECK_THROWS(load_table("/nonexistent/inversions.txt"));

  const std::string bad = "/tmp/khc_bad_inversions.txt";
  std::ofstream(bad) << "# header\n\n"
                        "knot=a inv=1 k=4 n=1 shifts=(1/2,-1/2)\n"
                        "knot=b inv=1 k=oops n=1 shifts=(1,1)\n";
  try {
    load_table(bad);
    FAIL("malformed slope was accepted");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":4:") != std::string::npos);
  }

  const std::string empty = "/tmp/khc_empty_inversions.txt";
  std::ofstream(empty) << "# nothing but comments\n\n";
  CHECK(load_table(empty).empty());
}

TEST_CASE("stored shifts place the kappa blocks exactly") {
  // The left trefoil carries the unshifted special, so its kappa is the
  // bare pairing of a(0) with s_2(inf).
  const InversionRecord t = record("knot=3_1 inv=1 k=-4 n=1 shifts=(1/2,-1/2)");
  CHECK(kappa(t) == khtest::dims({{-5, -2, 1}, {-1, 0, 1}, {1, 1, 1}, {5, 3, 1}}));

  const InversionRecord m = record("knot=m3_1 inv=1 k=4 n=1 shifts=(-1/2,1/2)");
  CHECK(kappa(m) ==
        khtest::dims({{-5, -3, 1}, {-1, -1, 1}, {1, 0, 1}, {5, 2, 1}}));
  CHECK(kappa(m) == negated(kappa(t)));

  const InversionRecord f =
      record("knot=4_1 inv=1 k=0 n=2 shifts=(5/2,11/2);(13/2,9/2)");
  CHECK(kappa(f) == khtest::dims({{11, 0, 1},
                                  {15, 2, 1},
                                  {17, 3, 1},
                                  {21, 5, 1},
                                  {17, 4, 1},
                                  {21, 6, 1},
                                  {23, 7, 1},
                                  {27, 9, 1}}));

  const InversionRecord n1 = record(
      "knot=9_46 inv=1 k=8 n=4 "
      "shifts=(1/2,1/2);(5/2,1/2);(9/2,1/2);(11/2,3/2)");
  CHECK(kappa(n1) == khtest::dims({{-3, -2, 1},
                                   {1, 0, 2},
                                   {3, 1, 1},
                                   {5, 2, 2},
                                   {7, 3, 2},
                                   {9, 3, 1},
                                   {9, 4, 1},
                                   {11, 5, 2},
                                   {13, 5, 1},
                                   {15, 6, 1},
                                   {15, 7, 1},
                                   {19, 8, 1}}));
  CHECK(kappa(n1).total() == 16);
}

TEST_CASE("quotient multicurves close to the unknot at infinity") {
  const TypeD ainf =
      curve_to_typeD(Curve{CurveKind::Arc, Slope::infinity(), 1, 0, 0});
  for (const InversionRecord& r : load_table(kDataFile)) {
    CAPTURE(r.knot);
    const Multicurve mc = quotient_multicurve(r);
    REQUIRE(mc.size() == size_t(r.n) + 1);
    CHECK(mc[0].kind == CurveKind::Rational);
    CHECK(mc[0].slope == Slope::make(r.k, 1));
    BigradedDims total;
    for (const Curve& c : mc) total.merge(mor_pair(ainf, curve_to_typeD(c)));
    // one class, sitting at the origin: infinity surgery is the unknot
    CHECK(total == khtest::dims({{0, 0, 1}}));
    CHECK(unknot_closure_check(mc));
  }

  CHECK_FALSE(unknot_closure_check({}));
  // special components at slope 0 meet a(inf) four times each
  const Multicurve off{Curve{CurveKind::Rational, Slope::make(4, 1), 1, 0, 0},
                       Curve{CurveKind::Special, Slope::make(0, 1), 2, 0, 0},
                       Curve{CurveKind::Special, Slope::make(0, 1), 2, 0, 0}};
  CHECK_FALSE(unknot_closure_check(off));
  CHECK_THROWS(
      unknot_closure_check({Curve{CurveKind::Arc, Slope::make(0, 1), 1, 0, 0}}));
}

TEST_CASE("surgery dimensions count torus-link intersections") {
  const InversionRecord m = record("knot=m3_1 inv=1 k=4 n=1 shifts=(-1/2,1/2)");
  CHECK(surgery_dim(m, Slope::infinity()) == 1);
  CHECK(surgery_dim(m, Slope::make(4, 1)) == 6);
  for (int n = -8; n <= 12; ++n)
    CHECK(surgery_dim(m, Slope::make(n, 1)) == expected_surgery(m, n));

  // the rational summand is a two-strand torus link in disguise
  for (int d : {-3, -2, 2, 3})
    CHECK(surgery_dim(m, Slope::make(m.k + d, 1)) - 4 ==
          kh_reduced_scan(gen_torus_link(2, d)).total());

  // away from the rational slope the dimension moves by one per step
  const InversionRecord big = record(
      "knot=9_46 inv=2 k=12 n=7 "
      "shifts=(1/2,1/2);(5/2,1/2);(9/2,1/2);(13/2,1/2);(15/2,3/2);(17/2,1/2);"
      "(21/2,3/2)");
  long long prev = surgery_dim(big, Slope::make(-1, 1));
  for (int n = 0; n <= 20; ++n) {
    const long long cur = surgery_dim(big, Slope::make(n, 1));
    CHECK(cur == expected_surgery(big, n));
    CHECK(std::abs(cur - prev) == 1);
    prev = cur;
  }

  // fractional slopes fall back on the intersection count
  CHECK(surgery_dim(m, Slope::make(1, 2)) == 15);
}

TEST_CASE("the two inversions of 9_46 never agree on a surgery") {
  const std::vector<InversionRecord> table = load_table(kDataFile);
  std::vector<InversionRecord> nine;
  for (const auto& r : table)
    if (r.knot == "9_46") nine.push_back(r);
  REQUIRE(nine.size() == 2);
  CHECK(kappa(nine[0]).total() == 16);
  CHECK(kappa(nine[1]).total() == 28);
  CHECK(nine[0].k != nine[1].k);
  CHECK(nine[0].n != nine[1].n);
  for (int n = -20; n <= 20; ++n)
    CHECK(surgery_dim(nine[0], Slope::make(n, 1)) !=
          surgery_dim(nine[1], Slope::make(n, 1)));
  CHECK(surgery_dim(nine[0], Slope::infinity()) ==
        surgery_dim(nine[1], Slope::infinity()));
}

TEST_CASE("zero surgery has vanishing determinant") {
  for (const InversionRecord& r : load_table(kDataFile)) {
    CAPTURE(r.knot);
    CHECK(det_zero_check(r));
  }
  // a slope off the 4Z lattice cannot cancel the special blocks
  CHECK_FALSE(det_zero_check(record("knot=a inv=1 k=2 n=1 shifts=(1/2,-1/2)")));
  CHECK_FALSE(det_zero_check(record("knot=a inv=1 k=6 n=1 shifts=(1/2,-1/2)")));
  // right slope, wrong delta parity on the special
  CHECK_FALSE(det_zero_check(record("knot=a inv=1 k=-4 n=1 shifts=(1/2,1/2)")));
}

TEST_CASE("conjecture audits pass on shipped data and catch violations") {
  for (const InversionRecord& r : load_table(kDataFile)) {
    CAPTURE(r.knot);
    CHECK(kappa(r).total() == 4 * r.n);
    CHECK(audit_conjectures(r).all());
  }

  const InversionRecord t = record("knot=3_1 inv=1 k=-4 n=1 shifts=(1/2,-1/2)");
  const AuditReport odd = audit_conjectures(
      t, {Curve{CurveKind::Special, Slope::infinity(), 1, 0, 0}});
  CHECK_FALSE(odd.even_special_lengths);
  CHECK(odd.kappa_sum_of_Vk);
  CHECK(odd.k_multiple_of_4);
  CHECK_FALSE(odd.all());

  const AuditReport slope =
      audit_conjectures(record("knot=a inv=1 k=6 n=1 shifts=(1/2,-1/2)"));
  CHECK_FALSE(slope.k_multiple_of_4);
  CHECK(slope.even_special_lengths);
  CHECK(slope.kappa_sum_of_Vk);
}

TEST_CASE("emitter output is sorted and stable") {
  std::vector<InversionRecord> rs = {
      record("knot=m3_1 inv=1 k=4 n=1 shifts=(-1/2,1/2)"),
      record("knot=3_1 inv=1 k=-4 n=1 shifts=(1/2,-1/2)")};
  std::ostringstream os;
  emit_table(os, rs);
  CHECK(os.str() ==
        "# conventions: quantum gradings integral (doubled), delta = q/2 - h\n"
        "3_1^1  k=-4  n=1  dim=4  kappa = h^{1/2} delta^{-1/2} Vk\n"
        "m3_1^1  k=4  n=1  dim=4  kappa = h^{-1/2} delta^{1/2} Vk\n");

  std::ostringstream table;
  emit_table(table, load_table(kDataFile));
  const std::string out = table.str();
  CHECK(out.find("4_1^1  k=0  n=2  dim=8  kappa = h^{5/2} delta^{11/2} Vk + "
                 "h^{13/2} delta^{9/2} Vk") != std::string::npos);
  CHECK(out.find("9_46^1") < out.find("9_46^2"));
  CHECK(out.find("9_46^2") < out.find("m3_1^1"));
}

TEST_CASE("shipped table matches its own textual form") {
  const std::vector<InversionRecord> table = load_table(kDataFile);
  REQUIRE(table.size() == 5);
  for (const InversionRecord& r : table) {
    CAPTURE(r.knot);
    CHECK(r.n >= 1);
    CHECK(r.k % 4 == 0);
    CHECK(int(r.shifts2.size()) == r.n);
    const InversionRecord back = record(r.str());
    CHECK(back.knot == r.knot);
    CHECK(back.inv == r.inv);
    CHECK(back.k == r.k);
    CHECK(back.shifts2 == r.shifts2);
  }
  CHECK(table[0].knot == "3_1");
  CHECK(table[0].k == -4);
  CHECK(table[4].knot == "m3_1");
  CHECK(table[4].k == 4);
}
