#pragma once
// Symbolic curves on the four-punctured sphere: slopes, mapping class group
// action, and minimal intersection counts.
//
// A curve is either the embedded arc a(p/q) through the two special
// punctures, a rational component r_n(p/q) (n loops around an arc of the
// given slope), or a special component s_n(p/q) trapped near the marked
// puncture (n even in everything this library produces).  Gradings of
// components inside a multicurve are carried as doubled (q, h) shifts
// relative to the symmetric representative.

#include <optional>
#include <string>
#include <vector>

#include "khc/gradings.hpp"

namespace khc {

// Slope p/q in lowest terms; infinity is (1, 0).  q >= 0, and q == 0 forces
// p == 1.
struct Slope {
  int p = 0;
  int q = 1;
  static Slope make(long long p, long long q);  // canonicalizes
  static Slope infinity() { return {1, 0}; }
  bool is_infinity() const { return q == 0; }
  friend auto operator<=>(const Slope&, const Slope&) = default;
  std::string str() const;  // "0", "3/2", "-4", "inf"
};

enum class CurveKind { Arc, Rational, Special };

struct Curve {
  CurveKind kind = CurveKind::Arc;
  Slope slope;
  int n = 1;          // printed subscript of r_n / s_n; arcs have n == 1
  int shift_q2 = 0;   // grading shift against the symmetric representative
  int shift_h2 = 0;
  friend bool operator==(const Curve&, const Curve&) = default;
  std::string str() const;
};

using Multicurve = std::vector<Curve>;

// Mapping classes act through PSL(2, Z), multiplying the column (q, p):
// [[a, b], [c, d]] sends p/q to (c q + d p) / (a q + b p), so the lower-left
// entry is the twisting [[1,0],[k,1]] : p/q -> (p + k q)/q.  Component
// kinds, subscripts and relative grading shifts are preserved.
struct MappingClass {
  long long m[2][2] = {{1, 0}, {0, 1}};  // row-major [[a, b], [c, d]]
};

Slope mcg_apply(const MappingClass& g, const Slope& s);
Curve mcg_apply(const MappingClass& g, const Curve& c);
Multicurve mcg_apply(const MappingClass& g, const Multicurve& mc);

// Minimal geometric intersection number of an arc or closed curve with a
// second curve.  Distinct slopes contribute |p1 q2 - q1 p2| per strand;
// parallel arc/loop pairs contribute 2 per loop strand, parallel arcs are
// rejected (they can be isotoped apart along the punctures).
long long min_intersections(const Curve& x, const Curve& y);

// Parse curve literals: "a(1/2)", "r1(-4)", "s2(inf)", with an optional
// grading prefix as in "h^{5/2} q^{11/2} s2(inf)", and "+"-separated sums
// for multicurves.  Exponents are halves or integers.
Curve parse_curve(const std::string& text);
Multicurve parse_multicurve(const std::string& text);

}  // namespace khc
