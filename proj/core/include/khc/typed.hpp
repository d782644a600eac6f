#pragma once
// Type D structures over the two-idempotent arc algebra B, the translation
// between symbolic curves and their complexes, and the bigraded pairing
// Hom-complex homology.
//
// The algebra has idempotents * (generators sitting on the vertical
// parametrizing arc) and o (generators on the horizontal one), and two
// families of basic elements: S^k toggles the idempotent by the parity of k
// with q-degree -k, D^k preserves it with q-degree -2k.  Mixed products S.D
// and D.S vanish.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khc/curves.hpp"
#include "khc/gradings.hpp"

namespace khc {

enum class Idem : std::uint8_t { Dot = 0, Circ = 1 };  // Dot = *, Circ = o

// Basic algebra element: iota (k == 0), S^k, D^k, or zero.
struct AlgElt {
  enum class Family : std::uint8_t { Zero, Iota, S, D } family = Family::Iota;
  int k = 0;
  Idem src = Idem::Dot;  // meaningful for nonzero elements

  static AlgElt zero() { return {Family::Zero, 0, Idem::Dot}; }
  static AlgElt iota(Idem i) { return {Family::Iota, 0, i}; }
  static AlgElt S(int k, Idem src);
  static AlgElt D(int k, Idem src);
  bool is_zero() const { return family == Family::Zero; }
  Idem dst() const;
  int q2() const;  // doubled q-degree: -2k for S^k, -4k for D^k
  friend bool operator==(const AlgElt&, const AlgElt&) = default;
  std::string str() const;
};

// a then b; zero unless dst(a) == src(b) and the families are compatible.
AlgElt alg_mul(const AlgElt& a, const AlgElt& b);

struct TypeDGen {
  Idem idem = Idem::Dot;
  int q2 = 0, h2 = 0;
};

struct TypeDArrow {
  int src = 0, dst = 0;
  AlgElt label;
};

// A finite type D structure: generators with bigradings, arrows raising h by
// one whose labels absorb the q-discrepancy.
struct TypeD {
  std::vector<TypeDGen> gens;
  std::vector<TypeDArrow> arrows;

  std::string dump() const;  // stable textual form, one line per gen/arrow
};

// Structure checks: arrow degrees (h +1, q balanced by the label), nonzero
// labels, d^2 = 0 over F2.  Throws std::runtime_error with a description.
void validate(const TypeD& t);

// The complex of a symbolic curve.  Supported: arcs a(m), a(inf); rationals
// r_1(m), r_1(inf), r_1(0); specials s_{2n}(inf).  Grading shifts on the
// curve are applied to the generators.
TypeD curve_to_typeD(const Curve& c);

// Gaussian elimination over B: repeatedly remove iota-labeled arrow pairs.
// The result is reduced (no invertible arrows).
TypeD cancel(const TypeD& t);

// Identify a reduced complex as a supported symbolic curve, including its
// grading shift.  Returns nullopt for complexes outside the dictionary.
std::optional<Curve> classify(const TypeD& t);

// Homology of the pairing complex Mor(x, y) with differential from both
// structure maps.  x and y must be complexes of curves; gradings follow
// q(m) = q(y) - q(x) + q(label), h(m) = h(y) - h(x), and the differential
// raises h by one.  Computed exactly, one finite q-slice at a time.
PairingResult mor_pair(const TypeD& x, const TypeD& y);

// Intersection-theoretic pairing for an arc against a loop-type complex,
// computed from the arrow pattern without homological algebra.  Supported
// for a(0) and a(inf) against loop complexes; used as the independent
// cross-check of mor_pair.
PairingResult geometric_pair(const Curve& arc, const TypeD& loop);

}  // namespace khc
