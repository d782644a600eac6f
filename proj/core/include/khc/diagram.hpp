#pragma once
// Planar diagrams of oriented links, given by PD codes with a basepoint.
//
// A crossing X(a,b,c,d) lists the four edges counterclockwise starting from
// the incoming under-strand: the under-strand runs a -> c, the over-strand
// occupies b and d.  Edge labels must increase along each component (with a
// single wraparound from the maximum back to the minimum), which is what lets
// the code recover orientations, so the over-strand runs d -> b at a positive
// crossing and b -> d at a negative one.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace khc {

struct Crossing {
  int a, b, c, d;
};

struct Diagram {
  std::vector<Crossing> crossings;
  int unknots = 0;                 // crossingless split components
  std::optional<int> basepoint;    // edge label; defaults to the least edge

  int n_crossings() const { return static_cast<int>(crossings.size()); }
  // Signs derived from the successor structure: +1 or -1 per crossing.
  std::vector<int> signs() const;
  int writhe() const;
  // Number of edges contributed by crossings (2n) plus one per unknot.
  int n_edges() const;
  int basepoint_edge() const;      // resolved default
  // True when the basepoint lies on a crossingless component.
  bool basepoint_on_unknot() const;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse the textual PD form, e.g.
//   X(1,5,2,4) X(3,1,4,6) X(5,3,6,2) bp 1
//   U bp 1
// Validation order: basepoint existence, then edge degrees, then component
// traversal, then the ascending-label orientation convention.
Diagram parse_pd(const std::string& text);

std::string to_pd_string(const Diagram& d);

// Mirror image: switch every crossing, X(a,b,c,d) -> X(d,a,b,c).  The result
// is relabeled to restore the ascending convention.
Diagram mirror(const Diagram& d);

// Rewrite edge labels to the canonical traversal order (each component gets a
// contiguous ascending run, components ordered by their least original label).
Diagram relabel(const Diagram& d);

// Closure of a braid word on `strands` strands; generator i (1-based, sign
// gives the crossing sense) is sigma_i.  Labels come out canonical.
Diagram braid_closure(int strands, const std::vector<int>& word);

// Torus link T(p, q) as the closure of (sigma_1 ... sigma_{p-1})^q, mirrored
// when q < 0.  T(p, 0) is p split unknots.
Diagram gen_torus_link(int p, int q);

// Two-bridge link b(p, q), 0 < q <= |p|, via the continued-fraction twist
// construction; gcd(p, q) = 1 gives a knot.  Negative p mirrors.
Diagram gen_two_bridge(int p, int q);

}  // namespace khc
