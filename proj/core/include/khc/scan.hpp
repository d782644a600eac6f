#pragma once
// Scanning computation of reduced Khovanov homology over F2.
//
// Crossings are glued in one at a time.  The partial invariant is a complex
// of crossingless tangles in a disk: objects are planar matchings of the
// current frontier, morphisms are F2 sums of dotted cobordisms written in
// the neck-cut basis (every component a disk with 0 or 1 dots).  After each
// gluing the complex is delooped and cancelled, so object counts stay near
// the homology rank and the whole run is polynomial in practice.
//
// The basepoint edge is never closed: its two ends stay on the frontier as
// sentinels, so the final complex lives over a single arc and its generators
// give the reduced homology directly (dotted endomorphisms die in the
// reduced theory).

#include <cstdint>
#include <map>
#include <vector>

#include "khc/diagram.hpp"
#include "khc/gradings.hpp"

namespace khc {

// Frontier points are edge ends, identified by the edge label they carry.
// The basepoint cut contributes two reserved sentinel points.
inline constexpr int kCutA = 1000000000;
inline constexpr int kCutB = 1000000001;

// A planar matching, as sorted point pairs.
using Matching = std::vector<std::pair<int, int>>;

struct ScanObject {
  Matching arcs;
  int q2, h2;
};

// One F2 morphism between two objects with the same frontier: a set of dot
// masks over the cycles of (source arcs) union (target arcs), cycles ordered
// by least frontier point.  All masks of one arrow carry the same popcount.
struct ScanArrow {
  std::vector<std::uint64_t> terms;  // sorted, XOR-accumulated
};

struct ScanStats {
  int max_objects = 0;
  int max_frontier = 0;
  long long cancellations = 0;
};

// Reduced Khovanov homology via scanning; agrees with kh_reduced_cube on
// every diagram small enough for the cube.
BigradedDims kh_reduced_scan(const Diagram& d, ScanStats* stats = nullptr);

}  // namespace khc
