#pragma once
// Reduced Khovanov homology over F2 by the full cube of resolutions.
//
// This is the reference computation: enumerate all 2^n smoothings, take the
// basepointed Frobenius complex, and row-reduce.  It is deliberately naive
// and refuses diagrams with more than kMaxCubeCrossings crossings; the
// scanning algorithm in scan.hpp is the production path.

#include "khc/diagram.hpp"
#include "khc/gradings.hpp"

namespace khc {

inline constexpr int kMaxCubeCrossings = 14;

struct CubeGenerator {
  std::uint32_t vertex;  // smoothing bitmask, bit i = 1-smoothing at crossing i
  std::uint32_t labels;  // bit j set: circle j carries x (degree -1)
  int q2, h2;
};

// The underlying bigraded complex, exposed for d^2 = 0 and rank tests.
struct CubeComplex {
  std::vector<CubeGenerator> gens;
  // differential: for generator index i, indices it maps to (h +1, q fixed).
  std::vector<std::vector<int>> d;
};

CubeComplex build_reduced_cube(const Diagram& d);

// Homology dimensions of the reduced complex, with the global shift
// q += n+ - 2n-, h += -n- applied and split unknot factors tensored in.
BigradedDims kh_reduced_cube(const Diagram& d);

}  // namespace khc
