#pragma once
// Bigraded dimension bookkeeping over F2.
//
// All quantum (q) and homological (h) gradings are stored doubled, so that
// half-integer gradings stay exact integers.  The delta grading q/2 - h is
// never stored; it is recomputed from the doubled pair when needed.

#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace khc {

// Render a doubled integer as "n" or "p/2".
std::string frac2(int x2);

struct Bigrading {
  int q2 = 0;
  int h2 = 0;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

// delta doubled: 2*delta = q - 2h.  Requires q2 even (q integral), which holds
// for every link homology and every pairing this library produces.
inline int delta2(int q2, int h2) {
  assert(q2 % 2 == 0);
  return q2 / 2 - h2;
}

class BigradedDims {
 public:
  void add(int q2, int h2, long long dim = 1);
  long long at(int q2, int h2) const;
  long long total() const;
  bool operator==(const BigradedDims&) const = default;

  // Shift every class by (dq2, dh2).
  BigradedDims shifted(int dq2, int dh2) const;
  // Union with another dimension table.
  void merge(const BigradedDims& other);
  // Tensor with a two-dimensional space in quantum degrees +1/-1; used for
  // split unknot components.
  BigradedDims tensor_circle() const;

  // Euler characteristic with respect to the delta grading: the signed count
  // sum_i i^(2*delta) * dim, a Gaussian integer (re, im).  For any single link
  // all 2*delta share one parity, so at most one of re, im is nonzero.
  std::pair<long long, long long> euler_delta() const;
  // |euler_delta| as a non-negative integer; equals the link determinant for
  // reduced Khovanov homology.
  long long determinant() const;

  const std::map<Bigrading, long long>& table() const { return dims_; }

  std::string pretty() const;  // one "q=.. h=.. dim=.." line per class
  std::string tsv() const;     // "q\th\tdim" rows

 private:
  std::map<Bigrading, long long> dims_;
};

using PairingResult = BigradedDims;

}  // namespace khc
