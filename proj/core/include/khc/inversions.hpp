#pragma once
// Strong inversion records: the quotient multicurve of an involutive knot,
// its kappa invariant, and the consistency audits tying the curve data to
// surgery formulas and determinants.

#include <iosfwd>
#include <string>
#include <vector>

#include "khc/curves.hpp"
#include "khc/gradings.hpp"

namespace khc {

// One strong inversion, as shipped in data/inversions.txt:
//   knot=<name> inv=<index> k=<int> n=<int> shifts=(a1,b1);(a2,b2);...
// k is the rational slope, n the number of special components, and each
// (a_i, b_i) the h- and delta-shift (in halves) of the i-th special.
struct InversionRecord {
  std::string knot;
  int inv = 1;
  int k = 0;
  int n = 0;
  std::vector<std::pair<int, int>> shifts2;  // doubled (a, b) pairs

  std::string str() const;
};

InversionRecord parse_record(const std::string& line);
std::vector<InversionRecord> load_table(const std::string& path);
void emit_table(std::ostream& os, const std::vector<InversionRecord>& table);

// The multicurve underlying the record: r_1(k) carrying the absolute shift
// that puts the infinity-surgery pairing class at (0, 0), plus n specials
// s_2(inf) shifted by (2(a_i + b_i), a_i - 1/2) against the symmetric word.
Multicurve quotient_multicurve(const InversionRecord& r);

// kappa: the pairing of a(0) with the special part, as bigraded dimensions.
BigradedDims kappa(const InversionRecord& r);

// dim H of the branch set of (p/q)-surgery: pair a(p/q) against the full
// quotient multicurve.
long long surgery_dim(const InversionRecord& r, const Slope& pq);

// Infinity surgery recovers the unknot: total pairing against a(inf) is
// one-dimensional.
bool unknot_closure_check(const Multicurve& mc);

// The determinant of the 0-surgery branch set vanishes: the delta-graded
// Euler characteristic of the pairing against a(0) is zero.
bool det_zero_check(const InversionRecord& r);

struct AuditReport {
  bool kappa_sum_of_Vk = false;  // kappa is a direct sum of 4-dim blocks V_k
  bool even_special_lengths = false;
  bool k_multiple_of_4 = false;
  bool all() const {
    return kappa_sum_of_Vk && even_special_lengths && k_multiple_of_4;
  }
};

AuditReport audit_conjectures(const InversionRecord& r);
// Variant running the length audit on an explicit multicurve (lets tests
// exercise the failure cases the shipped records cannot produce).
AuditReport audit_conjectures(const InversionRecord& r, const Multicurve& mc);

}  // namespace khc
