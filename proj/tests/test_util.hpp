#pragma once
// Shared helpers for the test suites.

#include <array>
#include <initializer_list>
#include <random>
#include <vector>

#include "khc/diagram.hpp"
#include "khc/gradings.hpp"

namespace khtest {

// Build a table from (q, h, dim) triples in ordinary (undoubled) units.
inline khc::BigradedDims dims(std::initializer_list<std::array<int, 3>> rows) {
  khc::BigradedDims out;
  for (const auto& r : rows) out.add(2 * r[0], 2 * r[1], r[2]);
  return out;
}

// Random braid closure with at most max_crossings crossings.
inline khc::Diagram random_closure(std::mt19937& rng, int max_crossings) {
  int strands = std::uniform_int_distribution<int>(2, 4)(rng);
  int len = std::uniform_int_distribution<int>(0, max_crossings)(rng);
  std::vector<int> word;
  for (int i = 0; i < len; ++i) {
    int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
    word.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g);
  }
  return khc::braid_closure(strands, word);
}

}  // namespace khtest
