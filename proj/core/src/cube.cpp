#include "khc/cube.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace khc {
namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);  // keep min edge as rep
  }
};

// Circles of one resolution: representative (minimal edge) per edge, the
// marked circle, and bit positions for the unmarked ones.
struct VertexCircles {
  std::vector<int> rep;      // indexed by edge label
  std::vector<int> unmarked;  // sorted representatives
  std::vector<int> bit;      // indexed by edge label via rep; -1 for marked
  int marked_rep = 0;
};

VertexCircles resolve_vertex(const Diagram& d, uint32_t v, int n_edges, int bp) {
  Dsu dsu(n_edges + 1);
  int n = d.n_crossings();
  for (int i = 0; i < n; ++i) {
    const auto& x = d.crossings[i];
    if (v >> i & 1) {
      dsu.unite(x.a, x.d);
      dsu.unite(x.b, x.c);
    } else {
      dsu.unite(x.a, x.b);
      dsu.unite(x.c, x.d);
    }
  }
  VertexCircles vc;
  vc.rep.assign(n_edges + 1, 0);
  for (int e = 1; e <= n_edges; ++e) vc.rep[e] = dsu.find(e);
  vc.marked_rep = vc.rep[bp];
  for (int e = 1; e <= n_edges; ++e)
    if (vc.rep[e] == e && e != vc.marked_rep) vc.unmarked.push_back(e);
  vc.bit.assign(n_edges + 1, -1);
  for (size_t j = 0; j < vc.unmarked.size(); ++j)
    vc.bit[vc.unmarked[j]] = static_cast<int>(j);
  return vc;
}

}  // namespace

CubeComplex build_reduced_cube(const Diagram& d) {
  int n = d.n_crossings();
  if (n > kMaxCubeCrossings)
    throw std::runtime_error("resolution cube limited to " +
                             std::to_string(kMaxCubeCrossings) + " crossings");
  int n_edges = d.n_edges();
  if (n_edges == 0) throw std::runtime_error("empty diagram has no marked component");
  int bp = d.basepoint_edge();

  int n_pos = 0, n_neg = 0;
  for (int s : d.signs()) (s > 0 ? n_pos : n_neg)++;

  uint32_t n_vertices = 1u << n;
  std::vector<VertexCircles> circ(n_vertices);
  std::vector<int> offset(n_vertices + 1, 0);
  for (uint32_t v = 0; v < n_vertices; ++v) {
    circ[v] = resolve_vertex(d, v, n_edges, bp);
    offset[v + 1] = offset[v] + (1 << circ[v].unmarked.size());
  }

  CubeComplex cx;
  cx.gens.reserve(offset[n_vertices]);
  int shift_q2 = 2 * (n_pos - 2 * n_neg);
  int shift_h2 = -2 * n_neg;
  for (uint32_t v = 0; v < n_vertices; ++v) {
    int k = static_cast<int>(circ[v].unmarked.size());
    int w = __builtin_popcount(v);
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
      int dotted = __builtin_popcount(mask);
      CubeGenerator g;
      g.vertex = v;
      g.labels = mask;
      g.q2 = 2 * (k - 2 * dotted) + 2 * w + shift_q2;
      g.h2 = 2 * w + shift_h2;
      cx.gens.push_back(g);
    }
  }

  cx.d.assign(cx.gens.size(), {});
  for (uint32_t v = 0; v < n_vertices; ++v) {
    const VertexCircles& vc = circ[v];
    int k = static_cast<int>(vc.unmarked.size());
    for (int i = 0; i < n; ++i) {
      if (v >> i & 1) continue;
      uint32_t vn = v | (1u << i);
      const VertexCircles& wc = circ[vn];
      const auto& x = d.crossings[i];
      int p1 = vc.rep[x.a], p2 = vc.rep[x.c];

      // Bits of persistent circles move to their positions at the target.
      // Participating circles are excluded here and patched per generator.
      std::vector<std::pair<int, int>> carry;  // (src bit, dst bit)
      for (int r : vc.unmarked) {
        if (r == p1 || r == p2) continue;
        assert(wc.rep[r] == r && wc.bit[r] >= 0);
        carry.push_back({vc.bit[r], wc.bit[r]});
      }
      auto transport = [&](uint32_t mask) {
        uint32_t out = 0;
        for (auto [sb, db] : carry)
          if (mask >> sb & 1) out |= 1u << db;
        return out;
      };

      for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        int src = offset[v] + static_cast<int>(mask);
        uint32_t base = transport(mask);
        auto emit = [&](uint32_t extra) {
          cx.d[src].push_back(offset[vn] + static_cast<int>(base | extra));
        };
        if (p1 != p2) {
          // merge
          int m = wc.rep[x.a];
          if (wc.rep[x.c] != m) throw std::runtime_error("diagram is not planar");
          if (p1 == vc.marked_rep || p2 == vc.marked_rep) {
            int other = (p1 == vc.marked_rep) ? p2 : p1;
            bool dotted = mask >> vc.bit[other] & 1;
            if (!dotted) emit(0);  // result is the marked circle
          } else {
            bool d1 = mask >> vc.bit[p1] & 1;
            bool d2 = mask >> vc.bit[p2] & 1;
            if (d1 && d2) continue;
            emit((d1 || d2) ? (1u << wc.bit[m]) : 0u);
          }
        } else {
          // split
          int q1 = wc.rep[x.a], q2r = wc.rep[x.b];
          if (q1 == q2r) throw std::runtime_error("diagram is not planar");
          if (p1 == vc.marked_rep) {
            int other = (q1 == wc.marked_rep) ? q2r : q1;
            assert(q1 == wc.marked_rep || q2r == wc.marked_rep);
            emit(1u << wc.bit[other]);
          } else if (mask >> vc.bit[p1] & 1) {
            emit((1u << wc.bit[q1]) | (1u << wc.bit[q2r]));
          } else {
            emit(1u << wc.bit[q1]);
            emit(1u << wc.bit[q2r]);
          }
        }
      }
    }
  }

  // mod-2 cleanup: repeated targets cancel
  for (auto& row : cx.d) {
    std::sort(row.begin(), row.end());
    std::vector<int> keep;
    for (size_t i = 0; i < row.size();) {
      size_t j = i;
      while (j < row.size() && row[j] == row[i]) ++j;
      if ((j - i) % 2) keep.push_back(row[i]);
      i = j;
    }
    row = std::move(keep);
  }
  return cx;
}

namespace {

// Rank over F2 of the map between two generator buckets.  Each source hits at
// most two targets per resolution edge, so the matrix is extremely sparse;
// rows are kept as sorted target lists and elimination always pivots on a
// lightest remaining row.  The weight-1 cascades that dominate these
// complexes then cause no fill-in, which keeps twelve-crossing cubes (half a
// million generators) tractable where dense bit rows are not.
int f2_rank(const std::vector<int>& srcs, const std::vector<int>& tgt_pos,
            const std::vector<std::vector<int>>& d) {
  std::vector<std::vector<int>> rows;
  rows.reserve(srcs.size());
  for (int s : srcs) {
    if (d[s].empty()) continue;
    std::vector<int> row;
    row.reserve(d[s].size());
    for (int t : d[s]) {
      int p = tgt_pos[t];
      assert(p >= 0);
      row.push_back(p);
    }
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }

  const int n = static_cast<int>(rows.size());
  std::unordered_map<int, std::vector<int>> col_rows;  // entries may be stale
  for (int r = 0; r < n; ++r)
    for (int c : rows[r]) col_rows[c].push_back(r);
  auto contains = [&](int r, int c) {
    return std::binary_search(rows[r].begin(), rows[r].end(), c);
  };

  using Entry = std::pair<int, int>;  // (weight, row)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  for (int r = 0; r < n; ++r)
    queue.push({static_cast<int>(rows[r].size()), r});

  std::vector<char> done(n, 0);
  std::vector<int> adds, merged;
  int rank = 0;
  while (!queue.empty()) {
    auto [w, r] = queue.top();
    queue.pop();
    if (done[r] || static_cast<int>(rows[r].size()) != w) continue;
    done[r] = 1;
    if (rows[r].empty()) continue;  // became a kernel element
    ++rank;

    // pivot on the least shared column of the lightest row, compacting the
    // occupancy lists as a side effect
    int pivot = -1;
    size_t best = rows.size() + 1;
    for (int c : rows[r]) {
      auto& occ = col_rows[c];
      occ.erase(std::remove_if(occ.begin(), occ.end(),
                               [&](int r2) { return done[r2] || !contains(r2, c); }),
                occ.end());
      if (occ.size() < best) {
        best = occ.size();
        pivot = c;
      }
    }

    for (int r2 : col_rows[pivot]) {
      adds.clear();
      std::set_difference(rows[r].begin(), rows[r].end(), rows[r2].begin(),
                          rows[r2].end(), std::back_inserter(adds));
      merged.clear();
      std::set_symmetric_difference(rows[r].begin(), rows[r].end(),
                                    rows[r2].begin(), rows[r2].end(),
                                    std::back_inserter(merged));
      rows[r2].assign(merged.begin(), merged.end());
      for (int c : adds) col_rows[c].push_back(r2);
      queue.push({static_cast<int>(rows[r2].size()), r2});
    }
    rows[r].clear();
    rows[r].shrink_to_fit();
  }
  return rank;
}

}  // namespace

PairingResult kh_reduced_cube(const Diagram& diagram) {
  CubeComplex cx = build_reduced_cube(diagram);
  std::map<Bigrading, std::vector<int>> bucket;
  for (size_t g = 0; g < cx.gens.size(); ++g)
    bucket[{cx.gens[g].q2, cx.gens[g].h2}].push_back(static_cast<int>(g));

  // rank of each d: (q,h) -> (q,h+2), computed once and read from both sides
  std::vector<int> pos(cx.gens.size(), -1);
  std::map<Bigrading, int> rank_out;
  for (const auto& [bg, gens] : bucket) {
    auto it = bucket.find({bg.q2, bg.h2 + 2});
    if (it == bucket.end()) {
      for (int s : gens) assert(cx.d[s].empty());
      rank_out[bg] = 0;
      continue;
    }
    for (size_t i = 0; i < it->second.size(); ++i)
      pos[it->second[i]] = static_cast<int>(i);
    rank_out[bg] = f2_rank(gens, pos, cx.d);
    for (int t : it->second) pos[t] = -1;
  }

  PairingResult out;
  for (const auto& [bg, gens] : bucket) {
    auto pit = rank_out.find({bg.q2, bg.h2 - 2});
    int rank_in = pit == rank_out.end() ? 0 : pit->second;
    int dim = static_cast<int>(gens.size()) - rank_out[bg] - rank_in;
    assert(dim >= 0);
    if (dim > 0) out.add(bg.q2, bg.h2, dim);
  }
  return out;
}

}  // namespace khc
