#include "khc/scan.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace khc {
namespace {

using Arc = std::pair<int, int>;

Arc ordered(int x, int y) { return {std::min(x, y), std::max(x, y)}; }

// F2 sum in canonical form: sorted, repeated masks cancel in pairs.
void canonicalize(std::vector<uint64_t>& terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<uint64_t> keep;
  for (size_t i = 0; i < terms.size();) {
    size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2) keep.push_back(terms[i]);
    i = j;
  }
  terms = std::move(keep);
}

void xor_into(std::vector<uint64_t>& acc, const std::vector<uint64_t>& add) {
  acc.insert(acc.end(), add.begin(), add.end());
  canonicalize(acc);
}

// Cycles of the union of two perfect matchings on the same point set,
// numbered in order of their least point.  src_rep is the src arc the walk
// started on, used to locate a cycle's surface piece later.
struct CyclePack {
  int count = 0;
  std::vector<bool> stub;  // touches a cut point
  std::vector<Arc> src_rep;
  std::map<Arc, int> src_cycle, dst_cycle;
  std::map<int, int> point_cycle;
};

CyclePack cycles_of(const Matching& src, const Matching& dst) {
  std::map<int, int> snext, dnext;
  for (auto [x, y] : src) {
    snext[x] = y;
    snext[y] = x;
  }
  for (auto [x, y] : dst) {
    dnext[x] = y;
    dnext[y] = x;
  }
  assert(snext.size() == dnext.size());
  CyclePack cp;
  std::set<int> used;
  for (const auto& [p0, q0] : snext) {
    if (used.count(p0)) continue;
    int id = cp.count++;
    bool stub = false;
    cp.src_rep.push_back(ordered(p0, q0));
    int cur = p0;
    do {
      int q = snext.at(cur);
      cp.src_cycle[ordered(cur, q)] = id;
      cp.point_cycle[cur] = id;
      cp.point_cycle[q] = id;
      stub |= cur >= kCutA || q >= kCutA;
      used.insert(cur);
      used.insert(q);
      int r = dnext.at(q);
      cp.dst_cycle[ordered(q, r)] = id;
      cur = r;
    } while (cur != p0);
    cp.stub.push_back(stub);
  }
  return cp;
}

// An assembled cobordism: disk pieces joined pairwise along lines, so
// chi(component) = #pieces - #joins.
struct CompData {
  std::vector<int> comp_of_piece;
  std::vector<int> chi;
  std::vector<std::vector<int>> pieces;
  std::vector<std::vector<int>> cycles;
  int n_comps = 0;
};

CompData components(int n_pieces, const std::vector<std::pair<int, int>>& joins,
                    const std::vector<int>& piece_of_cycle) {
  std::vector<int> par(n_pieces);
  std::iota(par.begin(), par.end(), 0);
  auto find = [&](int x) {
    while (par[x] != x) x = par[x] = par[par[x]];
    return x;
  };
  for (auto [a, b] : joins) par[find(a)] = find(b);
  CompData cd;
  std::vector<int> comp_id(n_pieces, -1);
  cd.comp_of_piece.resize(n_pieces);
  for (int p = 0; p < n_pieces; ++p) {
    int r = find(p);
    if (comp_id[r] < 0) {
      comp_id[r] = cd.n_comps++;
      cd.chi.push_back(0);
      cd.pieces.push_back({});
      cd.cycles.push_back({});
    }
    cd.comp_of_piece[p] = comp_id[r];
    cd.chi[comp_id[r]] += 1;
    cd.pieces[comp_id[r]].push_back(p);
  }
  for (auto [a, b] : joins) cd.chi[cd.comp_of_piece[a]] -= 1;
  for (size_t cy = 0; cy < piece_of_cycle.size(); ++cy)
    cd.cycles[cd.comp_of_piece[piece_of_cycle[cy]]].push_back(
        static_cast<int>(cy));
  return cd;
}

// Reduce one assembly, for one assignment of dots to pieces, to a sum of
// dotted-disk terms over the new cycles.  Only per-component dot totals
// matter: two dots or any genus kill a component, one dot forces every
// boundary cycle of it dotted, no dots give the sum over leaving exactly one
// cycle undotted.  A dot on a cycle through the cut is multiplication by the
// marked generator, zero in the reduced theory, so those terms are dropped.
void reduce_terms(const CompData& cd, const std::vector<int>& dots_per_piece,
                  uint64_t stub_bits, std::vector<uint64_t>& out) {
  std::vector<uint64_t> acc{0};
  for (int c = 0; c < cd.n_comps; ++c) {
    int dots = 0;
    for (int p : cd.pieces[c]) dots += dots_per_piece[p];
    int b = static_cast<int>(cd.cycles[c].size());
    if (b == 0) {
      if (cd.chi[c] == 2 && dots == 1) continue;
      return;
    }
    int genus2 = 2 - b - cd.chi[c];
    assert(genus2 >= 0 && genus2 % 2 == 0);
    if (dots >= 2 || genus2 > 0) return;
    uint64_t all = 0;
    for (int cy : cd.cycles[c]) all |= 1ull << cy;
    std::vector<uint64_t> next;
    next.reserve(acc.size() * (dots == 1 ? 1 : b));
    if (dots == 1) {
      for (uint64_t m : acc) next.push_back(m | all);
    } else {
      for (uint64_t m : acc)
        for (int cy : cd.cycles[c]) next.push_back(m | (all ^ (1ull << cy)));
    }
    acc = std::move(next);
  }
  for (uint64_t m : acc)
    if (!(m & stub_bits)) out.push_back(m);
}

std::vector<uint64_t> compose(const Matching& ma, const Matching& mb,
                              const Matching& mc,
                              const std::vector<uint64_t>& tab,
                              const std::vector<uint64_t>& tbc) {
  CyclePack cab = cycles_of(ma, mb);
  CyclePack cbc = cycles_of(mb, mc);
  CyclePack cac = cycles_of(ma, mc);
  int n_pieces = cab.count + cbc.count;
  std::vector<std::pair<int, int>> joins;
  for (const auto& arc : mb)
    joins.push_back({cab.dst_cycle.at(arc), cab.count + cbc.src_cycle.at(arc)});
  std::vector<int> piece_of_cycle(cac.count);
  uint64_t stub_bits = 0;
  for (int i = 0; i < cac.count; ++i) {
    piece_of_cycle[i] = cab.src_cycle.at(cac.src_rep[i]);
    if (cac.stub[i]) stub_bits |= 1ull << i;
  }
  CompData cd = components(n_pieces, joins, piece_of_cycle);
  std::vector<uint64_t> out;
  std::vector<int> dots(n_pieces, 0);
  for (uint64_t t1 : tab)
    for (uint64_t t2 : tbc) {
      std::fill(dots.begin(), dots.end(), 0);
      for (int i = 0; i < cab.count; ++i) dots[i] = t1 >> i & 1;
      for (int i = 0; i < cbc.count; ++i) dots[cab.count + i] = t2 >> i & 1;
      reduce_terms(cd, dots, stub_bits, out);
    }
  canonicalize(out);
  return out;
}

// ------------------------------------------------------------------
// gluing one crossing

int slot_pt(int k) { return -1 - k; }

std::array<Arc, 2> smoothing_arcs(int s) {
  if (s == 0)
    return {ordered(slot_pt(0), slot_pt(1)), ordered(slot_pt(2), slot_pt(3))};
  return {ordered(slot_pt(0), slot_pt(3)), ordered(slot_pt(1), slot_pt(2))};
}

// smoothing arc carrying slot k
int slot_arc(int s, int k) {
  if (s == 0) return k / 2;
  return (k == 0 || k == 3) ? 0 : 1;
}

// How the crossing attaches to the current frontier: identified point pairs,
// each labelled by the edge that closes there, and final names for slots
// that stay open.  Cut-edge slots become permanent stubs.
struct CrossingGlue {
  std::vector<std::array<int, 3>> ident;  // {point, point, edge}
  std::map<int, int> final_name;          // slot point -> new frontier label
  std::set<int> joined;                   // frontier labels consumed
};

CrossingGlue prepare_glue(const Crossing& x, const std::set<int>& frontier,
                          int bp_edge, int& next_stub) {
  CrossingGlue cg;
  std::array<int, 4> edge = {x.a, x.b, x.c, x.d};
  std::array<bool, 4> done = {false, false, false, false};
  for (int k = 0; k < 4; ++k) {
    if (done[k]) continue;
    int e = edge[k];
    if (e == bp_edge) {
      cg.final_name[slot_pt(k)] = next_stub++;
      continue;
    }
    int twin = -1;
    for (int j = k + 1; j < 4; ++j)
      if (edge[j] == e) twin = j;
    if (twin >= 0) {
      cg.ident.push_back({slot_pt(k), slot_pt(twin), e});
      done[twin] = true;
    } else if (frontier.count(e)) {
      cg.ident.push_back({slot_pt(k), e, e});
      cg.joined.insert(e);
    } else {
      cg.final_name[slot_pt(k)] = e;
    }
  }
  return cg;
}

// One object after gluing a smoothing: new arcs and closed-up circles, each
// remembering a constituent arc id in [matching arcs | smoothing arcs].
struct GluedObject {
  Matching arcs;
  std::vector<std::pair<Arc, int>> arc_origin;  // sorted by arc
  std::vector<std::pair<int, int>> circles;     // (key = least edge, origin)
};

GluedObject glue_object(const Matching& m, int s, const CrossingGlue& cg) {
  int nm = static_cast<int>(m.size());
  std::vector<Arc> arcs(m.begin(), m.end());
  for (const Arc& a : smoothing_arcs(s)) arcs.push_back(a);

  std::map<int, int> partner, ident_edge;
  for (const auto& pr : cg.ident) {
    partner[pr[0]] = pr[1];
    partner[pr[1]] = pr[0];
    ident_edge[pr[0]] = pr[2];
    ident_edge[pr[1]] = pr[2];
  }
  std::map<int, std::pair<int, int>> end_arc;  // point -> (arc id, other end)
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    end_arc[arcs[i].first] = {i, arcs[i].second};
    end_arc[arcs[i].second] = {i, arcs[i].first};
  }
  auto final_of = [&](int p) {
    auto it = cg.final_name.find(p);
    return it == cg.final_name.end() ? p : it->second;
  };

  GluedObject g;
  std::set<int> seen;
  std::vector<std::pair<int, int>> boundary;  // (final name, raw point)
  for (const auto& [p, ae] : end_arc)
    if (!partner.count(p)) boundary.push_back({final_of(p), p});
  std::sort(boundary.begin(), boundary.end());
  for (auto [fname, p0] : boundary) {
    if (seen.count(p0)) continue;
    int cur = p0;
    int origin = end_arc.at(cur).first;
    for (;;) {
      seen.insert(cur);
      auto [aid, other] = end_arc.at(cur);
      (void)aid;
      seen.insert(other);
      if (!partner.count(other)) {
        g.arc_origin.push_back({ordered(fname, final_of(other)), origin});
        break;
      }
      cur = partner.at(other);
    }
  }
  for (const auto& [p0, ae] : end_arc) {
    if (seen.count(p0)) continue;
    int key = ident_edge.at(p0);
    int cur = p0;
    do {
      seen.insert(cur);
      auto [aid, other] = end_arc.at(cur);
      (void)aid;
      seen.insert(other);
      key = std::min(key, ident_edge.at(other));
      cur = partner.at(other);
      key = std::min(key, ident_edge.at(cur));
    } while (cur != p0);
    g.circles.push_back({key, ae.first});
  }
  std::sort(g.arc_origin.begin(), g.arc_origin.end());
  std::sort(g.circles.begin(), g.circles.end());
  (void)nm;
  for (const auto& [arc, o] : g.arc_origin) {
    (void)o;
    g.arcs.push_back(arc);
  }
  return g;
}

int origin_of(const GluedObject& g, const Arc& a) {
  auto it = std::lower_bound(g.arc_origin.begin(), g.arc_origin.end(),
                             std::make_pair(a, INT_MIN));
  assert(it != g.arc_origin.end() && it->first == a);
  return it->second;
}

// Transport an arrow (terms over cycles_of(msrc, mdst), both circle-free)
// through the gluing.  s_src == s_dst tensors the identity of that smoothing
// (two square sheets); s_src = 0, s_dst = 1 tensors the saddle (one sheet).
// Output masks run over [new arc cycles | src circles | dst circles].
struct Transported {
  std::vector<uint64_t> terms;
  int n_arc_cycles = 0;
};

Transported transport(const Matching& msrc, const Matching& mdst,
                      const std::vector<uint64_t>& terms,
                      const GluedObject& gsrc, const GluedObject& gdst,
                      const CrossingGlue& cg, int s_src, int s_dst) {
  bool saddle = s_src != s_dst;
  CyclePack cp = cycles_of(msrc, mdst);
  int n_cross = saddle ? 1 : 2;
  int n_pieces = cp.count + n_cross;
  int nsrc = static_cast<int>(msrc.size());
  int ndst = static_cast<int>(mdst.size());

  auto src_piece = [&](int arc_id) {
    if (arc_id < nsrc) return cp.src_cycle.at(msrc[arc_id]);
    return cp.count + (saddle ? 0 : arc_id - nsrc);
  };
  auto dst_piece = [&](int arc_id) {
    if (arc_id < ndst) return cp.dst_cycle.at(mdst[arc_id]);
    return cp.count + (saddle ? 0 : arc_id - ndst);
  };
  auto point_piece = [&](int pt) {
    if (pt >= 0) return cp.point_cycle.at(pt);
    int k = -1 - pt;
    return cp.count + (saddle ? 0 : slot_arc(s_src, k));
  };

  std::vector<std::pair<int, int>> joins;
  for (const auto& pr : cg.ident)
    joins.push_back({point_piece(pr[0]), point_piece(pr[1])});

  CyclePack np = cycles_of(gsrc.arcs, gdst.arcs);
  int k1 = static_cast<int>(gsrc.circles.size());
  int k2 = static_cast<int>(gdst.circles.size());
  int n_cycles = np.count + k1 + k2;
  assert(n_cycles <= 60);
  std::vector<int> piece_of_cycle(n_cycles);
  uint64_t stub_bits = 0;
  for (int i = 0; i < np.count; ++i) {
    piece_of_cycle[i] = src_piece(origin_of(gsrc, np.src_rep[i]));
    if (np.stub[i]) stub_bits |= 1ull << i;
  }
  for (int i = 0; i < k1; ++i)
    piece_of_cycle[np.count + i] = src_piece(gsrc.circles[i].second);
  for (int i = 0; i < k2; ++i)
    piece_of_cycle[np.count + k1 + i] = dst_piece(gdst.circles[i].second);

  CompData cd = components(n_pieces, joins, piece_of_cycle);
  Transported out;
  out.n_arc_cycles = np.count;
  std::vector<int> dots(n_pieces, 0);
  for (uint64_t t : terms) {
    std::fill(dots.begin(), dots.end(), 0);
    for (int i = 0; i < cp.count; ++i) dots[i] = t >> i & 1;
    reduce_terms(cd, dots, stub_bits, out.terms);
  }
  canonicalize(out.terms);
  return out;
}

// ------------------------------------------------------------------
// the complex

struct Node {
  Matching arcs;
  int q2 = 0, h2 = 0;
  std::map<int, ScanArrow> out;
  std::set<int> in;
  bool alive = true;
};

void add_arrow(std::vector<Node>& nodes, int src, int dst,
               const std::vector<uint64_t>& terms) {
  if (terms.empty()) return;
  auto& ar = nodes[src].out[dst];
  xor_into(ar.terms, terms);
  if (ar.terms.empty()) {
    nodes[src].out.erase(dst);
    nodes[dst].in.erase(src);
  } else {
    nodes[dst].in.insert(src);
  }
}

void detach(std::vector<Node>& nodes, int id) {
  for (auto& [dst, ar] : nodes[id].out) nodes[dst].in.erase(id);
  for (int src : nodes[id].in) nodes[src].out.erase(id);
  nodes[id].out.clear();
  nodes[id].in.clear();
  nodes[id].alive = false;
}

// Gaussian cancellation of arrows that contain the undotted identity term.
void cancel_all(std::vector<Node>& nodes, long long& cancellations) {
  for (;;) {
    int A = -1, B = -1;
    for (int src = 0; src < static_cast<int>(nodes.size()) && A < 0; ++src) {
      if (!nodes[src].alive) continue;
      for (const auto& [dst, ar] : nodes[src].out) {
        if (!ar.terms.empty() && ar.terms.front() == 0 &&
            nodes[src].arcs == nodes[dst].arcs) {
          assert(nodes[src].q2 == nodes[dst].q2);
          A = src;
          B = dst;
          break;
        }
      }
    }
    if (A < 0) break;

    const Matching m = nodes[A].arcs;
    std::vector<uint64_t> rho = nodes[A].out[B].terms;
    rho.erase(rho.begin());  // drop the identity term
    std::vector<uint64_t> inv{0};
    std::vector<uint64_t> cur = rho;
    while (!cur.empty()) {
      xor_into(inv, cur);
      cur = compose(m, m, m, cur, rho);
    }

    std::vector<int> preds(nodes[B].in.begin(), nodes[B].in.end());
    std::vector<std::pair<int, std::vector<uint64_t>>> succs;
    for (const auto& [dst, ar] : nodes[A].out)
      if (dst != B) succs.push_back({dst, ar.terms});
    for (int C : preds) {
      if (C == A) continue;
      std::vector<uint64_t> alpha = nodes[C].out[B].terms;
      std::vector<uint64_t> t1 = compose(nodes[C].arcs, m, m, alpha, inv);
      if (t1.empty()) continue;
      for (const auto& [D, beta] : succs)
        add_arrow(nodes, C, D, compose(nodes[C].arcs, m, nodes[D].arcs, t1, beta));
    }
    detach(nodes, A);
    detach(nodes, B);
    ++cancellations;
  }
}

}  // namespace

PairingResult kh_reduced_scan(const Diagram& d, ScanStats* stats) {
  ScanStats local{};
  int n = d.n_crossings();
  if (d.n_edges() == 0)
    throw std::runtime_error("empty diagram has no marked component");
  int n_pos = 0, n_neg = 0;
  for (int s : d.signs()) (s > 0 ? n_pos : n_neg)++;
  int bp = d.basepoint_edge();
  bool bp_u = d.basepoint_on_unknot();
  int extra_circles = d.unknots - (bp_u ? 1 : 0);

  std::vector<Node> nodes(1);
  std::set<int> frontier;
  if (bp_u) {
    nodes[0].arcs.push_back({kCutA, kCutB});
    frontier.insert(kCutA);
    frontier.insert(kCutB);
  }
  int next_stub = kCutA;

  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    // Next crossing: the one whose gluing keeps the frontier smallest.
    int best_pos = 0, best_cost = INT_MAX;
    for (size_t pos = 0; pos < remaining.size(); ++pos) {
      const auto& x = d.crossings[remaining[pos]];
      std::map<int, int> mult;
      for (int e : {x.a, x.b, x.c, x.d}) mult[e]++;
      int cost = static_cast<int>(frontier.size());
      for (const auto& [e, cnt] : mult) {
        if (e == bp)
          cost += cnt;
        else if (cnt == 2)
          ;
        else if (frontier.count(e))
          cost -= 1;
        else
          cost += 1;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_pos = static_cast<int>(pos);
      }
    }
    const Crossing& x = d.crossings[remaining[best_pos]];
    remaining.erase(remaining.begin() + best_pos);
    CrossingGlue cg = prepare_glue(x, frontier, bp, next_stub);

    struct PerNode {
      GluedObject g[2];
      int base[2] = {-1, -1};
      int k[2] = {0, 0};
    };
    std::vector<PerNode> pn(nodes.size());
    std::vector<Node> next_nodes;
    for (size_t id = 0; id < nodes.size(); ++id) {
      if (!nodes[id].alive) continue;
      for (int s = 0; s < 2; ++s) {
        GluedObject g = glue_object(nodes[id].arcs, s, cg);
        int k = static_cast<int>(g.circles.size());
        pn[id].base[s] = static_cast<int>(next_nodes.size());
        pn[id].k[s] = k;
        for (int lam = 0; lam < (1 << k); ++lam) {
          Node nn;
          nn.arcs = g.arcs;
          nn.q2 = nodes[id].q2 + 2 * s + 2 * k - 4 * __builtin_popcount(lam);
          nn.h2 = nodes[id].h2 + 2 * s;
          next_nodes.push_back(std::move(nn));
        }
        pn[id].g[s] = std::move(g);
      }
    }

    auto distribute = [&](int src_base, int dst_base, int k1, int k2,
                          const Transported& t) {
      uint64_t arc_mask = (t.n_arc_cycles >= 64)
                              ? ~0ull
                              : ((1ull << t.n_arc_cycles) - 1);
      for (uint64_t term : t.terms) {
        uint64_t src_bits = (term >> t.n_arc_cycles) & ((1ull << k1) - 1);
        uint64_t dst_bits = (term >> (t.n_arc_cycles + k1)) & ((1ull << k2) - 1);
        int lam = static_cast<int>(~src_bits & ((1ull << k1) - 1));
        int mu = static_cast<int>(dst_bits);
        add_arrow(next_nodes, src_base + lam, dst_base + mu, {term & arc_mask});
      }
    };

    for (size_t src = 0; src < nodes.size(); ++src) {
      if (!nodes[src].alive) continue;
      for (const auto& [dst, ar] : nodes[src].out) {
        for (int s = 0; s < 2; ++s) {
          Transported t =
              transport(nodes[src].arcs, nodes[dst].arcs, ar.terms, pn[src].g[s],
                        pn[dst].g[s], cg, s, s);
          distribute(pn[src].base[s], pn[dst].base[s], pn[src].k[s], pn[dst].k[s],
                     t);
        }
      }
      Transported t = transport(nodes[src].arcs, nodes[src].arcs, {0},
                                pn[src].g[0], pn[src].g[1], cg, 0, 1);
      distribute(pn[src].base[0], pn[src].base[1], pn[src].k[0], pn[src].k[1], t);
    }

    nodes = std::move(next_nodes);
    for (int e : cg.joined) frontier.erase(e);
    for (const auto& [slot, name] : cg.final_name) {
      (void)slot;
      frontier.insert(name);
    }
    local.max_frontier =
        std::max(local.max_frontier, static_cast<int>(frontier.size()));
    int alive = 0;
    for (const auto& nd : nodes) alive += nd.alive;
    local.max_objects = std::max(local.max_objects, alive);
    cancel_all(nodes, local.cancellations);
  }

  PairingResult res;
  int gq = 2 * (n_pos - 2 * n_neg), gh = -2 * n_neg;
  for (const auto& nd : nodes) {
    if (!nd.alive) continue;
    assert(nd.out.empty());
    res.add(nd.q2 + gq, nd.h2 + gh, 1);
  }
  for (int i = 0; i < extra_circles; ++i) res = res.tensor_circle();
  if (stats) *stats = local;
  return res;
}

}  // namespace khc
