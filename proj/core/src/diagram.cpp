#include "khc/diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace khc {
namespace {

// Orientation analysis shared by validation, signs() and relabel().
struct Oriented {
  std::map<int, int> succ;            // next edge label along the component
  std::vector<std::vector<int>> comps;  // crossing-edge components, by min label
  std::vector<int> signs;
};

// Components of the underlying 1-manifold: edges are vertices, each crossing
// joins a-c and b-d (the two strands through it).
std::vector<std::vector<int>> strand_components(const Diagram& d) {
  std::map<int, std::vector<int>> adj;
  for (const auto& x : d.crossings) {
    adj[x.a].push_back(x.c);
    adj[x.c].push_back(x.a);
    adj[x.b].push_back(x.d);
    adj[x.d].push_back(x.b);
  }
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (const auto& [e, nbrs] : adj) {
    if (seen.count(e)) continue;
    // walk the 2-regular graph
    std::vector<int> comp;
    int prev = -1, cur = e;
    for (;;) {
      comp.push_back(cur);
      seen.insert(cur);
      const auto& nb = adj[cur];
      if (nb.size() != 2) throw ParseError("edge " + std::to_string(cur) +
                                           " lies on " + std::to_string(nb.size()) +
                                           " strands");
      int nxt = (nb[0] == prev && !(nb[0] == nb[1])) ? nb[1] : nb[0];
      // a two-edge component has nb[0] == nb[1]; alternate properly
      if (nb[0] == nb[1]) nxt = nb[0];
      if (nxt == e && comp.size() > 1) break;
      if (comp.size() == 1 && nxt == e) { break; }  // self-paired
      prev = cur;
      cur = nxt;
      if (comp.size() > adj.size()) throw ParseError("component trace failed");
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

Oriented analyze(const Diagram& d) {
  Oriented out;
  // Edge degrees.
  std::map<int, int> degree;
  for (const auto& x : d.crossings)
    for (int e : {x.a, x.b, x.c, x.d}) degree[e]++;
  for (const auto& [e, k] : degree)
    if (k != 2)
      throw ParseError("edge " + std::to_string(e) + " appears " +
                       std::to_string(k) + " times, expected 2");
  if (!degree.empty()) {
    if (degree.begin()->first != 1 ||
        degree.rbegin()->first != static_cast<int>(degree.size()))
      throw ParseError("edge labels must be 1.." +
                       std::to_string(degree.size()));
  }

  // Planarity.  Slots are counterclockwise, so the PD code is a rotation
  // system; every connected piece of the 4-valent graph must have sphere
  // Euler characteristic, i.e. faces = crossings + 2.
  {
    int n = d.n_crossings();
    std::vector<int> alpha(4 * n, -1);  // pairs the two ends of each edge
    std::map<int, int> first_dart;
    std::vector<int> par(n);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int v) {
      while (par[v] != v) v = par[v] = par[par[v]];
      return v;
    };
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossings[c];
      const std::array<int, 4> sl = {x.a, x.b, x.c, x.d};
      for (int i = 0; i < 4; ++i) {
        auto [it, fresh] = first_dart.try_emplace(sl[i], 4 * c + i);
        if (!fresh) {
          alpha[4 * c + i] = it->second;
          alpha[it->second] = 4 * c + i;
          par[find(c)] = find(it->second / 4);
        }
      }
    }
    std::vector<int> faces(n, 0), verts(n, 0);
    for (int c = 0; c < n; ++c) verts[find(c)]++;
    std::vector<bool> seen(4 * n, false);
    for (int d0 = 0; d0 < 4 * n; ++d0) {
      if (seen[d0]) continue;
      int cur = d0;
      do {
        seen[cur] = true;
        int t = alpha[cur];
        cur = (t & ~3) | ((t + 1) & 3);
      } while (cur != d0);
      faces[find(d0 / 4)]++;
    }
    for (int c = 0; c < n; ++c)
      if (find(c) == c && faces[c] != verts[c] + 2)
        throw ParseError("crossings cannot be drawn in the plane");
  }

  out.comps = strand_components(d);
  // Contiguous ascending labels per component, wrapping max -> min.
  for (auto& comp : out.comps) {
    auto [lo, hi] = std::minmax_element(comp.begin(), comp.end());
    int mn = *lo, mx = *hi;
    if (mx - mn + 1 != static_cast<int>(comp.size()))
      throw ParseError("component containing edge " + std::to_string(mn) +
                       " does not carry contiguous labels");
    for (int e = mn; e < mx; ++e) out.succ[e] = e + 1;
    out.succ[mx] = mn;
    std::sort(comp.begin(), comp.end());
  }
  std::sort(out.comps.begin(), out.comps.end());

  // Under-strands run a -> c; each label transition is realized exactly once,
  // which also disambiguates over-strand directions on two-edge components.
  std::set<int> free_transition;  // e: the transition e -> succ(e) is unused
  for (const auto& [e, f] : out.succ) free_transition.insert(e);
  for (const auto& x : d.crossings) {
    if (out.succ[x.a] != x.c)
      throw ParseError("under-strand " + std::to_string(x.a) + "->" +
                       std::to_string(x.c) + " breaks ascending labels");
    if (!free_transition.erase(x.a))
      throw ParseError("transition at edge " + std::to_string(x.a) +
                       " used twice");
  }
  for (const auto& x : d.crossings) {
    if (out.succ[x.d] == x.b && free_transition.erase(x.d)) {
      out.signs.push_back(+1);
    } else if (out.succ[x.b] == x.d && free_transition.erase(x.b)) {
      out.signs.push_back(-1);
    } else {
      throw ParseError("over-strand {" + std::to_string(x.b) + "," +
                       std::to_string(x.d) + "} breaks ascending labels");
    }
  }
  return out;
}

void validate(const Diagram& d) {
  // Basepoint existence comes first.
  if (d.basepoint) {
    int bp = *d.basepoint;
    bool found = false;
    for (const auto& x : d.crossings)
      for (int e : {x.a, x.b, x.c, x.d}) found |= (e == bp);
    int max_edge = 2 * d.n_crossings();
    if (bp > max_edge && bp <= max_edge + d.unknots) found = true;
    if (!found) throw ParseError("unknown basepoint edge " + std::to_string(bp));
  }
  analyze(d);
}

int read_int(const std::string& s, size_t& i) {
  size_t j = i;
  if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
  size_t k = j;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == j) throw ParseError("malformed token near '" + s.substr(i, 8) + "'");
  int v = std::stoi(s.substr(i, k - i));
  i = k;
  return v;
}

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

void expect(const std::string& s, size_t& i, char c) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    throw ParseError(std::string("expected '") + c + "' near '" +
                     s.substr(i, 8) + "'");
  ++i;
}

}  // namespace

std::vector<int> Diagram::signs() const { return analyze(*this).signs; }

int Diagram::writhe() const {
  int w = 0;
  for (int s : signs()) w += s;
  return w;
}

int Diagram::n_edges() const { return 2 * n_crossings() + unknots; }

int Diagram::basepoint_edge() const {
  if (basepoint) return *basepoint;
  return n_edges() == 0 ? 0 : 1;
}

bool Diagram::basepoint_on_unknot() const {
  return basepoint_edge() > 2 * n_crossings();
}

Diagram parse_pd(const std::string& text) {
  Diagram d;
  size_t i = 0;
  for (;;) {
    skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] == 'X') {
      ++i;
      expect(text, i, '(');
      Crossing x{};
      skip_ws(text, i);
      x.a = read_int(text, i);
      expect(text, i, ',');
      skip_ws(text, i);
      x.b = read_int(text, i);
      expect(text, i, ',');
      skip_ws(text, i);
      x.c = read_int(text, i);
      expect(text, i, ',');
      skip_ws(text, i);
      x.d = read_int(text, i);
      expect(text, i, ')');
      for (int e : {x.a, x.b, x.c, x.d})
        if (e <= 0) throw ParseError("edge labels must be positive");
      d.crossings.push_back(x);
    } else if (text.compare(i, 2, "bp") == 0) {
      i += 2;
      skip_ws(text, i);
      d.basepoint = read_int(text, i);
    } else if (text[i] == 'U') {
      ++i;
      d.unknots++;
    } else {
      throw ParseError("malformed token near '" + text.substr(i, 8) + "'");
    }
  }
  validate(d);
  return d;
}

std::string to_pd_string(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings) {
    if (!first) os << " ";
    first = false;
    os << "X(" << x.a << "," << x.b << "," << x.c << "," << x.d << ")";
  }
  for (int u = 0; u < d.unknots; ++u) {
    if (!first) os << " ";
    first = false;
    os << "U";
  }
  if (d.basepoint) {
    if (!first) os << " ";
    os << "bp " << *d.basepoint;
  }
  return os.str();
}

Diagram mirror(const Diagram& d) {
  // The new under-strand is the old over-strand, so the tuple now starts at
  // the old over-in slot: d at a positive crossing, b at a negative one.
  std::vector<int> sg = d.signs();
  Diagram m = d;
  for (size_t i = 0; i < m.crossings.size(); ++i) {
    auto& x = m.crossings[i];
    x = sg[i] > 0 ? Crossing{x.d, x.a, x.b, x.c} : Crossing{x.b, x.c, x.d, x.a};
  }
  validate(m);
  return m;
}

Diagram relabel(const Diagram& d) {
  Oriented o = analyze(d);
  std::map<int, int> remap;
  int next = 1;
  for (const auto& comp : o.comps) {
    int start = comp.front();  // least label in the component
    int e = start;
    do {
      remap[e] = next++;
      e = o.succ[e];
    } while (e != start);
  }
  Diagram r = d;
  for (auto& x : r.crossings)
    x = Crossing{remap[x.a], remap[x.b], remap[x.c], remap[x.d]};
  if (r.basepoint && remap.count(*r.basepoint))
    r.basepoint = remap[*r.basepoint];
  validate(r);
  return r;
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw ParseError("braid needs at least one strand");
  for (int g : word)
    if (g == 0 || std::abs(g) >= strands)
      throw ParseError("braid generator out of range");

  std::vector<int> cur(strands);
  for (int i = 0; i < strands; ++i) cur[i] = i + 1;
  int next = strands + 1;
  std::map<int, int> succ;  // along strands, bottom to top
  std::vector<Crossing> raw;
  for (int g : word) {
    int i = std::abs(g) - 1;
    int u = cur[i], v = cur[i + 1];
    int x = next++, y = next++;
    if (g > 0)
      raw.push_back(Crossing{v, y, x, u});
    else
      raw.push_back(Crossing{u, v, y, x});
    succ[v] = x;
    succ[u] = y;
    cur[i] = x;
    cur[i + 1] = y;
  }

  // Close up: the top of strand i is the bottom edge i+1.
  std::map<int, int> fuse;
  auto resolve = [&](int e) {
    while (fuse.count(e)) e = fuse[e];
    return e;
  };
  Diagram d;
  for (int i = 0; i < strands; ++i) {
    if (cur[i] == i + 1)
      d.unknots++;  // untouched strand
    else
      fuse[cur[i]] = i + 1;
  }
  std::map<int, int> closed_succ;
  for (const auto& [e, f] : succ) closed_succ[resolve(e)] = resolve(f);
  for (auto& x : raw)
    d.crossings.push_back(Crossing{resolve(x.a), resolve(x.b), resolve(x.c),
                                   resolve(x.d)});

  // Canonical labels from the known successor structure.
  std::map<int, int> remap;
  int label = 1;
  for (const auto& [e, f] : closed_succ) {
    if (remap.count(e)) continue;
    int cur_e = e;
    while (!remap.count(cur_e)) {
      remap[cur_e] = label++;
      cur_e = closed_succ[cur_e];
    }
  }
  for (auto& x : d.crossings)
    x = Crossing{remap[x.a], remap[x.b], remap[x.c], remap[x.d]};
  Diagram canon = d.crossings.empty() ? d : relabel(d);
  canon.unknots = d.unknots;
  validate(canon);
  return canon;
}

Diagram gen_torus_link(int p, int q) {
  if (p < 1) throw ParseError("torus parameter p must be positive");
  std::vector<int> word;
  for (int rep = 0; rep < std::abs(q); ++rep)
    for (int i = 1; i < p; ++i) word.push_back(i);
  Diagram d = braid_closure(p, word);
  if (q < 0) d = mirror(d);
  return d;
}

// ---------------------------------------------------------------------------
// Two-bridge links via rational tangles.
//
// The tangle is grown by twist regions following the continued fraction of
// p/q, alternating horizontal twists at the bottom and vertical twists on the
// right, then closed with the numerator closure.  Ports of each crossing are
// kept in counterclockwise order (TL, BL, BR, TR) so that orientation and
// tuples can be read off after tracing.

namespace {

struct PortRef {
  int crossing = -1;
  int port = -1;  // 0 TL, 1 BL, 2 BR, 3 TR
  bool valid() const { return crossing >= 0; }
};

struct TangleBuilder {
  // conn[crossing][port] = the arc partner
  std::vector<std::array<PortRef, 4>> conn;
  std::vector<bool> over_diag0;  // true: TL-BR strand is the over-strand
  // Stub: dangling arc end.  Either the far end is another stub (initial
  // arcs) or a concrete port.
  struct Stub {
    int other_stub = -1;  // NW=0, NE=1, SW=2, SE=3
    PortRef port;
  };
  std::array<Stub, 4> stub;
  int unknots = 0;

  TangleBuilder() {
    stub[0].other_stub = 1;  // NW - NE
    stub[1].other_stub = 0;
    stub[2].other_stub = 3;  // SW - SE
    stub[3].other_stub = 2;
  }

  void connect(PortRef x, PortRef y) {
    conn[x.crossing][x.port] = y;
    conn[y.crossing][y.port] = x;
  }

  void join(int s, PortRef p) {
    if (stub[s].port.valid()) {
      connect(stub[s].port, p);
    } else {
      stub[stub[s].other_stub].other_stub = -1;
      stub[stub[s].other_stub].port = p;
    }
  }

  int new_crossing(bool over0) {
    conn.push_back({});
    over_diag0.push_back(over0);
    return static_cast<int>(conn.size()) - 1;
  }

  void twist_bottom(bool over0) {
    int c = new_crossing(over0);
    join(2, {c, 0});  // SW -> TL
    join(3, {c, 3});  // SE -> TR
    stub[2] = {.other_stub = -1, .port = {c, 1}};
    stub[3] = {.other_stub = -1, .port = {c, 2}};
  }

  void twist_right(bool over0) {
    int c = new_crossing(over0);
    join(1, {c, 0});  // NE -> TL
    join(3, {c, 1});  // SE -> BL
    stub[1] = {.other_stub = -1, .port = {c, 3}};
    stub[3] = {.other_stub = -1, .port = {c, 2}};
  }

  void close_pair(int s1, int s2) {
    if (!stub[s1].port.valid()) {
      // untouched arc between the two stubs
      if (stub[s1].other_stub == s2) {
        unknots++;
        return;
      }
      // arc runs to the partner stub; splice the two arcs
      int far = stub[s1].other_stub;
      if (!stub[s2].port.valid()) {
        // both still pure arcs; they must pair with each other's partners
        stub[far].other_stub = stub[s2].other_stub;
        stub[stub[s2].other_stub].other_stub = far;
        return;
      }
      stub[far] = stub[s2];
      return;
    }
    if (!stub[s2].port.valid()) {
      int far = stub[s2].other_stub;
      stub[far] = stub[s1];
      return;
    }
    connect(stub[s1].port, stub[s2].port);
  }

  Diagram trace() {
    Diagram d;
    d.unknots = unknots;
    int n = static_cast<int>(conn.size());
    if (n == 0) return d;
    // Edge labels are assigned while walking components.  A directed pass
    // through a crossing enters at one port and leaves at the opposite one.
    std::map<std::pair<int, int>, int> edge_at;  // (crossing, port) -> label
    std::vector<std::array<int, 4>> entered(n, {0, 0, 0, 0});
    int label = 0;
    std::vector<std::array<int, 4>> in_port(n, {0, 0, 0, 0});
    for (int c0 = 0; c0 < n; ++c0)
      for (int p0 = 0; p0 < 4; ++p0) {
        if (entered[c0][p0]) continue;
        // new component, entering c0 at p0
        int c = c0, p = p0;
        do {
          entered[c][p] = 1;
          in_port[c][p] = 1;
          int out = p ^ 2;
          entered[c][out] = 1;
          ++label;
          edge_at[{c, out}] = label;
          PortRef nxt = conn[c][out];
          assert(nxt.valid());
          edge_at[{nxt.crossing, nxt.port}] = label;
          c = nxt.crossing;
          p = nxt.port;
        } while (!(c == c0 && p == p0));
      }
    for (int c = 0; c < n; ++c) {
      // under-strand: the diagonal that is not over; find its entering port
      int u0 = over_diag0[c] ? 1 : 0;
      int a = in_port[c][u0] ? u0 : (u0 ^ 2);
      assert(in_port[c][a]);
      auto lab = [&](int p) { return edge_at.at({c, p}); };
      d.crossings.push_back(
          Crossing{lab(a), lab((a + 1) & 3), lab((a + 2) & 3), lab((a + 3) & 3)});
    }
    return d;
  }
};

}  // namespace

Diagram gen_two_bridge(int p, int q) {
  int ap = std::abs(p);
  if (ap == 0 || q <= 0 || q > ap)
    throw ParseError("two-bridge parameters need 0 < q <= |p|");
  if (std::gcd(ap, q) != 1)
    throw ParseError("two-bridge parameters must be coprime");

  // Continued fraction p/q = a_k + 1/(a_{k-1} + ... + 1/a_1), digits positive.
  std::vector<int> digits;
  int num = ap, den = q;
  while (den) {
    digits.push_back(num / den);
    int r = num % den;
    num = den;
    den = r;
  }

  // Applied order: innermost first.  Right twists add 1 to the fraction and
  // bottom twists add 1 to its reciprocal, so the regions alternate starting
  // and ending with right twists; that needs an odd number of digits, and
  // [a_1, ...] can always be rewritten as [1, a_1 - 1, ...] or [a_2 + 1, ...]
  // without changing the fraction.
  std::vector<int> applied(digits.rbegin(), digits.rend());
  if (applied.size() % 2 == 0) {
    if (applied[0] > 1) {
      applied[0] -= 1;
      applied.insert(applied.begin(), 1);
    } else {
      applied.erase(applied.begin());
      applied[0] += 1;
    }
  }

  TangleBuilder tb;
  bool right_region = true;
  for (int a : applied) {
    for (int t = 0; t < a; ++t) {
      if (right_region)
        tb.twist_right(false);
      else
        tb.twist_bottom(false);
    }
    right_region = !right_region;
  }
  tb.close_pair(0, 1);  // NW - NE
  tb.close_pair(2, 3);  // SW - SE
  Diagram d = tb.trace();
  validate(d);
  if (p < 0) d = mirror(d);
  return d;
}

}  // namespace khc
