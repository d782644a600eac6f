#include "khc/typed.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace khc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

char idem_char(Idem i) { return i == Idem::Dot ? '*' : 'o'; }

Idem flip(Idem i) { return i == Idem::Dot ? Idem::Circ : Idem::Dot; }

}  // namespace

AlgElt AlgElt::S(int k, Idem src) {
  if (k < 0) fail("S^k needs k >= 0");
  if (k == 0) return iota(src);
  return {Family::S, k, src};
}

AlgElt AlgElt::D(int k, Idem src) {
  if (k < 0) fail("D^k needs k >= 0");
  if (k == 0) return iota(src);
  return {Family::D, k, src};
}

Idem AlgElt::dst() const {
  if (family == Family::S && k % 2 != 0) return flip(src);
  return src;
}

int AlgElt::q2() const {
  switch (family) {
    case Family::S: return -2 * k;
    case Family::D: return -4 * k;
    default: return 0;
  }
}

std::string AlgElt::str() const {
  switch (family) {
    case Family::Zero: return "0";
    case Family::Iota: return "i";
    case Family::S: return k == 1 ? "S" : "S^" + std::to_string(k);
    case Family::D: return k == 1 ? "D" : "D^" + std::to_string(k);
  }
  return "?";
}

AlgElt alg_mul(const AlgElt& a, const AlgElt& b) {
  if (a.is_zero() || b.is_zero()) return AlgElt::zero();
  if (a.dst() != b.src) return AlgElt::zero();
  if (a.family == AlgElt::Family::Iota) return b;
  if (b.family == AlgElt::Family::Iota) return a;
  if (a.family != b.family) return AlgElt::zero();
  if (a.family == AlgElt::Family::S) return AlgElt::S(a.k + b.k, a.src);
  return AlgElt::D(a.k + b.k, a.src);
}

std::string TypeD::dump() const {
  std::ostringstream out;
  for (size_t i = 0; i < gens.size(); ++i) {
    out << "g" << i << ' ' << idem_char(gens[i].idem) << " q=" << frac2(gens[i].q2)
        << " h=" << frac2(gens[i].h2) << '\n';
  }
  auto sorted = arrows;
  std::sort(sorted.begin(), sorted.end(), [](const TypeDArrow& a, const TypeDArrow& b) {
    return std::tie(a.src, a.dst, a.label.family, a.label.k) <
           std::tie(b.src, b.dst, b.label.family, b.label.k);
  });
  for (const auto& a : sorted)
    out << "g" << a.src << " -" << a.label.str() << "-> g" << a.dst << '\n';
  return out.str();
}

void validate(const TypeD& t) {
  const int n = static_cast<int>(t.gens.size());
  for (const auto& a : t.arrows) {
    if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n) fail("arrow endpoint out of range");
    if (a.label.is_zero()) fail("zero arrow label");
    const auto& s = t.gens[a.src];
    const auto& d = t.gens[a.dst];
    if (a.label.src != s.idem || a.label.dst() != d.idem) fail("arrow label idempotent mismatch");
    if (d.h2 != s.h2 + 2) fail("arrow must raise h by one");
    if (a.label.q2() + d.q2 - s.q2 != 0) fail("arrow label does not balance q");
  }
  // d^2 = 0 over F2: composable two-step paths must pair off.
  std::map<std::tuple<int, int, AlgElt::Family, int>, int> paths;
  for (const auto& a : t.arrows)
    for (const auto& b : t.arrows) {
      if (a.dst != b.src) continue;
      AlgElt p = alg_mul(a.label, b.label);
      if (p.is_zero()) continue;
      ++paths[{a.src, b.dst, p.family, p.k}];
    }
  for (const auto& [key, count] : paths)
    if (count % 2 != 0) fail("d^2 != 0");
}

namespace {

void add_arrow(TypeD& t, int src, int dst, AlgElt label) {
  t.arrows.push_back({src, dst, label});
}

// Chain interiors alternate between the two degree (2,1) letters, starting
// and ending with D so that consecutive labels always multiply to zero.
AlgElt chain_letter(int i, Idem idem) {
  return i % 2 == 0 ? AlgElt::D(1, idem) : AlgElt::S(2, idem);
}

// a(m), m > 0: a straight chain climbing away from the single * generator.
TypeD arc_positive(int m) {
  TypeD t;
  t.gens.push_back({Idem::Dot, 0, 0});
  for (int i = 1; i <= m; ++i) t.gens.push_back({Idem::Circ, 2 * (2 * i - 1), 2 * i});
  add_arrow(t, 0, 1, AlgElt::S(1, Idem::Dot));
  for (int i = 2; i <= m; ++i) add_arrow(t, i - 1, i, chain_letter(i, Idem::Circ));
  return t;
}

TypeD mirror(const TypeD& t) {
  TypeD m;
  for (const auto& g : t.gens) m.gens.push_back({g.idem, -g.q2, -g.h2});
  for (const auto& a : t.arrows) {
    AlgElt l = a.label;
    l.src = t.gens[a.dst].idem;
    m.arrows.push_back({a.dst, a.src, l});
  }
  return m;
}

TypeD arc_complex(const Slope& s) {
  if (s.is_infinity()) {
    TypeD t;
    t.gens.push_back({Idem::Circ, 0, 0});
    return t;
  }
  if (s.q != 1) fail("only integer-slope arcs translate to complexes");
  if (s.p == 0) {
    TypeD t;
    t.gens.push_back({Idem::Dot, 0, 0});
    return t;
  }
  return s.p > 0 ? arc_positive(s.p) : mirror(arc_positive(-s.p));
}

// r_1(m), m > 0: two parallel copies of the a(m) chain, one shifted by the
// degree of D, with a D rung at the * end and a rung of the other (2,1)
// letter at the far end.  m = 1 gives the square, m = 2 the hexagon.
TypeD loop_positive(int m) {
  TypeD t;
  auto copy_base = [&](int dq2, int dh2) {
    int v = static_cast<int>(t.gens.size());
    t.gens.push_back({Idem::Dot, dq2, dh2});
    for (int i = 1; i <= m; ++i)
      t.gens.push_back({Idem::Circ, 2 * (2 * i - 1) + dq2, 2 * i + dh2});
    add_arrow(t, v, v + 1, AlgElt::S(1, Idem::Dot));
    for (int i = 2; i <= m; ++i) add_arrow(t, v + i - 1, v + i, chain_letter(i, Idem::Circ));
    return v;
  };
  int a = copy_base(0, 0);
  int b = copy_base(4, 2);
  add_arrow(t, a, b, AlgElt::D(1, Idem::Dot));
  add_arrow(t, a + m, b + m, chain_letter(m + 1, Idem::Circ));
  return t;
}

TypeD loop_complex(const Slope& s) {
  TypeD t;
  if (s.is_infinity()) {
    t.gens.push_back({Idem::Circ, 0, 0});
    t.gens.push_back({Idem::Circ, 4, 2});
    add_arrow(t, 0, 1, AlgElt::D(1, Idem::Circ));
    add_arrow(t, 0, 1, AlgElt::S(2, Idem::Circ));
    return t;
  }
  if (s.q != 1) fail("only integer-slope rational components translate to complexes");
  if (s.p == 0) {
    t.gens.push_back({Idem::Dot, 0, 0});
    t.gens.push_back({Idem::Dot, 4, 2});
    add_arrow(t, 0, 1, AlgElt::D(1, Idem::Dot));
    add_arrow(t, 0, 1, AlgElt::S(2, Idem::Dot));
    return t;
  }
  return s.p > 0 ? loop_positive(s.p) : mirror(loop_positive(-s.p));
}

// The once-around special loop: two five-letter rows S, D, S^2, D, S joined
// by a D at both pairs of ends.  Drawn symmetrically about degree (0, 0).
TypeD special_once() {
  TypeD t;
  auto row = [&](int q2, int h2) {
    int v = static_cast<int>(t.gens.size());
    t.gens.push_back({Idem::Dot, q2, h2});
    static const int dq[] = {2, 6, 10, 14};
    for (int i = 0; i < 4; ++i) t.gens.push_back({Idem::Circ, q2 + dq[i], h2 + 2 * (i + 1)});
    t.gens.push_back({Idem::Dot, q2 + 16, h2 + 10});
    add_arrow(t, v, v + 1, AlgElt::S(1, Idem::Dot));
    add_arrow(t, v + 1, v + 2, AlgElt::D(1, Idem::Circ));
    add_arrow(t, v + 2, v + 3, AlgElt::S(2, Idem::Circ));
    add_arrow(t, v + 3, v + 4, AlgElt::D(1, Idem::Circ));
    add_arrow(t, v + 4, v + 5, AlgElt::S(1, Idem::Circ));
    return v;
  };
  int r1 = row(-10, -6);
  int r2 = row(-6, -4);
  add_arrow(t, r1, r2, AlgElt::D(1, Idem::Dot));          // joins the row starts
  add_arrow(t, r1 + 5, r2 + 5, AlgElt::D(1, Idem::Dot));  // joins the row ends
  return t;
}

// s_{2n}(inf): n diagonally stacked copies of the once-around loop, offset by
// the degree (8, 4) so that every class keeps the same delta grading.  This
// realizes the stated generator count 8n in idempotent o and the grading
// extremes (4n+1, 2n+1) in both signs.
TypeD special_complex(int subscript) {
  if (subscript <= 0 || subscript % 2 != 0) fail("special components need even positive subscript");
  int n = subscript / 2;
  TypeD t;
  for (int k = 1; k <= n; ++k) {
    TypeD copy = special_once();
    int off = 2 * k - n - 1;
    int base = static_cast<int>(t.gens.size());
    for (auto& g : copy.gens) t.gens.push_back({g.idem, g.q2 + 8 * off, g.h2 + 4 * off});
    for (auto& a : copy.arrows) t.arrows.push_back({a.src + base, a.dst + base, a.label});
  }
  return t;
}

}  // namespace

TypeD curve_to_typeD(const Curve& c) {
  TypeD t;
  switch (c.kind) {
    case CurveKind::Arc:
      t = arc_complex(c.slope);
      break;
    case CurveKind::Rational:
      if (c.n != 1) fail("only r_1 components translate to complexes");
      t = loop_complex(c.slope);
      break;
    case CurveKind::Special:
      if (!c.slope.is_infinity()) fail("only slope-infinity special components translate");
      t = special_complex(c.n);
      break;
  }
  for (auto& g : t.gens) {
    g.q2 += c.shift_q2;
    g.h2 += c.shift_h2;
  }
  return t;
}

namespace {

// XOR arrows over F2: equal (src, dst, label) triples pair off and vanish.
void normalize_arrows(std::vector<TypeDArrow>& arrows) {
  std::map<std::tuple<int, int, AlgElt::Family, int>, std::pair<TypeDArrow, int>> seen;
  for (const auto& a : arrows) {
    auto key = std::make_tuple(a.src, a.dst, a.label.family, a.label.k);
    auto [it, fresh] = seen.emplace(key, std::make_pair(a, 0));
    ++it->second.second;
  }
  arrows.clear();
  for (const auto& [key, entry] : seen)
    if (entry.second % 2 != 0) arrows.push_back(entry.first);
}

}  // namespace

TypeD cancel(const TypeD& t) {
  std::vector<TypeDGen> gens = t.gens;
  std::vector<TypeDArrow> arrows = t.arrows;
  normalize_arrows(arrows);
  for (;;) {
    int pick = -1;
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label.family == AlgElt::Family::Iota) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick < 0) break;
    const int x = arrows[pick].src, y = arrows[pick].dst;
    std::vector<TypeDArrow> next;
    for (const auto& into : arrows) {
      if (into.dst != y || into.src == x) continue;
      for (const auto& out : arrows) {
        if (out.src != x || out.dst == y) continue;
        AlgElt l = alg_mul(into.label, out.label);
        if (!l.is_zero()) next.push_back({into.src, out.dst, l});
      }
    }
    for (const auto& a : arrows)
      if (a.src != x && a.dst != x && a.src != y && a.dst != y) next.push_back(a);
    // Drop the two generators, compacting indices.
    std::vector<int> remap(gens.size());
    std::vector<TypeDGen> kept;
    for (size_t i = 0; i < gens.size(); ++i) {
      remap[i] = static_cast<int>(kept.size());
      if (static_cast<int>(i) != x && static_cast<int>(i) != y) kept.push_back(gens[i]);
    }
    for (auto& a : next) {
      a.src = remap[a.src];
      a.dst = remap[a.dst];
    }
    gens = std::move(kept);
    arrows = std::move(next);
    normalize_arrows(arrows);
  }
  return {gens, arrows};
}

namespace {

// Exact structural match of t against a blueprint, up to one global grading
// shift and a relabeling of generators.  Returns the doubled shift.
std::optional<std::pair<int, int>> match_blueprint(const TypeD& t, const TypeD& bp) {
  const size_t n = t.gens.size();
  if (n != bp.gens.size() || t.arrows.size() != bp.arrows.size()) return std::nullopt;
  long long sq = 0, sh = 0;
  for (const auto& g : t.gens) { sq += g.q2; sh += g.h2; }
  for (const auto& g : bp.gens) { sq -= g.q2; sh -= g.h2; }
  if (sq % static_cast<long long>(n) != 0 || sh % static_cast<long long>(n) != 0)
    return std::nullopt;
  const int dq = static_cast<int>(sq / static_cast<long long>(n));
  const int dh = static_cast<int>(sh / static_cast<long long>(n));

  // Backtracking assignment t -> bp within (idem, q2, h2) classes.
  std::vector<std::vector<int>> candidates(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      if (t.gens[i].idem == bp.gens[j].idem && t.gens[i].q2 == bp.gens[j].q2 + dq &&
          t.gens[i].h2 == bp.gens[j].h2 + dh)
        candidates[i].push_back(static_cast<int>(j));
    if (candidates[i].empty()) return std::nullopt;
  }
  std::multiset<std::tuple<int, int, AlgElt::Family, int>> bp_arrows;
  for (const auto& a : bp.arrows)
    bp_arrows.insert(std::make_tuple(a.src, a.dst, a.label.family, a.label.k));

  std::vector<int> assign(n, -1);
  std::vector<char> used(n, 0);
  auto ok_so_far = [&](int upto) {
    for (const auto& a : t.arrows) {
      if (a.src > upto || a.dst > upto) continue;
      auto key = std::make_tuple(assign[a.src], assign[a.dst], a.label.family, a.label.k);
      if (bp_arrows.find(key) == bp_arrows.end()) return false;
    }
    return true;
  };
  // Order generators so arrows close early; the complexes are tiny.
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == static_cast<int>(n)) {
      std::multiset<std::tuple<int, int, AlgElt::Family, int>> got;
      for (const auto& a : t.arrows)
        got.insert(std::make_tuple(assign[a.src], assign[a.dst], a.label.family, a.label.k));
      return got == bp_arrows;
    }
    for (int j : candidates[i]) {
      if (used[j]) continue;
      assign[i] = j;
      used[j] = 1;
      if (ok_so_far(i) && go(i + 1)) return true;
      used[j] = 0;
      assign[i] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return std::make_pair(dq, dh);
}

}  // namespace

std::optional<Curve> classify(const TypeD& t) {
  TypeD c = cancel(t);
  if (c.gens.empty()) return std::nullopt;
  int dots = 0, circs = 0;
  for (const auto& g : c.gens) (g.idem == Idem::Dot ? dots : circs)++;

  std::vector<Curve> candidates;
  auto arc = [](Slope s) { return Curve{CurveKind::Arc, s, 1, 0, 0}; };
  auto rat = [](Slope s) { return Curve{CurveKind::Rational, s, 1, 0, 0}; };
  if (dots == 1 && circs == 0) candidates.push_back(arc(Slope{0, 1}));
  if (dots == 0 && circs == 1) candidates.push_back(arc(Slope::infinity()));
  if (dots == 1 && circs > 0) {
    candidates.push_back(arc(Slope{circs, 1}));
    candidates.push_back(arc(Slope{-circs, 1}));
  }
  if (dots == 2 && circs == 0) candidates.push_back(rat(Slope{0, 1}));
  if (dots == 0 && circs == 2) candidates.push_back(rat(Slope::infinity()));
  if (dots == 2 && circs > 0 && circs % 2 == 0) {
    candidates.push_back(rat(Slope{circs / 2, 1}));
    candidates.push_back(rat(Slope{-circs / 2, 1}));
  }
  if (dots > 0 && dots % 4 == 0 && circs == 2 * dots)
    candidates.push_back(Curve{CurveKind::Special, Slope::infinity(), dots / 2, 0, 0});

  for (auto cand : candidates) {
    TypeD bp = curve_to_typeD(cand);
    if (auto shift = match_blueprint(c, bp)) {
      cand.shift_q2 = shift->first;
      cand.shift_h2 = shift->second;
      return cand;
    }
  }
  return std::nullopt;
}

namespace {

// F2 row rank; rows are bitsets packed in words.
int f2_rank(std::vector<std::vector<uint64_t>> rows) {
  int rank = 0;
  size_t words = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < words * 64; ++col) {
    const size_t w = col / 64;
    const uint64_t bit = uint64_t{1} << (col % 64);
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<size_t>(rank) && (rows[r][w] & bit))
        for (size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
    if (++rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

struct MorElt {
  int i, j;     // x generator, y generator
  AlgElt b;     // iota, S^k or D^k
};

}  // namespace

PairingResult mor_pair(const TypeD& x, const TypeD& y) {
  PairingResult out;
  if (x.gens.empty() || y.gens.empty()) return out;

  int min_delta = 0, max_delta = 0;
  bool first = true;
  for (const auto& gx : x.gens)
    for (const auto& gy : y.gens) {
      int d = gy.q2 - gx.q2;
      if (first) { min_delta = max_delta = d; first = false; }
      min_delta = std::min(min_delta, d);
      max_delta = std::max(max_delta, d);
    }

  // Below Q = min_delta - 4 the slices repeat with period 4 under the shift
  // S^k -> S^(k+2), D^k -> D^(k+1), so four consecutive empty slices prove
  // that everything further down vanishes.
  const int q_stop = min_delta - 7;
  int tail_total = 0;

  for (int Q = max_delta; Q >= q_stop; --Q) {
    std::vector<MorElt> basis;
    for (size_t i = 0; i < x.gens.size(); ++i)
      for (size_t j = 0; j < y.gens.size(); ++j) {
        const int delta = y.gens[j].q2 - x.gens[i].q2;
        const bool same = x.gens[i].idem == y.gens[j].idem;
        if (delta == Q && same)
          basis.push_back({static_cast<int>(i), static_cast<int>(j), AlgElt::iota(x.gens[i].idem)});
        const int gap = delta - Q;
        if (gap >= 2 && gap % 2 == 0) {
          const int k = gap / 2;
          if ((k % 2 == 0) == same)
            basis.push_back({static_cast<int>(i), static_cast<int>(j), AlgElt::S(k, x.gens[i].idem)});
        }
        if (gap >= 4 && gap % 4 == 0 && same)
          basis.push_back({static_cast<int>(i), static_cast<int>(j), AlgElt::D(gap / 4, x.gens[i].idem)});
      }
    if (basis.empty()) continue;

    std::map<std::tuple<int, int, AlgElt::Family, int>, int> index;
    std::map<int, std::vector<int>> by_h2;
    std::vector<int> h2_of(basis.size());
    for (size_t n = 0; n < basis.size(); ++n) {
      const auto& m = basis[n];
      index[{m.i, m.j, m.b.family, m.b.k}] = static_cast<int>(n);
      h2_of[n] = y.gens[m.j].h2 - x.gens[m.i].h2;
      by_h2[h2_of[n]].push_back(static_cast<int>(n));
    }

    // One boundary matrix per h2 level; columns live at h2 + 2.
    auto column_of = [&](int i, int j, const AlgElt& b) -> int {
      auto it = index.find({i, j, b.family, b.k});
      return it == index.end() ? -1 : it->second;
    };
    std::map<int, int> rank_out;
    for (const auto& [h2, elems] : by_h2) {
      auto targets_it = by_h2.find(h2 + 2);
      if (targets_it == by_h2.end()) { rank_out[h2] = 0; continue; }
      const auto& targets = targets_it->second;
      std::map<int, int> target_pos;
      for (size_t p = 0; p < targets.size(); ++p) target_pos[targets[p]] = static_cast<int>(p);
      const size_t words = (targets.size() + 63) / 64;
      std::vector<std::vector<uint64_t>> rows;
      for (int e : elems) {
        const auto& m = basis[e];
        std::vector<uint64_t> row(words, 0);
        auto flip_bit = [&](int col) {
          if (col < 0) fail("pairing differential left the q slice");
          auto it = target_pos.find(col);
          if (it == target_pos.end()) fail("pairing differential left the h ladder");
          row[it->second / 64] ^= uint64_t{1} << (it->second % 64);
        };
        for (const auto& a : y.arrows) {
          if (a.src != m.j) continue;
          AlgElt p = alg_mul(m.b, a.label);
          if (!p.is_zero()) flip_bit(column_of(m.i, a.dst, p));
        }
        for (const auto& a : x.arrows) {
          if (a.dst != m.i) continue;
          AlgElt p = alg_mul(a.label, m.b);
          if (!p.is_zero()) flip_bit(column_of(a.src, m.j, p));
        }
        rows.push_back(std::move(row));
      }
      rank_out[h2] = f2_rank(std::move(rows));
    }

    for (const auto& [h2, elems] : by_h2) {
      int dim = static_cast<int>(elems.size()) - rank_out[h2];
      auto below = by_h2.find(h2 - 2);
      if (below != by_h2.end()) dim -= rank_out[h2 - 2];
      if (dim < 0) fail("pairing rank bookkeeping broke");
      if (dim > 0) {
        out.add(Q, h2, dim);
        if (Q <= min_delta - 4) tail_total += dim;
      }
    }
  }
  if (tail_total > 0) fail("pairing is not finite dimensional");
  return out;
}

PairingResult geometric_pair(const Curve& arc, const TypeD& loop) {
  if (arc.kind != CurveKind::Arc) fail("geometric pairing expects an arc on the left");
  Idem side;
  if (arc.slope == Slope{0, 1}) side = Idem::Dot;
  else if (arc.slope.is_infinity()) side = Idem::Circ;
  else fail("geometric pairing supports slope 0 and infinity arcs only");

  const size_t n = loop.gens.size();
  std::vector<int> in_deg(n, 0), out_deg(n, 0);
  std::vector<char> in_s_odd(n, 0), in_s_even(n, 0), out_d_family(n, 0);
  for (const auto& a : loop.arrows) {
    ++out_deg[a.src];
    ++in_deg[a.dst];
    if (a.label.family == AlgElt::Family::S && a.label.k % 2 != 0) in_s_odd[a.dst] = 1;
    if (a.label.family == AlgElt::Family::S && a.label.k % 2 == 0) in_s_even[a.dst] = 1;
    if (a.label.family == AlgElt::Family::D ||
        (a.label.family == AlgElt::Family::S && a.label.k % 2 == 0))
      out_d_family[a.src] = 1;
  }
  for (size_t i = 0; i < n; ++i)
    if (in_deg[i] + out_deg[i] != 2) fail("geometric pairing expects a loop-type complex");

  PairingResult out;
  for (size_t i = 0; i < n; ++i) {
    const auto& g = loop.gens[i];
    if (g.idem == side && out_deg[i] == 0) {
      // Sinks on the arc's side pair with the identity.
      out.add(g.q2 - arc.shift_q2, g.h2 - arc.shift_h2);
    } else if (g.idem == side && in_deg[i] == 0 && out_d_family[i]) {
      // A source emits one class shared between its two outgoing branches.
      out.add(g.q2 - arc.shift_q2, g.h2 + 2 - arc.shift_h2);
    } else if (g.idem != side && in_s_even[i] && !in_s_odd[i]) {
      // Interior generators reached by S^2 but not S survive one S-class.
      out.add(g.q2 - 2 - arc.shift_q2, g.h2 - arc.shift_h2);
    }
  }
  return out;
}

}  // namespace khc
