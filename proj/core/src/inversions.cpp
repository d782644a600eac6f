#include "khc/inversions.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "khc/typed.hpp"

namespace khc {

namespace {

Curve arc_at(const Slope& s) { return Curve{CurveKind::Arc, s, 1, 0, 0}; }

// Closed components with a chain model: integer or infinite rational slope,
// even special index at slope infinity.  Everything else still has a
// well-defined pairing dimension through min_intersections.
bool modeled_loop(const Curve& c) {
  if (c.kind == CurveKind::Rational)
    return c.n == 1 && (c.slope.q == 1 || c.slope.is_infinity());
  if (c.kind == CurveKind::Special)
    return c.n % 2 == 0 && c.slope.is_infinity();
  return false;
}

int parse_int(const std::string& tok) {
  size_t pos = 0;
  int v = 0;
  if (!tok.empty()) {
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
  }
  if (tok.empty() || pos != tok.size())
    throw std::invalid_argument("expected an integer, got '" + tok + "'");
  return v;
}

// Half-integer token, returned doubled: "3" -> 6, "-7/2" -> -7.
int parse_half2(const std::string& tok) {
  const size_t slash = tok.find('/');
  if (slash == std::string::npos) return 2 * parse_int(tok);
  if (tok.substr(slash + 1) != "2")
    throw std::invalid_argument("half-integer shifts use denominator 2: '" +
                                tok + "'");
  return parse_int(tok.substr(0, slash));
}

// kappa is a direct sum of 4-dimensional blocks when the classes partition
// into translates of the V_k pattern; doubled offsets from the bottom class
// are (8,4), (12,6), (20,10).  Peeling the minimal remaining class as a block
// bottom is exact: nothing below it could absorb it.
bool is_vk_sum(const BigradedDims& kap) {
  if (kap.total() % 4 != 0) return false;
  std::map<Bigrading, long long> left(kap.table().begin(), kap.table().end());
  auto take = [&left](int q2, int h2) {
    auto it = left.find(Bigrading{q2, h2});
    if (it == left.end()) return false;
    if (--it->second == 0) left.erase(it);
    return true;
  };
  while (!left.empty()) {
    const Bigrading base = left.begin()->first;
    take(base.q2, base.h2);
    if (!take(base.q2 + 8, base.h2 + 4) || !take(base.q2 + 12, base.h2 + 6) ||
        !take(base.q2 + 20, base.h2 + 10))
      return false;
  }
  return true;
}

}  // namespace

std::string InversionRecord::str() const {
  std::ostringstream os;
  os << "knot=" << knot << " inv=" << inv << " k=" << k << " n=" << n
     << " shifts=";
  for (size_t i = 0; i < shifts2.size(); ++i) {
    if (i) os << ';';
    os << '(' << frac2(shifts2[i].first) << ',' << frac2(shifts2[i].second)
       << ')';
  }
  return os.str();
}

InversionRecord parse_record(const std::string& line) {
  std::istringstream in(line);
  std::string t_knot, t_inv, t_k, t_n, t_shifts, extra;
  if (!(in >> t_knot >> t_inv >> t_k >> t_n >> t_shifts))
    throw std::invalid_argument(
        "record needs five fields: knot= inv= k= n= shifts=");
  if (in >> extra)
    throw std::invalid_argument("trailing token '" + extra + "'");

  auto field = [](const std::string& tok, const char* key) {
    const std::string k(key);
    if (tok.rfind(k, 0) != 0)
      throw std::invalid_argument("expected " + k + "..., got '" + tok + "'");
    return tok.substr(k.size());
  };

  InversionRecord r;
  r.knot = field(t_knot, "knot=");
  if (r.knot.empty()) throw std::invalid_argument("empty knot name");
  r.inv = parse_int(field(t_inv, "inv="));
  if (r.inv != 1 && r.inv != 2)
    throw std::invalid_argument("inversion index must be 1 or 2");
  r.k = parse_int(field(t_k, "k="));
  r.n = parse_int(field(t_n, "n="));
  if (r.n < 1) throw std::invalid_argument("n must be positive");

  const std::string s = field(t_shifts, "shifts=");
  size_t i = 0;
  while (i < s.size()) {
    const size_t end = s.find(';', i);
    const std::string item =
        s.substr(i, end == std::string::npos ? std::string::npos : end - i);
    i = end == std::string::npos ? s.size() : end + 1;
    if (item.size() < 5 || item.front() != '(' || item.back() != ')')
      throw std::invalid_argument("shift entries look like (a,b): '" + item +
                                  "'");
    const std::string body = item.substr(1, item.size() - 2);
    const size_t comma = body.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("shift entry '" + item + "' has no comma");
    r.shifts2.emplace_back(parse_half2(body.substr(0, comma)),
                           parse_half2(body.substr(comma + 1)));
  }
  if (static_cast<int>(r.shifts2.size()) != r.n)
    throw std::invalid_argument("n=" + std::to_string(r.n) + " but " +
                                std::to_string(r.shifts2.size()) + " shifts");
  return r;
}

std::vector<InversionRecord> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::vector<InversionRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_record(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return out;
}

void emit_table(std::ostream& os, const std::vector<InversionRecord>& table) {
  std::vector<InversionRecord> sorted = table;
  std::sort(sorted.begin(), sorted.end(),
            [](const InversionRecord& a, const InversionRecord& b) {
              return std::tie(a.knot, a.inv) < std::tie(b.knot, b.inv);
            });
  os << "# conventions: quantum gradings integral (doubled), delta = q/2 - h\n";
  for (const auto& r : sorted) {
    os << r.knot << '^' << r.inv << "  k=" << r.k << "  n=" << r.n
       << "  dim=" << 4 * r.n << "  kappa =";
    for (size_t i = 0; i < r.shifts2.size(); ++i)
      os << (i ? " + " : " ") << "h^{" << frac2(r.shifts2[i].first)
         << "} delta^{" << frac2(r.shifts2[i].second) << "} Vk";
    os << '\n';
  }
}

Multicurve quotient_multicurve(const InversionRecord& r) {
  Curve rat{CurveKind::Rational, Slope::make(r.k, 1), 1, 0, 0};
  {
    // Normalize so that infinity surgery gives the unknot at (0, 0): read off
    // where the single pairing class of the unshifted loop lands and cancel
    // it.  The arc meets r_1(k) once for every k, so the class is unique.
    const PairingResult p =
        mor_pair(curve_to_typeD(arc_at(Slope::infinity())),
                 curve_to_typeD(rat));
    if (p.total() != 1)
      throw std::runtime_error("rational component does not close to an unknot");
    const Bigrading g = p.table().begin()->first;
    rat.shift_q2 = -g.q2;
    rat.shift_h2 = -g.h2;
  }
  Multicurve mc{rat};
  for (const auto& [a2, b2] : r.shifts2)
    mc.push_back(
        Curve{CurveKind::Special, Slope::infinity(), 2, 2 * (a2 + b2), a2 - 1});
  return mc;
}

BigradedDims kappa(const InversionRecord& r) {
  const TypeD a0 = curve_to_typeD(arc_at(Slope::make(0, 1)));
  BigradedDims out;
  for (const Curve& c : quotient_multicurve(r))
    if (c.kind == CurveKind::Special) out.merge(mor_pair(a0, curve_to_typeD(c)));
  return out;
}

long long surgery_dim(const InversionRecord& r, const Slope& pq) {
  const Multicurve mc = quotient_multicurve(r);
  long long total = 0;
  if (pq.q <= 1) {
    const TypeD ax = curve_to_typeD(arc_at(pq));
    for (const Curve& c : mc) total += mor_pair(ax, curve_to_typeD(c)).total();
  } else {
    // No chain model at fractional slopes; the minimal intersection count
    // matches the pairing dimension wherever both are defined.
    for (const Curve& c : mc) total += min_intersections(arc_at(pq), c);
  }
  return total;
}

bool unknot_closure_check(const Multicurve& mc) {
  const Curve ai = arc_at(Slope::infinity());
  long long total = 0;
  for (const Curve& c : mc) {
    if (c.kind == CurveKind::Arc)
      throw std::invalid_argument("closure check needs a closed multicurve");
    total += modeled_loop(c)
                 ? mor_pair(curve_to_typeD(ai), curve_to_typeD(c)).total()
                 : min_intersections(ai, c);
  }
  return total == 1;
}

bool det_zero_check(const InversionRecord& r) {
  const TypeD a0 = curve_to_typeD(arc_at(Slope::make(0, 1)));
  BigradedDims full;
  for (const Curve& c : quotient_multicurve(r))
    full.merge(mor_pair(a0, curve_to_typeD(c)));
  return full.determinant() == 0;
}

AuditReport audit_conjectures(const InversionRecord& r) {
  return audit_conjectures(r, quotient_multicurve(r));
}

AuditReport audit_conjectures(const InversionRecord& r, const Multicurve& mc) {
  AuditReport rep;
  rep.k_multiple_of_4 = r.k % 4 == 0;
  rep.even_special_lengths = true;
  for (const Curve& c : mc)
    if (c.kind == CurveKind::Special && c.n % 2 != 0)
      rep.even_special_lengths = false;
  rep.kappa_sum_of_Vk = is_vk_sum(kappa(r));
  return rep;
}

}  // namespace khc
