#include "khc/curves.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace khc {

Slope Slope::make(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  if (g == 0) g = 1;
  p /= g;
  q /= g;
  if (q == 0) p = 1;
  return Slope{static_cast<int>(p), static_cast<int>(q)};
}

std::string Slope::str() const {
  if (q == 0) return "inf";
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

std::string Curve::str() const {
  std::string out;
  if (shift_h2 != 0 || shift_q2 != 0)
    out += "h^{" + frac2(shift_h2) + "} q^{" + frac2(shift_q2) + "} ";
  switch (kind) {
    case CurveKind::Arc:
      out += "a";
      break;
    case CurveKind::Rational:
      out += "r" + std::to_string(n);
      break;
    case CurveKind::Special:
      out += "s" + std::to_string(n);
      break;
  }
  out += "(" + slope.str() + ")";
  return out;
}

Slope mcg_apply(const MappingClass& g, const Slope& s) {
  // the matrix multiplies the column (q, p)
  long long q2 = g.m[0][0] * s.q + g.m[0][1] * s.p;
  long long p2 = g.m[1][0] * s.q + g.m[1][1] * s.p;
  return Slope::make(p2, q2);
}

Curve mcg_apply(const MappingClass& g, const Curve& c) {
  Curve out = c;
  out.slope = mcg_apply(g, c.slope);
  return out;
}

Multicurve mcg_apply(const MappingClass& g, const Multicurve& mc) {
  Multicurve out;
  out.reserve(mc.size());
  for (const Curve& c : mc) out.push_back(mcg_apply(g, c));
  return out;
}

long long min_intersections(const Curve& x, const Curve& y) {
  if (x.kind != CurveKind::Arc) {
    if (y.kind != CurveKind::Arc) {
      throw std::invalid_argument(
          "intersection counts need an arc on one side");
    }
    return min_intersections(y, x);
  }
  long long det = static_cast<long long>(x.slope.p) * y.slope.q -
                  static_cast<long long>(x.slope.q) * y.slope.p;
  if (det < 0) det = -det;
  switch (y.kind) {
    case CurveKind::Arc:
      throw std::invalid_argument("arc-to-arc intersections are unsupported");
    case CurveKind::Rational:
      return det != 0 ? y.n * det : 2 * y.n;
    case CurveKind::Special:
      return 2 * y.n * det;
  }
  throw std::logic_error("unreachable");
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("expected '" + std::string(1, c) +
                                  "' in curve literal");
  }
  bool eat_word(const char* w) {
    ws();
    size_t j = i;
    for (const char* p = w; *p; ++p, ++j)
      if (j >= s.size() || s[j] != *p) return false;
    i = j;
    return true;
  }
  long long integer() {
    ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) throw std::invalid_argument("expected integer in curve literal");
    long long v = std::stoll(s.substr(i, k - i));
    i = k;
    return v;
  }
};

Slope slope_lit(Cursor& c) {
  if (c.eat_word("inf")) return Slope::infinity();
  long long p = c.integer();
  long long q = 1;
  if (c.eat('/')) q = c.integer();
  return Slope::make(p, q);
}

// "x", "-x", or "x/2" inside ^{...}, returned doubled
int half_exponent(Cursor& c) {
  c.expect('^');
  c.expect('{');
  long long num = c.integer();
  long long den = 1;
  if (c.eat('/')) den = c.integer();
  c.expect('}');
  if (den == 1) return static_cast<int>(2 * num);
  if (den == 2) return static_cast<int>(num);
  throw std::invalid_argument("grading exponents must be halves");
}

Curve curve_lit(Cursor& c) {
  Curve out;
  for (;;) {
    c.ws();
    if (c.i + 1 >= c.s.size() || c.s[c.i + 1] != '^' ||
        (c.s[c.i] != 'h' && c.s[c.i] != 'q'))
      break;
    char which = c.s[c.i];
    c.i += 1;
    int v = half_exponent(c);
    (which == 'h' ? out.shift_h2 : out.shift_q2) = v;
  }
  c.ws();
  if (c.eat_word("a(")) {
    out.kind = CurveKind::Arc;
    out.n = 1;
  } else if (c.eat('r') || c.eat('s')) {
    out.kind = c.s[c.i - 1] == 'r' ? CurveKind::Rational : CurveKind::Special;
    long long n = c.integer();
    if (n <= 0) throw std::invalid_argument("curve index must be positive");
    out.n = static_cast<int>(n);
    c.expect('(');
  } else {
    throw std::invalid_argument("expected curve literal");
  }
  out.slope = slope_lit(c);
  c.expect(')');
  return out;
}

}  // namespace

Curve parse_curve(const std::string& text) {
  Cursor c{text};
  Curve out = curve_lit(c);
  c.ws();
  if (c.i != text.size())
    throw std::invalid_argument("trailing input after curve literal");
  return out;
}

Multicurve parse_multicurve(const std::string& text) {
  Multicurve out;
  Cursor c{text};
  for (;;) {
    c.ws();
    // optional multiplicity "K*"
    long long mult = 1;
    size_t save = c.i;
    if (c.i < text.size() && std::isdigit(static_cast<unsigned char>(text[c.i]))) {
      long long v = c.integer();
      if (c.eat('*')) {
        mult = v;
      } else {
        c.i = save;
      }
    }
    if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
    Curve cv = curve_lit(c);
    for (long long k = 0; k < mult; ++k) out.push_back(cv);
    c.ws();
    if (c.i == text.size()) break;
    c.expect('+');
  }
  return out;
}

}  // namespace khc
