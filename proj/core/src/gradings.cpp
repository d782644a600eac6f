#include "khc/gradings.hpp"

#include <cstdlib>
#include <sstream>

namespace khc {

std::string frac2(int x2) {
  if (x2 % 2 == 0) return std::to_string(x2 / 2);
  return std::to_string(x2) + "/2";
}

void BigradedDims::add(int q2, int h2, long long dim) {
  if (dim == 0) return;
  auto it = dims_.emplace(Bigrading{q2, h2}, 0).first;
  it->second += dim;
  if (it->second == 0) dims_.erase(it);
}

long long BigradedDims::at(int q2, int h2) const {
  auto it = dims_.find(Bigrading{q2, h2});
  return it == dims_.end() ? 0 : it->second;
}

long long BigradedDims::total() const {
  long long t = 0;
  for (const auto& [g, d] : dims_) t += d;
  return t;
}

BigradedDims BigradedDims::shifted(int dq2, int dh2) const {
  BigradedDims out;
  for (const auto& [g, d] : dims_) out.add(g.q2 + dq2, g.h2 + dh2, d);
  return out;
}

void BigradedDims::merge(const BigradedDims& other) {
  for (const auto& [g, d] : other.dims_) add(g.q2, g.h2, d);
}

BigradedDims BigradedDims::tensor_circle() const {
  BigradedDims out;
  for (const auto& [g, d] : dims_) {
    out.add(g.q2 + 2, g.h2, d);
    out.add(g.q2 - 2, g.h2, d);
  }
  return out;
}

std::pair<long long, long long> BigradedDims::euler_delta() const {
  long long re = 0, im = 0;
  for (const auto& [g, d] : dims_) {
    int td = delta2(g.q2, g.h2);  // 2*delta, any integer
    switch (((td % 4) + 4) % 4) {
      case 0: re += d; break;
      case 1: im += d; break;
      case 2: re -= d; break;
      case 3: im -= d; break;
    }
  }
  return {re, im};
}

long long BigradedDims::determinant() const {
  auto [re, im] = euler_delta();
  return std::llabs(re) + std::llabs(im);
}

std::string BigradedDims::pretty() const {
  std::ostringstream os;
  for (const auto& [g, d] : dims_)
    os << "q=" << frac2(g.q2) << " h=" << frac2(g.h2) << " dim=" << d << "\n";
  return os.str();
}

std::string BigradedDims::tsv() const {
  std::ostringstream os;
  os << "q\th\tdim\n";
  for (const auto& [g, d] : dims_)
    os << frac2(g.q2) << "\t" << frac2(g.h2) << "\t" << d << "\n";
  return os.str();
}

}  // namespace khc
