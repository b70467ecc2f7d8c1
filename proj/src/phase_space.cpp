// Copyright 2026 The weylmaps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weyl/phase_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

long mod(long a, long d) {
  long r = a % d;
  return r < 0 ? r + d : r;
}

void require_dimension(int d) {
  if (d < 2) throw InvalidArgument("dimension d must be >= 2, got " + std::to_string(d));
}

// Returns (g, x, y) with x a + y b = g = gcd(a, b) >= 0.
std::tuple<long, long, long> extended_gcd(long a, long b) {
  long old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_x, x) = std::make_tuple(x, old_x - q * x);
    std::tie(old_y, y) = std::make_tuple(y, old_y - q * y);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

}  // namespace

PhasePoint PhasePoint::make(long i, long j, int d) {
  require_dimension(d);
  return PhasePoint{static_cast<int>(mod(i, d)), static_cast<int>(mod(j, d)), d};
}

PhasePoint PhasePoint::from_index(int alpha, int d) {
  require_dimension(d);
  if (alpha < 0 || alpha >= d * d) {
    throw InvalidArgument("single index " + std::to_string(alpha) + " out of range for d=" +
                          std::to_string(d));
  }
  return PhasePoint{alpha / d, alpha % d, d};
}

PhasePoint operator+(const PhasePoint& u, const PhasePoint& v) {
  if (u.d != v.d) throw InvalidArgument("phase point dimension mismatch");
  return PhasePoint::make(long{u.i} + v.i, long{u.j} + v.j, u.d);
}

PhasePoint operator-(const PhasePoint& u) { return PhasePoint::make(-long{u.i}, -long{u.j}, u.d); }

PhasePoint operator*(long k, const PhasePoint& u) {
  return PhasePoint::make(mod(k, u.d) * u.i, mod(k, u.d) * u.j, u.d);
}

int symplectic_product(const PhasePoint& u, const PhasePoint& v) {
  if (u.d != v.d) {
    throw InvalidArgument("symplectic product of points with d=" + std::to_string(u.d) +
                          " and d=" + std::to_string(v.d));
  }
  return static_cast<int>(mod(long{u.j} * v.i - long{u.i} * v.j, u.d));
}

int cyclic_order(const PhasePoint& u) {
  if (u.is_zero()) throw InvalidArgument("cyclic_order of the identity (0,0)");
  return u.d / std::gcd(std::gcd(u.i, u.j), u.d);
}

long SubgroupHNF::order() const { return (long{d_} * d_) / (long{m_} * n_); }

bool SubgroupHNF::contains(const PhasePoint& u) const {
  if (u.d != d_) return false;
  if (u.i % m_ != 0) return false;
  const long k = u.i / m_;
  return mod(long{u.j} - long{w_} * k, n_) == 0;
}

bool hnf_validate(int d, int m, int w, int n) {
  if (d < 2 || m < 1 || n < 1 || w < 0) return false;
  if (d % m != 0 || d % n != 0) return false;
  if (w >= n) return false;
  return (long{w} * (d / m)) % n == 0;
}

SubgroupHNF make_subgroup(int d, int m, int w, int n) {
  if (!hnf_validate(d, m, w, n)) {
    std::ostringstream os;
    os << "invalid HNF (d=" << d << ", m=" << m << ", w=" << w << ", n=" << n << ")";
    throw InvalidArgument(os.str());
  }
  return SubgroupHNF(d, m, w, n);
}

SubgroupHNF full_group(int d) { return make_subgroup(d, 1, 0, 1); }
SubgroupHNF trivial_group(int d) { return make_subgroup(d, d, 0, d); }

std::vector<PhasePoint> subgroup_elements(const SubgroupHNF& h) {
  const int d = h.d();
  std::vector<PhasePoint> out;
  out.reserve(static_cast<size_t>(h.order()));
  for (long u = 0; u < d / h.m(); ++u) {
    for (long v = 0; v < d / h.n(); ++v) {
      out.push_back(PhasePoint::make(h.m() * u, h.w() * u + h.n() * v, d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Cyclic:
      return "cyclic";
    case SubgroupKind::SplitRank2:
      return "split-rank-2";
    case SubgroupKind::NonSplitRank2:
      return "non-split-rank-2";
  }
  return "unknown";
}

SubgroupType classify_subgroup(const SubgroupHNF& h) {
  const long d = h.d();
  const long nu = std::gcd(long{h.w()} * (d / h.m()), d);
  if (h.n() == nu) return {SubgroupKind::Cyclic, nu};
  if (h.w() == 0 && h.n() < d) return {SubgroupKind::SplitRank2, nu};
  if (h.w() != 0 && h.n() < nu) return {SubgroupKind::NonSplitRank2, nu};
  // Unreachable for valid triples (n | wd/m and n | d force n | nu), kept as
  // a hard stop rather than a guess.
  std::ostringstream os;
  os << "no subgroup type covers (d=" << d << ", m=" << h.m() << ", w=" << h.w()
     << ", n=" << h.n() << "), nu=" << nu;
  throw ClassificationError(os.str());
}

SubgroupHNF canonicalize(int d, std::span<const PhasePoint> generators) {
  require_dimension(d);
  // Running HNF basis {(m, w), (0, n)} of the pre-image lattice, seeded with
  // (d, 0) and (0, d). Each generator is folded in with one extended-gcd step
  // on the first column; the leftover row only touches the second column.
  long m = d, w = 0, n = d;
  for (const auto& g : generators) {
    if (g.d != d) throw InvalidArgument("generator dimension mismatch in canonicalize");
    const long a = g.i, b = g.j;
    if (a == 0) {
      n = std::gcd(n, b);
    } else {
      auto [gg, x, y] = extended_gcd(m, a);
      const long leftover = mod((a / gg) * w - (m / gg) * b, d);
      w = mod(x * w + y * b, d);
      m = gg;
      n = std::gcd(n, leftover);
    }
    w = mod(w, n);
  }
  return make_subgroup(d, static_cast<int>(m), static_cast<int>(w), static_cast<int>(n));
}

SubgroupHNF dual_subgroup(const SubgroupHNF& h) {
  const int d = h.d();
  const PhasePoint g1 = PhasePoint::make(h.m(), h.w(), d);
  const PhasePoint g2 = PhasePoint::make(0, h.n(), d);
  std::vector<PhasePoint> members;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const PhasePoint v{i, j, d};
      if (symplectic_product(g1, v) == 0 && symplectic_product(g2, v) == 0) members.push_back(v);
    }
  }
  return canonicalize(d, members);
}

std::vector<long> divisors(long n) {
  if (n < 1) throw InvalidArgument("divisors of a non-positive integer");
  std::vector<long> small, large;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      small.push_back(k);
      if (k != n / k) large.push_back(n / k);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long sigma1(long n) {
  const auto ds = divisors(n);
  return std::accumulate(ds.begin(), ds.end(), 0L);
}

namespace {

void require_order(int d, long order) {
  require_dimension(d);
  const long d2 = long{d} * d;
  if (order < 1 || d2 % order != 0) {
    throw InvalidArgument("order K=" + std::to_string(order) + " does not divide d^2=" +
                          std::to_string(d2));
  }
}

}  // namespace

std::vector<SubgroupHNF> enumerate_subgroups(int d, long order) {
  require_order(d, order);
  const long mn = (long{d} * d) / order;
  std::vector<SubgroupHNF> out;
  for (long m : divisors(d)) {
    if (mn % m != 0) continue;
    const long n = mn / m;
    if (d % n != 0) continue;
    const long g = std::gcd(n, d / m);
    for (long t = 0; t < g; ++t) {
      out.push_back(make_subgroup(d, static_cast<int>(m), static_cast<int>(t * (n / g)),
                                  static_cast<int>(n)));
    }
  }
  return out;
}

long count_subgroups(int d, long order) {
  require_order(d, order);
  const long mn = (long{d} * d) / order;
  long total = 0;
  for (long m : divisors(d)) {
    if (mn % m != 0) continue;
    const long n = mn / m;
    if (d % n != 0) continue;
    total += std::gcd(n, d / m);
  }
  return total;
}

}  // namespace weyl
