#pragma once

// Test-side reference implementations.  Deliberately naive and independent of
// the library's fast paths.

#include <cstdint>
#include <numeric>
#include <vector>

#include "cyclrc/field.hpp"
#include "cyclrc/matrix.hpp"

namespace oracle {

using cyclrc::Elem;
using cyclrc::Field;
using IntPoly = std::vector<std::uint32_t>;  // low -> high over GF(p)

inline std::uint64_t order_by_powering(const Field& f, Elem a) {
  Elem x = a;
  std::uint64_t k = 1;
  while (x != 1) {
    x = f.mul(x, a);
    ++k;
  }
  return k;
}

inline void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline IntPoly rem(IntPoly a, const IntPoly& b, std::uint32_t p) {
  trim(a);
  // b monic
  while (a.size() >= b.size()) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - (c * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

inline IntPoly from_index(std::uint64_t v, std::uint32_t p, std::size_t len) {
  IntPoly out(len);
  for (auto& d : out) {
    d = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return out;
}

inline bool is_irreducible_by_trial_division(const IntPoly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      IntPoly g = from_index(v, p, d);
      g.push_back(1);
      if (rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline IntPoly least_irreducible(std::uint32_t p, std::size_t m) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    IntPoly g = from_index(v, p, m);
    g.push_back(1);
    if (is_irreducible_by_trial_division(g, p)) return g;
  }
  return {};
}

inline Elem schoolbook_mul(const Field& f, Elem a, Elem b) {
  const std::uint32_t p = f.characteristic();
  const auto da = f.digits(a);
  const auto db = f.digits(b);
  IntPoly prod(da.size() + db.size(), 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  IntPoly r = rem(prod, f.modulus(), p);
  r.resize(f.degree(), 0);
  Elem out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
  return out;
}

inline Elem digitwise_add(const Field& f, Elem a, Elem b) {
  const std::uint32_t p = f.characteristic();
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

/// Minimum weight over all q^k - 1 nonzero messages, computed as message * G
/// one word at a time.
inline int brute_min_distance(const cyclrc::Matrix& g) {
  const auto& f = *g.field();
  const std::size_t k = g.rows(), n = g.cols();
  if (k == 0) return static_cast<int>(n) + 1;
  std::vector<Elem> msg(k, 0);
  int best = static_cast<int>(n) + 1;
  while (true) {
    std::size_t i = 0;
    while (i < k && msg[i] == f.size() - 1) msg[i++] = 0;
    if (i == k) break;
    ++msg[i];
    const auto w = cyclrc::vec_mul(msg, g);
    int wt = 0;
    for (Elem e : w) wt += e != 0;
    best = std::min(best, wt);
  }
  return best;
}

/// Generalized BCH bound by trying every step b, start u and run length.
inline int brute_bch(const std::vector<int>& z, int n) {
  std::vector<bool> in(n, false);
  for (int e : z) in[e] = true;
  if (static_cast<int>(z.size()) == n) return n + 1;
  int best = 0;
  for (int b = 1; b < n; ++b) {
    if (std::gcd(b, n) != 1) continue;
    for (int u = 0; u < n; ++u) {
      int len = 0;
      while (len < n && in[(u + static_cast<long long>(len) * b) % n]) ++len;
      best = std::max(best, len);
    }
  }
  return best + 1;
}

}  // namespace oracle
