#pragma once

// Slow reference implementations used only by the tests. Nothing here calls
// into the arithmetic of the library under test beyond decoding element
// indices into coordinates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "dfkit/group.hpp"

namespace oracle {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Poly = std::vector<u32>;  // low degree first

inline Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Remainder of f modulo a monic g.
inline Poly rem(Poly f, const Poly& g, u64 p) {
  const std::size_t d = g.size() - 1;
  for (std::size_t k = f.size(); k-- > d;) {
    const u64 c = f[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i)
      f[k - d + i] = static_cast<u32>((f[k - d + i] + p * p - c * g[i] % p) % p);
  }
  f.resize(std::min(f.size(), d));
  return f;
}

// Divisibility by every monic polynomial of degree 1 .. deg/2.
inline bool irreducible(const Poly& f, u64 p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    u64 total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (u64 idx = 0; idx < total; ++idx) {
      u64 t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<u32>(t % p);
        t /= p;
      }
      if (trim(rem(f, g, p)).empty()) return false;
    }
  }
  return true;
}

// Schoolbook product reduced modulo `mod`; operands have deg(mod) coefficients.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<u32>((r[i + j] + u64{a[i]} * b[j]) % p);
  r = rem(r, mod, p);
  r.resize(mod.size() - 1, 0);
  return r;
}

// Coordinatewise difference of two decoded group elements.
inline dfkit::GroupElement minus(const dfkit::Group& g, const dfkit::GroupElement& x,
                                 const dfkit::GroupElement& y) {
  dfkit::GroupElement r;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    const auto& f = g.factors()[i];
    if (const auto* c = std::get_if<dfkit::CyclicFactor>(&f)) {
      const u64 n = c->modulus;
      r.coords.emplace_back((std::get<u64>(x.coords[i]) + n - std::get<u64>(y.coords[i])) % n);
    } else {
      const u64 p = std::get<dfkit::Field>(f).characteristic();
      const auto& a = std::get<dfkit::FieldElement>(x.coords[i]).coeffs;
      const auto& b = std::get<dfkit::FieldElement>(y.coords[i]).coeffs;
      dfkit::FieldElement e;
      for (std::size_t j = 0; j < a.size(); ++j)
        e.coeffs.push_back(static_cast<u32>((a[j] + p - b[j]) % p));
      r.coords.emplace_back(e);
    }
  }
  return r;
}

// Difference counts keyed by coordinates; zero and absent elements omitted.
inline std::map<dfkit::GroupElement, u64> delta(const dfkit::Group& g,
                                                const std::vector<std::vector<u64>>& blocks) {
  std::map<dfkit::GroupElement, u64> out;
  for (const auto& b : blocks) {
    std::vector<dfkit::GroupElement> e;
    for (auto x : b) e.push_back(g.element(x));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e.size(); ++j)
        if (i != j) ++out[minus(g, e[i], e[j])];
  }
  return out;
}

// True iff every nonzero element of g occurs exactly lambda times.
inline bool is_df(const dfkit::Group& g, const std::vector<std::vector<u64>>& blocks, u64 lambda) {
  const auto d = delta(g, blocks);
  const auto zero = g.element(0);
  if (d.count(zero)) return false;
  if (lambda == 0) return d.empty();
  if (d.size() != g.order() - 1) return false;
  return std::all_of(d.begin(), d.end(), [&](const auto& kv) { return kv.second == lambda; });
}

// Primary decomposition of each cyclic order, grouped per prime and turned
// into invariant factors d_1 | d_2 | ... (units dropped).
inline std::vector<u64> invariant_factors(const std::vector<u64>& cyclic_orders) {
  std::map<u64, std::vector<u64>> parts;
  for (u64 n : cyclic_orders) {
    for (u64 p = 2; p * p <= n; ++p) {
      u64 pk = 1;
      while (n % p == 0) {
        n /= p;
        pk *= p;
      }
      if (pk > 1) parts[p].push_back(pk);
    }
    if (n > 1) parts[n].push_back(n);
  }
  std::size_t len = 0;
  for (auto& [p, v] : parts) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  std::vector<u64> out(len, 1);
  for (auto& [p, v] : parts)
    for (std::size_t i = 0; i < v.size(); ++i) out[len - 1 - i] *= v[i];
  return out;
}

}  // namespace oracle
