#include "dfkit/poly.hpp"

#include <algorithm>

namespace dfkit::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i > 0; --i)
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

Poly add(const Poly& f, const Poly& g, u64 p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = static_cast<u32>((r[i] + g[i]) % p);
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, u64 p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = static_cast<u32>((r[i] + p - g[i] % p) % p);
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, u64 p) {
  if (f.empty() || g.empty()) return {};
  std::vector<u64> acc(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) acc[i + j] = (acc[i + j] + u64{f[i]} * g[j]) % p;
  }
  Poly r(acc.begin(), acc.end());
  trim(r);
  return r;
}

Poly rem(const Poly& f, const Poly& monic, u64 p) {
  const int dm = degree(monic);
  Poly r = f;
  trim(r);
  for (int d = degree(r); d >= dm; d = degree(r)) {
    const u64 c = r[d];
    const int shift = d - dm;
    for (int i = 0; i <= dm; ++i) {
      u64 v = (u64{r[shift + i]} + p - (c * monic[i]) % p) % p;
      r[shift + i] = static_cast<u32>(v);
    }
    trim(r);
  }
  return r;
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& monic, u64 p) {
  return rem(mul(f, g, p), monic, p);
}

Poly powmod(Poly base, u64 exp, const Poly& monic, u64 p) {
  Poly result{1};
  base = rem(base, monic, p);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, monic, p);
    base = mulmod(base, base, monic, p);
    exp >>= 1;
  }
  return rem(result, monic, p);
}

Poly gcd(Poly f, Poly g, u64 p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    // make g monic, then f mod g
    const u64 inv = dfkit::powmod(g.back(), p - 2, p);
    for (auto& c : g) c = static_cast<u32>(dfkit::mulmod(c, inv, p));
    Poly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const u64 inv = dfkit::powmod(f.back(), p - 2, p);
    for (auto& c : f) c = static_cast<u32>(dfkit::mulmod(c, inv, p));
  }
  return f;
}

u64 eval(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i > 0; --i) acc = (dfkit::mulmod(acc, x, p) + f[i - 1]) % p;
  return acc;
}

bool is_irreducible(const Poly& f, u64 p) {
  const int n = degree(f);
  if (n < 1 || f[n] != 1) return false;
  if (n == 1) return true;
  for (u64 a = 0; a < p; ++a)
    if (eval(f, a, p) == 0) return false;
  const Poly x{0, 1};
  Poly h = x;  // x^(p^i) mod f
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, p, f, p);
    if (degree(gcd(f, sub(h, x, p), p)) > 0) return false;
  }
  return true;
}

}  // namespace dfkit::poly
