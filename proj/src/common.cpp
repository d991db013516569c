#include "dfkit/common.hpp"

namespace dfkit {

OrderCapExceeded::OrderCapExceeded(u64 order)
    : Error("group order " + std::to_string(order) + " exceeds the exhaustive cap of " +
            std::to_string(kExhaustiveOrderCap)),
      order_(order) {}

void require_within_cap(u64 order) {
  if (order > kExhaustiveOrderCap) throw OrderCapExceeded(order);
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiplication");
  return r;
}

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in addition");
  return r;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

u64 mulmod(u64 a, u64 b, u64 m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    out.push_back({d, a});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<PrimePower> as_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

u64 multiplicative_order_mod(u64 a, u64 m) {
  if (m == 1) return 1;
  if (gcd(a, m) != 1) throw Error("element is not a unit");
  u64 phi = m;
  for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
  u64 order = phi;
  for (auto [p, e] : factorize(phi)) {
    while (order % p == 0 && powmod(a, order / p, m) == 1) order /= p;
  }
  return order;
}

}  // namespace dfkit
