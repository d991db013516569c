#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dfkit {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Exhaustive routines refuse groups (and fields) larger than this.
inline constexpr u64 kExhaustiveOrderCap = 1'000'000;

/// Precondition or construction failure. The message is meant for end users.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive routine would exceed kExhaustiveOrderCap.
class OrderCapExceeded : public Error {
 public:
  explicit OrderCapExceeded(u64 order);
  u64 order() const { return order_; }

 private:
  u64 order_;
};

void require_within_cap(u64 order);

// ---------------------------------------------------------------------------
// Integer helpers. All multiplications are overflow-checked and throw Error.

u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

bool is_prime(u64 n);

struct PrimePower {
  u64 prime;
  unsigned exponent;
};

/// p^a == n with p prime, a >= 1; nullopt otherwise.
std::optional<PrimePower> as_prime_power(u64 n);

/// Prime factorisation by trial division, primes ascending.
std::vector<PrimePower> factorize(u64 n);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1).
u64 multiplicative_order_mod(u64 a, u64 m);

}  // namespace dfkit
