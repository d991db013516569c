#pragma once

// Dense polynomials over a prime field GF(p). Coefficients are stored
// low-degree first; the zero polynomial is the empty vector.

#include <vector>

#include "dfkit/common.hpp"

namespace dfkit::poly {

using Poly = std::vector<u32>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero

Poly add(const Poly& f, const Poly& g, u64 p);
Poly sub(const Poly& f, const Poly& g, u64 p);
Poly mul(const Poly& f, const Poly& g, u64 p);

/// Remainder modulo a monic polynomial.
Poly rem(const Poly& f, const Poly& monic, u64 p);
Poly mulmod(const Poly& f, const Poly& g, const Poly& monic, u64 p);
Poly powmod(Poly base, u64 exp, const Poly& monic, u64 p);

/// Monic gcd.
Poly gcd(Poly f, Poly g, u64 p);

u64 eval(const Poly& f, u64 x, u64 p);

/// True iff `f` (monic, degree >= 1) is irreducible over GF(p): no roots in
/// GF(p) and gcd(f, x^(p^i) - x) = 1 for every 1 <= i <= deg(f)/2.
bool is_irreducible(const Poly& f, u64 p);

}  // namespace dfkit::poly
