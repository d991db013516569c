#include "dfkit/abelian.hpp"

#include <algorithm>
#include <tuple>

namespace dfkit {
namespace {

// A cyclic p-group component of a primary decomposition.
struct Component {
  u64 prime;
  unsigned exponent;
  std::size_t digit;     // canonical generator it came from
  Group::Elem element;   // generator of the component
  u64 idempotent_coeff;  // coefficient of this component in the digit generator
};

std::vector<Component> primary_components(const Group& g) {
  std::vector<Component> out;
  const auto radices = g.radices();
  const auto gens = g.generators();
  for (std::size_t i = 0; i < radices.size(); ++i) {
    const u64 r = radices[i];
    for (auto [p, a] : factorize(r)) {
      const u64 pa = checked_pow(p, a);
      const u64 cofactor = r / pa;
      // cofactor is invertible mod p^a since gcd(cofactor, p) = 1
      u64 inv = 1;
      if (pa > 1) {
        const u64 phi = pa / p * (p - 1);
        inv = powmod(cofactor % pa, phi - 1, pa);
      }
      out.push_back({p, a, i, g.scale(gens[i], cofactor), inv});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
    return std::tie(x.prime, x.exponent) < std::tie(y.prime, y.exponent);
  });
  return out;
}

}  // namespace

std::vector<u64> smith_diagonal(std::vector<u64> d) {
  // For a diagonal matrix, replacing (a, b) by (gcd, lcm) is a sequence of
  // unimodular row/column operations; iterating reaches the divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const u64 g = gcd(d[i], d[j]);
      const u64 l = (g == 0) ? 0 : checked_mul(d[i] / g, d[j]);
      d[i] = g;
      d[j] = l;
    }
  std::vector<u64> out;
  for (u64 x : d)
    if (x != 1) out.push_back(x);
  return out;
}

std::vector<u64> invariant_factors(const Group& g) {
  auto r = g.radices();
  return smith_diagonal(std::vector<u64>(r.begin(), r.end()));
}

std::optional<GroupMap> abelian_iso(const Group& from, const Group& to) {
  if (from.order() != to.order()) return std::nullopt;
  if (invariant_factors(from) != invariant_factors(to)) return std::nullopt;

  const auto src = primary_components(from);
  const auto dst = primary_components(to);
  if (src.size() != dst.size()) return std::nullopt;
  for (std::size_t c = 0; c < src.size(); ++c)
    if (src[c].prime != dst[c].prime || src[c].exponent != dst[c].exponent) return std::nullopt;

  GroupMap map{from, to, std::vector<Group::Elem>(from.radices().size(), 0)};
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto& img = map.generator_images[src[c].digit];
    img = to.add(img, to.scale(dst[c].element, src[c].idempotent_coeff));
  }

  if (!map.is_homomorphism()) throw Error("internal error: isomorphism is not a homomorphism");
  const auto gens = from.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (map.apply(from.add(gens[i], gens[j])) != to.add(map.apply(gens[i]), map.apply(gens[j])))
        throw Error("internal error: isomorphism is not additive");
  if (!map.is_bijective()) throw Error("internal error: isomorphism is not bijective");
  return map;
}

}  // namespace dfkit
