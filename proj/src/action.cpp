#include "dfkit/action.hpp"

#include <algorithm>

namespace dfkit {
namespace {

// Keeps the materialised permutations within a few hundred MB.
constexpr u64 kMaxPermutationEntries = u64{1} << 26;

std::vector<u32> identity_perm(u64 n) {
  std::vector<u32> p(n);
  for (u64 i = 0; i < n; ++i) p[i] = static_cast<u32>(i);
  return p;
}

}  // namespace

Action Action::trivial(const Group& g) {
  require_within_cap(g.order());
  return Action(g, {identity_perm(g.order())});
}

Action Action::from_units(const UnitAction& units) {
  const Ring& ring = units.ring;
  require_within_cap(ring.order());
  if (!ring.is_unit(units.generator)) throw Error("action generator is not a unit");
  if (checked_mul(units.order, ring.order()) > kMaxPermutationEntries)
    throw Error("action too large to materialise");
  std::vector<std::vector<u32>> perms;
  for (auto u : units.elements()) {
    std::vector<u32> p(ring.order());
    for (u64 x = 0; x < ring.order(); ++x) p[x] = static_cast<u32>(ring.mul(u, x));
    perms.push_back(std::move(p));
  }
  return Action(ring.additive_group(), std::move(perms));
}

Action Action::generated_by(const Group& g, const std::vector<GroupMap>& automorphisms) {
  require_within_cap(g.order());
  const u64 n = g.order();
  std::vector<std::vector<u32>> gens;
  for (const auto& m : automorphisms) {
    if (!(m.domain == g) || !(m.codomain == g)) throw Error("automorphism acts on a different group");
    if (!m.is_homomorphism()) throw Error("map is not a homomorphism");
    std::vector<u32> p(n);
    std::vector<bool> hit(n, false);
    for (u64 x = 0; x < n; ++x) {
      const auto y = m.apply(x);
      if (hit[y]) throw Error("map is not bijective");
      hit[y] = true;
      p[x] = static_cast<u32>(y);
    }
    gens.push_back(std::move(p));
  }
  std::vector<std::vector<u32>> perms{identity_perm(n)};
  // breadth-first closure under right multiplication by generators
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (const auto& s : gens) {
      std::vector<u32> c(n);
      for (u64 x = 0; x < n; ++x) c[x] = s[perms[i][x]];
      if (std::find(perms.begin(), perms.end(), c) == perms.end()) {
        if (checked_mul(perms.size() + 1, n) > kMaxPermutationEntries)
          throw Error("action too large to materialise");
        perms.push_back(std::move(c));
      }
    }
  }
  return Action(g, std::move(perms));
}

Action Action::multiplier(const Group& g, u64 u) {
  std::vector<Group::Elem> images;
  for (auto e : g.generators()) images.push_back(g.scale(e, u));
  return generated_by(g, {GroupMap{g, g, std::move(images)}});
}

std::optional<FixedPoint> find_fixed_point(const Action& action) {
  const u64 n = action.group().order();
  for (std::size_t a = 1; a < action.order(); ++a)
    for (Group::Elem x = 1; x < n; ++x)
      if (action.apply(a, x) == x) return FixedPoint{a, x};
  return std::nullopt;
}

bool is_semiregular(const Action& action) { return !find_fixed_point(action).has_value(); }

std::vector<std::vector<Group::Elem>> orbits(const Action& action) {
  const u64 n = action.group().order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Group::Elem>> out;
  for (Group::Elem x = 1; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<Group::Elem> orbit;
    for (std::size_t a = 0; a < action.order(); ++a) {
      const auto y = action.apply(a, x);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace dfkit
