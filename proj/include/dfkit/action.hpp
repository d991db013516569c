#pragma once

#include <optional>
#include <vector>

#include "dfkit/group.hpp"
#include "dfkit/ring.hpp"

namespace dfkit {

/// A finite group of automorphisms of an abelian group, materialised as
/// permutations of element indices. Index 0 is always the identity.
class Action {
 public:
  /// The identity-only action.
  static Action trivial(const Group& g);
  /// Multiplication by the powers of a unit on the additive group of R_v.
  static Action from_units(const UnitAction& units);
  /// Closure of a set of automorphisms given as generator-image maps. Each
  /// map is checked to be a homomorphism and a bijection; throws Error if not.
  static Action generated_by(const Group& g, const std::vector<GroupMap>& automorphisms);
  /// The cyclic group generated by x -> u*x (u an integer prime to the exponent).
  static Action multiplier(const Group& g, u64 u);

  const Group& group() const { return group_; }
  std::size_t order() const { return perms_.size(); }
  Group::Elem apply(std::size_t alpha, Group::Elem x) const { return perms_[alpha][x]; }

 private:
  Action(Group g, std::vector<std::vector<u32>> perms) : group_(std::move(g)), perms_(std::move(perms)) {}

  Group group_;
  std::vector<std::vector<u32>> perms_;
};

struct FixedPoint {
  std::size_t alpha;  // index of the non-identity automorphism
  Group::Elem element;
};

/// First (alpha, g) with alpha != id, g != 0 and alpha(g) = g, if any.
std::optional<FixedPoint> find_fixed_point(const Action& action);
bool is_semiregular(const Action& action);

/// Orbits on G \ {0}; each orbit sorted (least element first), orbits sorted
/// by least element.
std::vector<std::vector<Group::Elem>> orbits(const Action& action);

}  // namespace dfkit
