#pragma once

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dfkit/common.hpp"
#include "dfkit/field.hpp"

namespace dfkit {

struct CyclicFactor {
  u64 modulus;
  friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

/// A factor of a finite abelian group: Z_n, or the additive group of a field.
using GroupFactor = std::variant<CyclicFactor, Field>;

/// One coordinate of a group element: a residue for a cyclic factor, a
/// coefficient list for a field factor.
using Coord = std::variant<u64, FieldElement>;

struct GroupElement {
  std::vector<Coord> coords;
  auto operator<=>(const GroupElement&) const = default;
};

/// A finite abelian group, written as an ordered product of factors.
///
/// Internally every factor is flattened into cyclic "digits" (one per cyclic
/// factor, n digits of radix p per GF(p^n) factor), and an element is handled
/// as its dense index in [0, order). The first factor is most significant,
/// so comparing indices is the canonical lexicographic order on coordinates.
/// The canonical generators are the unit vectors of the digits.
class Group {
 public:
  using Elem = u64;

  Group() = default;
  explicit Group(std::vector<GroupFactor> factors);

  static Group cyclic(u64 n);
  static Group product(const Group& left, const Group& right);

  const std::vector<GroupFactor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  u64 factor_order(std::size_t i) const { return factor_orders_[i]; }
  u64 order() const { return order_; }

  Elem zero() const { return 0; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  /// c * a, with c an ordinary integer.
  Elem scale(Elem a, u64 c) const;
  u64 element_order(Elem a) const;
  bool contains(Elem a) const { return a < order_; }

  std::span<const u64> radices() const { return radices_; }
  std::vector<u64> digits(Elem a) const;
  Elem from_digits(std::span<const u64> digits) const;
  /// Unit vector of each digit, in digit order.
  std::vector<Elem> generators() const;

  /// Per-factor component: a residue (cyclic) or field code.
  u64 factor_code(Elem a, std::size_t i) const;
  Elem from_factor_codes(std::span<const u64> codes) const;

  Elem index(const GroupElement& e) const;
  GroupElement element(Elem a) const;

  std::string describe() const;
  std::string format(Elem a) const;

  friend bool operator==(const Group& a, const Group& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<GroupFactor> factors_;
  std::vector<u64> factor_orders_;
  std::vector<u64> factor_weights_;
  std::vector<u64> radices_;
  std::vector<u64> weights_;
  u64 order_ = 1;
};

/// Homomorphism between groups, given by images of the domain's canonical
/// generators.
struct GroupMap {
  Group domain;
  Group codomain;
  std::vector<Group::Elem> generator_images;

  Group::Elem apply(Group::Elem x) const;
  /// Images of the domain generators have orders compatible with theirs.
  bool is_homomorphism() const;
  /// Exhaustive image counting.
  bool is_bijective() const;
};

}  // namespace dfkit
