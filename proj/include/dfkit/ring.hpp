#pragma once

#include <span>
#include <vector>

#include "dfkit/field.hpp"
#include "dfkit/group.hpp"

namespace dfkit {

struct RingElement {
  std::vector<FieldElement> coords;
  auto operator<=>(const RingElement&) const = default;
};

/// R_v = GF(q_1) x ... x GF(q_t). Elements share dense indices with the
/// additive group returned by additive_group().
class Ring {
 public:
  using Elem = Group::Elem;

  explicit Ring(std::vector<Field> factors);
  /// Builds each factor with Field::build; every entry must be a prime power.
  static Ring build(std::span<const u64> prime_powers);

  const std::vector<Field>& factors() const { return factors_; }
  u64 order() const { return additive_.order(); }
  const Group& additive_group() const { return additive_; }

  Elem add(Elem a, Elem b) const { return additive_.add(a, b); }
  Elem sub(Elem a, Elem b) const { return additive_.sub(a, b); }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, u64 e) const;
  Elem one() const;
  bool is_unit(Elem a) const;

  Field::Code coord(Elem a, std::size_t i) const {
    return static_cast<Field::Code>(additive_.factor_code(a, i));
  }
  Elem from_coords(std::span<const u64> codes) const { return additive_.from_factor_codes(codes); }
  /// Element whose i-th coordinate is residues[i] * 1.
  Elem from_residues(std::span<const u64> residues) const;

  Elem encode(const RingElement& e) const;
  RingElement decode(Elem a) const;

  std::string describe() const;

 private:
  std::vector<Field> factors_;
  Group additive_;
};

/// A cyclic subgroup of U(R_v), acting on R_v by multiplication.
struct UnitAction {
  Ring ring;
  Ring::Elem generator;
  u64 order;

  /// generator^0, generator^1, ..., generator^(order-1).
  std::vector<Ring::Elem> elements() const;
};

/// The subgroup of order k generated by (w_1^((q_1-1)/k), ..., w_t^((q_t-1)/k)),
/// w_i the canonical primitive element of the i-th factor.
UnitAction unit_subgroup_of_order(const Ring& ring, u64 k);

}  // namespace dfkit
