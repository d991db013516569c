#include "dfkit/ring.hpp"

#include <sstream>

namespace dfkit {
namespace {

std::vector<GroupFactor> as_group_factors(const std::vector<Field>& fields) {
  std::vector<GroupFactor> out;
  for (const auto& f : fields) out.emplace_back(f);
  return out;
}

}  // namespace

Ring::Ring(std::vector<Field> factors)
    : factors_(std::move(factors)), additive_(as_group_factors(factors_)) {
  if (factors_.empty()) throw Error("a ring needs at least one field factor");
}

Ring Ring::build(std::span<const u64> prime_powers) {
  std::vector<Field> fields;
  for (u64 q : prime_powers) {
    auto pp = as_prime_power(q);
    if (!pp) throw Error(std::to_string(q) + " is not a prime power");
    fields.push_back(Field::build(pp->prime, pp->exponent));
  }
  return Ring(std::move(fields));
}

Ring::Elem Ring::mul(Elem a, Elem b) const {
  std::vector<u64> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i].mul(coord(a, i), coord(b, i));
  return from_coords(c);
}

Ring::Elem Ring::pow(Elem a, u64 e) const {
  std::vector<u64> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i].pow(coord(a, i), e);
  return from_coords(c);
}

Ring::Elem Ring::one() const {
  std::vector<u64> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i].one();
  return from_coords(c);
}

bool Ring::is_unit(Elem a) const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (coord(a, i) == 0) return false;
  return true;
}

Ring::Elem Ring::from_residues(std::span<const u64> residues) const {
  if (residues.size() != factors_.size()) throw Error("coordinate count mismatch");
  std::vector<u64> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i].from_residue(residues[i]);
  return from_coords(c);
}

Ring::Elem Ring::encode(const RingElement& e) const {
  if (e.coords.size() != factors_.size()) throw Error("coordinate count mismatch");
  std::vector<u64> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = factors_[i].encode(e.coords[i]);
  return from_coords(c);
}

RingElement Ring::decode(Elem a) const {
  RingElement e;
  for (std::size_t i = 0; i < factors_.size(); ++i) e.coords.push_back(factors_[i].decode(coord(a, i)));
  return e;
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << "R_" << order() << " = ";
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << factors_[i].describe();
  return os.str();
}

std::vector<Ring::Elem> UnitAction::elements() const {
  std::vector<Ring::Elem> out;
  Ring::Elem cur = ring.one();
  for (u64 j = 0; j < order; ++j) {
    out.push_back(cur);
    cur = ring.mul(cur, generator);
  }
  return out;
}

UnitAction unit_subgroup_of_order(const Ring& ring, u64 k) {
  if (k < 1) throw Error("subgroup order must be positive");
  std::vector<u64> c;
  for (const auto& f : ring.factors()) {
    if ((f.order() - 1) % k != 0)
      throw Error(std::to_string(k) + " does not divide " + std::to_string(f.order() - 1) +
                  " = |" + f.describe() + "^*|");
    c.push_back(f.pow(f.primitive(), (f.order() - 1) / k));
  }
  UnitAction a{ring, ring.from_coords(c), k};
  // exact order k: the generator is a unit, g^k = 1 and no smaller power is 1
  Ring::Elem cur = a.generator;
  for (u64 j = 1; j < k; ++j) {
    if (cur == ring.one()) throw Error("internal error: generator order below " + std::to_string(k));
    cur = ring.mul(cur, a.generator);
  }
  if (cur != ring.one()) throw Error("internal error: generator order is not " + std::to_string(k));
  return a;
}

}  // namespace dfkit
