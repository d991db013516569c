#include "dfkit/group.hpp"

#include <sstream>

namespace dfkit {

Group::Group(std::vector<GroupFactor> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (const auto* c = std::get_if<CyclicFactor>(&f)) {
      if (c->modulus < 1) throw Error("cyclic factor must have order at least 1");
      factor_orders_.push_back(c->modulus);
      radices_.push_back(c->modulus);
    } else {
      const auto& field = std::get<Field>(f);
      factor_orders_.push_back(field.order());
      for (unsigned j = 0; j < field.degree(); ++j) radices_.push_back(field.characteristic());
    }
    order_ = checked_mul(order_, factor_orders_.back());
  }
  factor_weights_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 1;)
    factor_weights_[i - 1] = factor_weights_[i] * factor_orders_[i];
  weights_.assign(radices_.size(), 1);
  for (std::size_t i = radices_.size(); i-- > 1;) weights_[i - 1] = weights_[i] * radices_[i];
}

Group Group::cyclic(u64 n) { return Group({CyclicFactor{n}}); }

Group Group::product(const Group& left, const Group& right) {
  auto f = left.factors_;
  f.insert(f.end(), right.factors_.begin(), right.factors_.end());
  return Group(std::move(f));
}

Group::Elem Group::add(Elem a, Elem b) const {
  if (radices_.size() == 1) return (a + b) % order_;
  Elem result = 0;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    const u64 r = radices_[i];
    result += ((a % r + b % r) % r) * weights_[i];
    a /= r;
    b /= r;
  }
  return result;
}

Group::Elem Group::neg(Elem a) const {
  if (radices_.size() == 1) return (order_ - a) % order_;
  Elem result = 0;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    const u64 r = radices_[i];
    result += ((r - a % r) % r) * weights_[i];
    a /= r;
  }
  return result;
}

Group::Elem Group::sub(Elem a, Elem b) const {
  if (radices_.size() == 1) return (a + order_ - b) % order_;
  Elem result = 0;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    const u64 r = radices_[i];
    result += ((a % r + r - b % r) % r) * weights_[i];
    a /= r;
    b /= r;
  }
  return result;
}

Group::Elem Group::scale(Elem a, u64 c) const {
  Elem result = 0;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    const u64 r = radices_[i];
    result += mulmod(a % r, c % r, r) * weights_[i];
    a /= r;
  }
  return result;
}

u64 Group::element_order(Elem a) const {
  u64 order = 1;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    const u64 r = radices_[i];
    const u64 d = a % r;
    a /= r;
    order = lcm(order, r / gcd(r, d));
  }
  return order;
}

std::vector<u64> Group::digits(Elem a) const {
  std::vector<u64> d(radices_.size());
  for (std::size_t i = radices_.size(); i-- > 0;) {
    d[i] = a % radices_[i];
    a /= radices_[i];
  }
  return d;
}

Group::Elem Group::from_digits(std::span<const u64> d) const {
  if (d.size() != radices_.size()) throw Error("digit count mismatch");
  Elem a = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= radices_[i]) throw Error("digit out of range");
    a += d[i] * weights_[i];
  }
  return a;
}

std::vector<Group::Elem> Group::generators() const {
  std::vector<Elem> g;
  for (std::size_t i = 0; i < radices_.size(); ++i) g.push_back(radices_[i] > 1 ? weights_[i] : 0);
  return g;
}

u64 Group::factor_code(Elem a, std::size_t i) const {
  return (a / factor_weights_[i]) % factor_orders_[i];
}

Group::Elem Group::from_factor_codes(std::span<const u64> codes) const {
  if (codes.size() != factors_.size()) throw Error("coordinate count mismatch");
  Elem a = 0;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] >= factor_orders_[i]) throw Error("coordinate out of range");
    a += codes[i] * factor_weights_[i];
  }
  return a;
}

Group::Elem Group::index(const GroupElement& e) const {
  if (e.coords.size() != factors_.size())
    throw Error("element has " + std::to_string(e.coords.size()) + " coordinates, group " +
                describe() + " needs " + std::to_string(factors_.size()));
  std::vector<u64> codes(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (const auto* c = std::get_if<CyclicFactor>(&factors_[i])) {
      const auto* r = std::get_if<u64>(&e.coords[i]);
      if (r == nullptr || *r >= c->modulus) throw Error("invalid cyclic coordinate");
      codes[i] = *r;
    } else {
      const auto* fe = std::get_if<FieldElement>(&e.coords[i]);
      if (fe == nullptr) throw Error("expected a field coordinate");
      codes[i] = std::get<Field>(factors_[i]).encode(*fe);
    }
  }
  return from_factor_codes(codes);
}

GroupElement Group::element(Elem a) const {
  GroupElement e;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const u64 code = factor_code(a, i);
    if (std::holds_alternative<CyclicFactor>(factors_[i]))
      e.coords.emplace_back(code);
    else
      e.coords.emplace_back(std::get<Field>(factors_[i]).decode(static_cast<Field::Code>(code)));
  }
  return e;
}

std::string Group::describe() const {
  std::ostringstream os;
  if (factors_.empty()) return "trivial group";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " x ";
    if (const auto* c = std::get_if<CyclicFactor>(&factors_[i]))
      os << "Z_" << c->modulus;
    else
      os << std::get<Field>(factors_[i]).describe();
  }
  return os.str();
}

std::string Group::format(Elem a) const {
  std::ostringstream os;
  auto coord = [&](std::size_t i) {
    const u64 code = factor_code(a, i);
    if (std::holds_alternative<CyclicFactor>(factors_[i]))
      os << code;
    else
      os << std::get<Field>(factors_[i]).format(static_cast<Field::Code>(code));
  };
  if (factors_.size() == 1) {
    coord(0);
    return os.str();
  }
  os << "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ",";
    coord(i);
  }
  os << ")";
  return os.str();
}

Group::Elem GroupMap::apply(Group::Elem x) const {
  const auto d = domain.digits(x);
  Group::Elem y = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) y = codomain.add(y, codomain.scale(generator_images[i], d[i]));
  return y;
}

bool GroupMap::is_homomorphism() const {
  const auto radices = domain.radices();
  if (generator_images.size() != radices.size()) return false;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (!codomain.contains(generator_images[i])) return false;
    if (codomain.scale(generator_images[i], radices[i]) != 0) return false;
  }
  return true;
}

bool GroupMap::is_bijective() const {
  if (domain.order() != codomain.order()) return false;
  require_within_cap(domain.order());
  std::vector<bool> seen(codomain.order(), false);
  for (Group::Elem x = 0; x < domain.order(); ++x) {
    const auto y = apply(x);
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

}  // namespace dfkit
