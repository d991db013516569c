#include "dfkit/field.hpp"

#include <sstream>

namespace dfkit {
namespace {

poly::Poly code_to_poly(u64 code, u64 p, unsigned n) {
  poly::Poly f(n, 0);
  for (unsigned j = n; j > 0; --j) {
    f[j - 1] = static_cast<u32>(code % p);
    code /= p;
  }
  poly::trim(f);
  return f;
}

u64 poly_to_code(const poly::Poly& f, u64 p, unsigned n) {
  u64 code = 0;
  for (unsigned j = 0; j < n; ++j) code = code * p + (j < f.size() ? f[j] : 0);
  return code;
}

}  // namespace

Field Field::build(u64 p, unsigned n) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (n < 1) throw Error("field degree must be at least 1");
  require_within_cap(checked_pow(p, n));
  // Enumerate the n lower coefficients in canonical order (c_0 most significant).
  const u64 count = checked_pow(p, n);
  for (u64 code = 0; code < count; ++code) {
    poly::Poly f(n + 1, 0);
    u64 rest = code;
    for (unsigned j = n; j > 0; --j) {
      f[j - 1] = static_cast<u32>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    if (poly::is_irreducible(f, p)) return make(p, std::move(f));
  }
  throw Error("internal error: no irreducible polynomial of degree " + std::to_string(n));
}

Field Field::with_modulus(u64 p, poly::Poly modulus) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  for (auto c : modulus)
    if (c >= p) throw Error("modulus coefficient out of range");
  if (modulus.empty() || modulus.back() != 1) throw Error("modulus must be monic");
  if (!poly::is_irreducible(modulus, p)) throw Error("modulus is not irreducible");
  return make(p, std::move(modulus));
}

Field Field::make(u64 p, poly::Poly modulus) {
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->n = static_cast<unsigned>(modulus.size() - 1);
  t->q = checked_pow(p, t->n);
  require_within_cap(t->q);
  t->modulus = std::move(modulus);
  const u64 q = t->q;
  const unsigned n = t->n;
  t->one = static_cast<Code>(poly_to_code(poly::Poly{1}, p, n));

  const auto primes = factorize(q - 1);
  auto is_primitive = [&](const poly::Poly& f) {
    for (auto [r, e] : primes)
      if (poly::powmod(f, (q - 1) / r, t->modulus, p) == poly::Poly{1}) return false;
    return true;
  };
  bool found = false;
  for (u64 c = 1; c < q; ++c) {
    poly::Poly f = code_to_poly(c, p, n);
    if (q == 2 || is_primitive(f)) {
      t->primitive = static_cast<Code>(c);
      found = true;
      break;
    }
  }
  if (!found) throw Error("internal error: no primitive element");

  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  const poly::Poly alpha = code_to_poly(t->primitive, p, n);
  poly::Poly cur{1};
  for (u64 i = 0; i < q - 1; ++i) {
    const u64 code = poly_to_code(cur, p, n);
    t->exp[i] = static_cast<Code>(code);
    t->log[code] = static_cast<u32>(i);
    cur = poly::mulmod(cur, alpha, t->modulus, p);
  }
  return Field(std::move(t));
}

poly::Poly Field::to_poly(Code c) const { return code_to_poly(c, t_->p, t_->n); }

Field::Code Field::from_poly(const poly::Poly& f) const {
  return static_cast<Code>(poly_to_code(f, t_->p, t_->n));
}

Field::Code Field::encode(const FieldElement& e) const {
  if (!contains(e)) throw Error("element does not belong to " + describe());
  return static_cast<Code>(poly_to_code(e.coeffs, t_->p, t_->n));
}

FieldElement Field::decode(Code c) const {
  FieldElement e;
  e.coeffs.assign(t_->n, 0);
  for (unsigned j = t_->n; j > 0; --j) {
    e.coeffs[j - 1] = static_cast<u32>(c % t_->p);
    c = static_cast<Code>(c / t_->p);
  }
  return e;
}

bool Field::contains(const FieldElement& e) const {
  if (e.coeffs.size() != t_->n) return false;
  for (auto c : e.coeffs)
    if (c >= t_->p) return false;
  return true;
}

u32 Field::coeff(Code c, unsigned j) const {
  for (unsigned i = t_->n - 1; i > j; --i) c = static_cast<Code>(c / t_->p);
  return static_cast<u32>(c % t_->p);
}

Field::Code Field::from_residue(u64 c) const { return static_cast<Code>((c % t_->p) * t_->one); }

Field::Code Field::add(Code a, Code b) const {
  const u64 p = t_->p;
  if (t_->n == 1) return static_cast<Code>((u64{a} + b) % p);
  u64 result = 0, scale = 1;
  for (unsigned j = 0; j < t_->n; ++j) {
    result += ((a % p + b % p) % p) * scale;
    a = static_cast<Code>(a / p);
    b = static_cast<Code>(b / p);
    scale *= p;
  }
  return static_cast<Code>(result);
}

Field::Code Field::neg(Code a) const {
  const u64 p = t_->p;
  if (t_->n == 1) return static_cast<Code>((p - a) % p);
  u64 result = 0, scale = 1;
  for (unsigned j = 0; j < t_->n; ++j) {
    result += ((p - a % p) % p) * scale;
    a = static_cast<Code>(a / p);
    scale *= p;
  }
  return static_cast<Code>(result);
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  u64 e = u64{t_->log[a]} + t_->log[b];
  if (e >= t_->q - 1) e -= t_->q - 1;
  return t_->exp[e];
}

Field::Code Field::inv(Code a) const {
  if (a == 0) throw Error("inversion of zero in " + describe());
  const u64 l = t_->log[a];
  return t_->exp[l == 0 ? 0 : (t_->q - 1) - l];
}

Field::Code Field::pow(Code a, u64 e) const {
  if (e == 0) return t_->one;
  if (a == 0) return 0;
  return t_->exp[mulmod(t_->log[a], e, t_->q - 1)];
}

u64 Field::element_order(Code a) const {
  if (a == 0) throw Error("zero has no multiplicative order");
  const u64 group = t_->q - 1;
  return group / gcd(group, t_->log[a]);
}

u64 Field::log(Code a) const {
  if (a == 0) throw Error("logarithm of zero");
  return t_->log[a];
}

Field::Code Field::exp(u64 e) const { return t_->exp[e % (t_->q - 1)]; }

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  return decode(add(encode(a), encode(b)));
}
FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  return decode(mul(encode(a), encode(b)));
}
FieldElement Field::inv(const FieldElement& a) const { return decode(inv(encode(a))); }
FieldElement Field::pow(const FieldElement& a, u64 e) const { return decode(pow(encode(a), e)); }

Field::Code Field::trace(Code x, unsigned sub_degree) const {
  if (sub_degree == 0 || t_->n % sub_degree != 0)
    throw Error("subfield degree " + std::to_string(sub_degree) + " does not divide " +
                std::to_string(t_->n));
  const u64 big_q = checked_pow(t_->p, sub_degree);
  Code total = 0, y = x;
  for (unsigned j = 0; j < t_->n / sub_degree; ++j) {
    total = add(total, y);
    y = pow(y, big_q);
  }
  return total;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << t_->p;
  if (t_->n > 1) os << "^" << t_->n;
  os << ")";
  return os.str();
}

std::string Field::format(Code c) const {
  if (t_->n == 1) return std::to_string(c);
  std::ostringstream os;
  auto e = decode(c);
  os << "[";
  for (std::size_t j = 0; j < e.coeffs.size(); ++j) os << (j ? "," : "") << e.coeffs[j];
  os << "]";
  return os.str();
}

}  // namespace dfkit
