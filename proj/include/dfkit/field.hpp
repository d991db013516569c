#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "dfkit/common.hpp"
#include "dfkit/poly.hpp"

namespace dfkit {

/// Element of GF(p^n) in polynomial-basis coordinates, low degree first.
struct FieldElement {
  std::vector<u32> coeffs;

  auto operator<=>(const FieldElement&) const = default;
};

/// The finite field GF(p^n) = GF(p)[x] / (modulus).
///
/// Elements are also addressed by a dense integer code
///   code = c_0 * p^(n-1) + c_1 * p^(n-2) + ... + c_(n-1),
/// so that comparing codes is the same as comparing coefficient lists
/// lexicographically (low degree first). All arithmetic below works on codes;
/// multiplication goes through log/antilog tables built once per field.
/// Copies share the immutable tables.
class Field {
 public:
  using Code = u32;

  /// GF(p^n) with the lexicographically least monic irreducible modulus.
  static Field build(u64 p, unsigned n);

  /// GF(p^n) with an explicit modulus (low degree first, monic, length n+1).
  static Field with_modulus(u64 p, poly::Poly modulus);

  u64 characteristic() const { return t_->p; }
  unsigned degree() const { return t_->n; }
  u64 order() const { return t_->q; }
  const poly::Poly& modulus() const { return t_->modulus; }

  Code encode(const FieldElement& e) const;
  FieldElement decode(Code c) const;
  bool contains(const FieldElement& e) const;

  /// Coefficient of x^j in the element with the given code.
  u32 coeff(Code c, unsigned j) const;

  static constexpr Code zero() { return 0; }
  Code one() const { return t_->one; }
  /// Code of c * 1 for a prime-field residue c.
  Code from_residue(u64 c) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;  // throws Error on zero
  Code pow(Code a, u64 e) const;
  /// Multiplicative order of a nonzero element.
  u64 element_order(Code a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, u64 e) const;

  /// The canonically least element of multiplicative order q - 1.
  Code primitive() const { return t_->primitive; }
  FieldElement primitive_element() const { return decode(t_->primitive); }

  /// Discrete log to base primitive(); a must be nonzero.
  u64 log(Code a) const;
  Code exp(u64 e) const;

  /// Trace to the subfield GF(p^sub_degree): sum of x^(Q^j), Q = p^sub_degree,
  /// j = 0 .. degree/sub_degree - 1.
  Code trace(Code x, unsigned sub_degree) const;

  std::string describe() const;
  std::string format(Code c) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    u64 p = 0;
    unsigned n = 0;
    u64 q = 0;
    poly::Poly modulus;
    Code one = 0;
    Code primitive = 0;
    std::vector<Code> exp;  // length q - 1
    std::vector<u32> log;   // length q, log[0] unused
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  static Field make(u64 p, poly::Poly modulus);

  poly::Poly to_poly(Code c) const;
  Code from_poly(const poly::Poly& f) const;

  std::shared_ptr<const Tables> t_;
};

}  // namespace dfkit
