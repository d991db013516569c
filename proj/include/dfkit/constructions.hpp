#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dfkit/action.hpp"
#include "dfkit/designs.hpp"
#include "dfkit/diff_matrix.hpp"
#include "dfkit/ring.hpp"

namespace dfkit {

/// A difference set together with its group and parameters.
struct DsDesign {
  Group group;
  Block set;
  DSParams params;
};

/// A divisible difference set relative to `subgroup`.
struct DdsDesign {
  Group group;
  Block set;
  Block subgroup;
  DDSParams params;
};

/// orbit_ddf was handed an action with a nonzero fixed point.
class NotSemiregular : public Error {
 public:
  NotSemiregular(const Group& g, FixedPoint witness);
  const FixedPoint& witness() const { return witness_; }

 private:
  FixedPoint witness_;
};

/// The orbits of a semiregular automorphism group of order k on G \ {0}:
/// a (v, k, k-1) disjoint difference family.
Family orbit_ddf(const Action& action);

/// For |G| k odd, the orbit family split into two (v, k, (k-1)/2)-DDFs. The
/// first half takes, in order of least element, each orbit whose negation has
/// not been taken yet; the second half is its blockwise negation.
std::pair<Family, Family> orbit_ddf_split(const Action& action);

/// The least unit of Z_v of multiplicative order exactly k that reduces to an
/// element of order k modulo every prime divisor of v (CRT of per-prime-power
/// choices). Throws Error if some prime divisor is not 1 mod k.
u64 cyclic_unit_of_order(u64 v, u64 k);

/// (v, k, k-1)-DDF (or (v, k, (k-1)/2) when `half`) in R_v, from the unit
/// subgroup of order k.
Family furino_ddf(const Ring& ring, u64 k, bool half);
/// The same in Z_v, from multiplication by cyclic_unit_of_order(v, k).
Family furino_ddf_cyclic(u64 v, u64 k, bool half);

/// A nonzero associate class of R_v: the product of F_i^* over `support` and
/// {0} elsewhere. Classes are indexed by support size, then lexicographically.
struct AssociateClass {
  std::vector<std::size_t> support;  // 0-based factor indices, ascending
};

std::vector<AssociateClass> nonzero_associate_classes(const Ring& ring);

/// Per-class override of the factor replaced by S_i: 0-based class index ->
/// 0-based factor index. Classes not listed use their lowest support index.
using SigmaChoice = std::map<std::size_t, std::size_t>;

/// S_i = { w_i^j : 1 <= j <= n_i } where q_i = 2 k n_i + 1.
std::vector<Field::Code> cyclotomic_s_set(const Field& f, u64 k);

/// The representative set X: the union of sigma(C) over nonzero classes C.
std::vector<Ring::Elem> cyclotomic_representatives(const Ring& ring, u64 k,
                                                   const SigmaChoice& choice = {});

/// { xA : x in X }, a (v, k, (k-1)/2)-DDF in R_v. Needs k odd and every
/// q_i = 2 k n_i + 1.
Family cyclotomic_half_ddf(const Ring& ring, u64 k, const SigmaChoice& choice = {});

/// Z_(k+1) \ {0}, a (k+1, k, k-1) difference set.
DsDesign trivial_ds(u64 k);

/// Rows indexed by the unit subgroup of order k, columns by all ring
/// elements in canonical order; entry = row * column. A (v, k, 1)-HDM.
DiffMatrix units_hdm(const Ring& ring, u64 k);

/// Blocks A_j = {(a_i, m_ij)} for every block A of `over_g` and column j of
/// `hdm`, plus {g} x B for every block B of `over_h`, g the element of G not
/// covered by `over_g`.
Family product_ddf(const Family& over_g, const Family& over_h, const DiffMatrix& hdm);

/// (v(k+1), k, k-1)-DDF in Z_(k+1) x R_v.
Family result1_ddf(u64 k, const Ring& ring);

/// { i in Z_v : Tr(alpha^i) = 0 }, v = (q^m - 1)/(q - 1), alpha the canonical
/// primitive element of GF(q^m), trace down to GF(q).
DsDesign singer_ds(u64 q, u64 m);

/// D x Z_h in G x Z_h, relative to {0} x Z_h. For h = 1 the input is returned
/// unchanged with the trivial subgroup.
DdsDesign dds_from_ds(const DsDesign& ds, u64 h);

/// The Singer set of GF(q^d), lifted by dds_from_ds with n = h (q-1)/e and
/// carried into Z_((q^d-1)/e) x Z_h by an explicit isomorphism.
DdsDesign result3star_dds(u64 q, u64 d, u64 e, u64 h);

}  // namespace dfkit
