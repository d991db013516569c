#pragma once

#include <optional>
#include <vector>

#include "dfkit/group.hpp"

namespace dfkit {

/// Diagonal of the Smith normal form of a diagonal integer matrix:
/// d_1 | d_2 | ... , unit entries dropped.
std::vector<u64> smith_diagonal(std::vector<u64> diagonal);

/// Invariant factors of a group, read off the Smith form of its relation
/// matrix diag(radices).
std::vector<u64> invariant_factors(const Group& g);

/// An explicit isomorphism from `from` onto `to`, or nullopt when the
/// invariant factors differ. The returned map has been checked to be a
/// bijective homomorphism.
std::optional<GroupMap> abelian_iso(const Group& from, const Group& to);

}  // namespace dfkit
