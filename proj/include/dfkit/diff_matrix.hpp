#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dfkit/group.hpp"

namespace dfkit {

/// A k x v matrix over a group of order v.
class DiffMatrix {
 public:
  using Row = std::vector<Group::Elem>;

  /// Throws Error if a row does not have exactly |g| entries or an entry lies
  /// outside g.
  DiffMatrix(Group g, std::vector<Row> rows);

  const Group& group() const { return group_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }

 private:
  Group group_;
  std::vector<Row> rows_;
};

struct DmReport {
  bool pass = false;
  /// First pair of rows whose difference is not a permutation.
  std::optional<std::pair<std::size_t, std::size_t>> bad_pair;
  /// HDM only: first row that is not a permutation.
  std::optional<std::size_t> bad_row;
};

DmReport verify_dm(const DiffMatrix& m);
DmReport verify_hdm(const DiffMatrix& m);

/// Subtracts the first-row entry from every column. Throws Error unless m is a DM.
DiffMatrix normalize_dm(const DiffMatrix& m);

/// Adds a zero row on top of an HDM.
DiffMatrix hdm_to_dm(const DiffMatrix& m);
/// Removes the first all-zero row of a DM; throws Error if there is none.
DiffMatrix dm_to_hdm(const DiffMatrix& m);

}  // namespace dfkit
