#include "dfkit/diff_matrix.hpp"

#include <algorithm>

namespace dfkit {
namespace {

bool is_permutation_of_group(const Group& g, const std::vector<Group::Elem>& v) {
  std::vector<bool> seen(g.order(), false);
  for (auto x : v) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

DiffMatrix::DiffMatrix(Group g, std::vector<Row> rows) : group_(std::move(g)), rows_(std::move(rows)) {
  require_within_cap(group_.order());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != group_.order())
      throw Error("matrix is not rectangular: row " + std::to_string(i) + " has " +
                  std::to_string(rows_[i].size()) + " entries, expected " +
                  std::to_string(group_.order()));
    for (auto x : rows_[i])
      if (!group_.contains(x)) throw Error("matrix entry outside " + group_.describe());
  }
}

DmReport verify_dm(const DiffMatrix& m) {
  const Group& g = m.group();
  const auto& rows = m.rows();
  DmReport r;
  std::vector<Group::Elem> diff(g.order());
  for (std::size_t a = 0; a < rows.size() && !r.bad_pair; ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = g.sub(rows[a][j], rows[b][j]);
      if (!is_permutation_of_group(g, diff)) {
        r.bad_pair = std::pair{a, b};
        break;
      }
    }
  r.pass = !r.bad_pair;
  return r;
}

DmReport verify_hdm(const DiffMatrix& m) {
  DmReport r = verify_dm(m);
  for (std::size_t a = 0; a < m.rows().size(); ++a)
    if (!is_permutation_of_group(m.group(), m.rows()[a])) {
      r.bad_row = a;
      break;
    }
  r.pass = !r.bad_pair && !r.bad_row;
  return r;
}

DiffMatrix normalize_dm(const DiffMatrix& m) {
  if (!verify_dm(m).pass) throw Error("matrix is not a difference matrix");
  if (m.rows().empty()) return m;
  const Group& g = m.group();
  const auto first = m.rows().front();
  auto rows = m.rows();
  for (auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = g.sub(row[j], first[j]);
  return DiffMatrix(g, std::move(rows));
}

DiffMatrix hdm_to_dm(const DiffMatrix& m) {
  if (!verify_hdm(m).pass) throw Error("matrix is not a homogeneous difference matrix");
  auto rows = m.rows();
  rows.insert(rows.begin(), DiffMatrix::Row(m.group().order(), 0));
  return DiffMatrix(m.group(), std::move(rows));
}

DiffMatrix dm_to_hdm(const DiffMatrix& m) {
  if (!verify_dm(m).pass) throw Error("matrix is not a difference matrix");
  auto rows = m.rows();
  auto zero = std::find_if(rows.begin(), rows.end(), [](const DiffMatrix::Row& row) {
    return std::all_of(row.begin(), row.end(), [](Group::Elem x) { return x == 0; });
  });
  if (zero == rows.end()) throw Error("difference matrix has no zero row; normalize it first");
  rows.erase(zero);
  return DiffMatrix(m.group(), std::move(rows));
}

}  // namespace dfkit
