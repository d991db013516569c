#pragma once

#include <span>
#include <string>
#include <vector>

#include "dfkit/group.hpp"

namespace dfkit {

/// A block: strictly increasing element indices.
using Block = std::vector<Group::Elem>;

/// Sorts a block; throws Error on repeated or out-of-range elements.
Block make_block(const Group& g, std::vector<Group::Elem> elems);

/// A list of blocks in a group.
class Family {
 public:
  Family() = default;
  /// Every block is canonicalised with make_block; empty blocks are rejected.
  Family(Group g, std::vector<Block> blocks);

  const Group& group() const { return group_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  /// The multiset K of block sizes, ascending.
  std::vector<std::size_t> block_sizes() const;
  /// Elements not contained in any block, ascending.
  std::vector<Group::Elem> uncovered() const;

 private:
  Group group_;
  std::vector<Block> blocks_;
};

/// counts[g] = number of ordered pairs (x, y), x != y, in a common block with
/// x - y = g. counts[0] is always 0.
struct DiffMultiset {
  std::vector<u64> counts;
  u64 total() const;
};

struct DSParams {
  u64 v = 0, k = 0, lambda = 0;
  friend bool operator==(const DSParams&, const DSParams&) = default;
};

struct DDSParams {
  u64 m = 0, n = 0, k = 0, lambda1 = 0, lambda2 = 0;
  friend bool operator==(const DDSParams&, const DDSParams&) = default;
};

std::string format(const DSParams& p);
std::string format(const DDSParams& p);

struct Deviation {
  Group::Elem element;
  u64 count;
  u64 expected;
};

DiffMultiset delta_multiset(const Group& g, std::span<const Block> blocks);
DiffMultiset delta_multiset(const Family& f);

/// Nonzero elements whose count differs from the expected value.
std::vector<Deviation> deviations(const DiffMultiset& d, u64 expected);

struct DfReport {
  bool pass = false;
  u64 v = 0;
  std::vector<std::size_t> block_sizes;
  u64 lambda = 0;
  std::vector<Deviation> deviations;
};

DfReport verify_df(const Family& f, u64 lambda);

enum class FamilyKind { plain, disjoint, partitioned };
FamilyKind classify_family(const Family& f);
std::string to_string(FamilyKind k);

/// Adds a singleton for each uncovered element. Throws Error unless disjoint.
Family extend_to_pdf(const Family& f);

struct DsReport {
  bool pass = false;
  DSParams params;
  bool size_ok = false;   // |D| == k
  bool order_ok = false;  // |G| == v
  std::vector<Deviation> deviations;
};

DsReport verify_ds(std::span<const Group::Elem> d, const Group& g, const DSParams& p);

/// Throws Error unless `n` is a subgroup of `g`.
void require_subgroup(const Group& g, std::span<const Group::Elem> n);

struct DdsReport {
  bool pass = false;
  DDSParams params;
  bool size_ok = false;
  bool order_ok = false;
  bool subgroup_order_ok = false;
  std::vector<Deviation> deviations;
};

/// With p.n == 1 this is a difference-set check with lambda = lambda2.
DdsReport verify_dds(std::span<const Group::Elem> d, const Group& g,
                     std::span<const Group::Elem> n_subgroup, const DDSParams& p);

}  // namespace dfkit
