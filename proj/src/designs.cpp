#include "dfkit/designs.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace dfkit {
namespace {

constexpr u64 kParallelPairThreshold = u64{1} << 22;

void count_block_range(const Group& g, std::span<const Block> blocks, std::vector<u64>& counts) {
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (i != j) ++counts[g.sub(b[i], b[j])];
}

}  // namespace

Block make_block(const Group& g, std::vector<Group::Elem> elems) {
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!g.contains(elems[i])) throw Error("block element outside " + g.describe());
    if (i > 0 && elems[i] == elems[i - 1])
      throw Error("block repeats element " + g.format(elems[i]) + "; blocks must be sets");
  }
  return elems;
}

Family::Family(Group g, std::vector<Block> blocks) : group_(std::move(g)) {
  blocks_.reserve(blocks.size());
  for (auto& b : blocks) {
    if (b.empty()) throw Error("empty block");
    blocks_.push_back(make_block(group_, std::move(b)));
  }
}

std::vector<std::size_t> Family::block_sizes() const {
  std::vector<std::size_t> k;
  for (const auto& b : blocks_) k.push_back(b.size());
  std::sort(k.begin(), k.end());
  return k;
}

std::vector<Group::Elem> Family::uncovered() const {
  require_within_cap(group_.order());
  std::vector<bool> covered(group_.order(), false);
  for (const auto& b : blocks_)
    for (auto x : b) covered[x] = true;
  std::vector<Group::Elem> out;
  for (Group::Elem x = 0; x < group_.order(); ++x)
    if (!covered[x]) out.push_back(x);
  return out;
}

u64 DiffMultiset::total() const {
  u64 t = 0;
  for (auto c : counts) t += c;
  return t;
}

DiffMultiset delta_multiset(const Group& g, std::span<const Block> blocks) {
  require_within_cap(g.order());
  u64 pairs = 0;
  for (const auto& b : blocks) pairs += b.size() * (b.size() - 1);

  DiffMultiset d{std::vector<u64>(g.order(), 0)};
  const unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (pairs < kParallelPairThreshold || hw == 1 || blocks.size() < hw) {
    count_block_range(g, blocks, d.counts);
    return d;
  }
  // Workers count disjoint block ranges; partial maps are summed in worker order.
  std::vector<std::vector<u64>> partial(hw, std::vector<u64>(g.order(), 0));
  std::vector<std::thread> workers;
  const std::size_t chunk = (blocks.size() + hw - 1) / hw;
  for (unsigned w = 0; w < hw; ++w) {
    const std::size_t lo = std::min(blocks.size(), w * chunk);
    const std::size_t hi = std::min(blocks.size(), lo + chunk);
    workers.emplace_back(
        [&, w, lo, hi] { count_block_range(g, blocks.subspan(lo, hi - lo), partial[w]); });
  }
  for (auto& t : workers) t.join();
  for (const auto& part : partial)
    for (std::size_t x = 0; x < part.size(); ++x) d.counts[x] += part[x];
  return d;
}

DiffMultiset delta_multiset(const Family& f) { return delta_multiset(f.group(), f.blocks()); }

std::vector<Deviation> deviations(const DiffMultiset& d, u64 expected) {
  std::vector<Deviation> out;
  for (std::size_t x = 1; x < d.counts.size(); ++x)
    if (d.counts[x] != expected) out.push_back({x, d.counts[x], expected});
  return out;
}

DfReport verify_df(const Family& f, u64 lambda) {
  DfReport r;
  r.v = f.group().order();
  r.block_sizes = f.block_sizes();
  r.lambda = lambda;
  r.deviations = deviations(delta_multiset(f), lambda);
  r.pass = r.deviations.empty();
  return r;
}

FamilyKind classify_family(const Family& f) {
  require_within_cap(f.group().order());
  std::vector<bool> covered(f.group().order(), false);
  u64 n = 0;
  for (const auto& b : f.blocks())
    for (auto x : b) {
      if (covered[x]) return FamilyKind::plain;
      covered[x] = true;
      ++n;
    }
  return n == f.group().order() ? FamilyKind::partitioned : FamilyKind::disjoint;
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::plain: return "plain";
    case FamilyKind::disjoint: return "disjoint";
    case FamilyKind::partitioned: return "partitioned";
  }
  return "?";
}

Family extend_to_pdf(const Family& f) {
  if (classify_family(f) == FamilyKind::plain) throw Error("family is not disjoint");
  auto blocks = f.blocks();
  for (auto x : f.uncovered()) blocks.push_back({x});
  return Family(f.group(), std::move(blocks));
}

DsReport verify_ds(std::span<const Group::Elem> d, const Group& g, const DSParams& p) {
  DsReport r;
  r.params = p;
  r.size_ok = d.size() == p.k;
  r.order_ok = g.order() == p.v;
  const Block b = make_block(g, std::vector<Group::Elem>(d.begin(), d.end()));
  r.deviations = deviations(delta_multiset(g, std::span<const Block>(&b, 1)), p.lambda);
  r.pass = r.size_ok && r.order_ok && r.deviations.empty();
  return r;
}

void require_subgroup(const Group& g, std::span<const Group::Elem> n) {
  const Block b = make_block(g, std::vector<Group::Elem>(n.begin(), n.end()));
  if (b.empty() || b.front() != 0) throw Error("subgroup must contain 0");
  for (auto x : b)
    for (auto y : b)
      if (!std::binary_search(b.begin(), b.end(), g.sub(x, y)))
        throw Error("element set is not a subgroup: " + g.format(x) + " - " + g.format(y) +
                    " is missing");
}

DdsReport verify_dds(std::span<const Group::Elem> d, const Group& g,
                     std::span<const Group::Elem> n_subgroup, const DDSParams& p) {
  require_subgroup(g, n_subgroup);
  DdsReport r;
  r.params = p;
  r.size_ok = d.size() == p.k;
  r.order_ok = g.order() == checked_mul(p.m, p.n);
  r.subgroup_order_ok = n_subgroup.size() == p.n;
  const Block b = make_block(g, std::vector<Group::Elem>(d.begin(), d.end()));
  const Block nb = make_block(g, std::vector<Group::Elem>(n_subgroup.begin(), n_subgroup.end()));
  const auto delta = delta_multiset(g, std::span<const Block>(&b, 1));
  for (Group::Elem x = 1; x < g.order(); ++x) {
    const bool in_n = std::binary_search(nb.begin(), nb.end(), x);
    const u64 expected = in_n ? p.lambda1 : p.lambda2;
    if (delta.counts[x] != expected) r.deviations.push_back({x, delta.counts[x], expected});
  }
  r.pass = r.size_ok && r.order_ok && r.subgroup_order_ok && r.deviations.empty();
  return r;
}

std::string format(const DSParams& p) {
  std::ostringstream os;
  os << "(" << p.v << "," << p.k << "," << p.lambda << ")";
  return os.str();
}

std::string format(const DDSParams& p) {
  std::ostringstream os;
  os << "(" << p.m << "," << p.n << "," << p.k << "," << p.lambda1 << "," << p.lambda2 << ")";
  return os.str();
}

}  // namespace dfkit
