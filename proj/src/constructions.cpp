#include "dfkit/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "dfkit/abelian.hpp"

namespace dfkit {
namespace {

void require_ddf(const Family& f, u64 lambda, const char* what) {
  const auto report = verify_df(f, lambda);
  if (!report.pass || classify_family(f) == FamilyKind::plain)
    throw Error(std::string("internal error: ") + what + " failed verification");
}

std::vector<Block> sorted_blocks(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::string format_list(const std::vector<u64>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

// Ordered product of element-code sets, one per factor.
std::vector<Ring::Elem> product_set(const Ring& ring, const std::vector<std::vector<u64>>& sets) {
  std::vector<Ring::Elem> out;
  std::vector<std::size_t> pos(sets.size(), 0);
  for (const auto& s : sets)
    if (s.empty()) return out;
  std::vector<u64> codes(sets.size());
  while (true) {
    for (std::size_t i = 0; i < sets.size(); ++i) codes[i] = sets[i][pos[i]];
    out.push_back(ring.from_coords(codes));
    std::size_t i = sets.size();
    while (i > 0) {
      --i;
      if (++pos[i] < sets[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace

NotSemiregular::NotSemiregular(const Group& g, FixedPoint witness)
    : Error("action is not semiregular: a non-identity automorphism fixes the nonzero element " +
            g.format(witness.element)),
      witness_(witness) {}

Family orbit_ddf(const Action& action) {
  if (auto fp = find_fixed_point(action)) throw NotSemiregular(action.group(), *fp);
  Family f(action.group(), orbits(action));
  const u64 k = action.order();
  if (f.size() * k != action.group().order() - 1) throw Error("internal error: orbit count");
  require_ddf(f, k - 1, "orbit family");
  return f;
}

std::pair<Family, Family> orbit_ddf_split(const Action& action) {
  const Group& g = action.group();
  const u64 k = action.order();
  if ((g.order() * k) % 2 == 0)
    throw Error("cannot split: v k = " + std::to_string(g.order()) + " * " + std::to_string(k) +
                " is even");
  const Family all = orbit_ddf(action);
  std::vector<bool> used(g.order(), false);
  std::vector<Block> first, second;
  for (const auto& b : all.blocks()) {
    if (used[b.front()]) continue;
    Block neg;
    for (auto x : b) {
      used[x] = true;
      neg.push_back(g.neg(x));
    }
    for (auto x : neg) used[x] = true;
    first.push_back(b);
    second.push_back(make_block(g, std::move(neg)));
  }
  Family a(g, first), b(g, second);
  const u64 half = (k - 1) / 2;
  if (!verify_df(a, half).pass || !verify_df(b, half).pass)
    throw Error("orbit family split by negation failed verification");
  return {std::move(a), std::move(b)};
}

u64 cyclic_unit_of_order(u64 v, u64 k) {
  if (v < 2) throw Error("group order must be at least 2");
  if (k < 1) throw Error("k must be positive");
  u64 u = 0, modulus = 1;
  for (auto [p, a] : factorize(v)) {
    if ((p - 1) % k != 0)
      throw Error(std::to_string(p) + " ≢ 1 (mod " + std::to_string(k) + ")");
    const u64 pa = checked_pow(p, a);
    u64 up = 1;
    if (k > 1) {
      up = 0;
      for (u64 c = 2; c < pa; ++c)
        if (c % p != 0 && multiplicative_order_mod(c, pa) == k) {
          up = c;
          break;
        }
      if (up == 0) throw Error("internal error: no unit of order k");
    }
    // combine u (mod modulus) with up (mod pa)
    const u64 t = mulmod((up + pa - u % pa) % pa, powmod(modulus % pa, pa / p * (p - 1) - 1, pa), pa);
    u += modulus * t;
    modulus *= pa;
  }
  return u % v;
}

Family furino_ddf(const Ring& ring, u64 k, bool half) {
  for (const auto& f : ring.factors())
    if ((f.order() - 1) % k != 0)
      throw Error(std::to_string(f.order()) + " ≢ 1 (mod " + std::to_string(k) + ")");
  if (half && (ring.order() * k) % 2 == 0) throw Error("v k is even; no half family");
  const Action action = Action::from_units(unit_subgroup_of_order(ring, k));
  if (half) return orbit_ddf_split(action).first;
  return orbit_ddf(action);
}

Family furino_ddf_cyclic(u64 v, u64 k, bool half) {
  const u64 u = cyclic_unit_of_order(v, k);
  if (half && (v * k) % 2 == 0) throw Error("v k is even; no half family");
  const Action action = Action::multiplier(Group::cyclic(v), u);
  if (action.order() != k) throw Error("internal error: multiplier order");
  if (half) return orbit_ddf_split(action).first;
  return orbit_ddf(action);
}

std::vector<AssociateClass> nonzero_associate_classes(const Ring& ring) {
  const std::size_t t = ring.factors().size();
  std::vector<AssociateClass> out;
  for (std::size_t size = 1; size <= t; ++size) {
    // lexicographic combinations of {0..t-1}
    std::vector<std::size_t> c(size);
    for (std::size_t i = 0; i < size; ++i) c[i] = i;
    while (true) {
      out.push_back({c});
      std::size_t i = size;
      while (i > 0 && c[i - 1] == t - size + (i - 1)) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < size; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Field::Code> cyclotomic_s_set(const Field& f, u64 k) {
  const u64 q = f.order();
  if ((q - 1) % (2 * k) != 0)
    throw Error(std::to_string(q) + " is not of the form 2*" + std::to_string(k) + "*n+1");
  const u64 n = (q - 1) / (2 * k);
  std::vector<Field::Code> s;
  for (u64 j = 1; j <= n; ++j) s.push_back(f.pow(f.primitive(), j));
  return s;
}

std::vector<Ring::Elem> cyclotomic_representatives(const Ring& ring, u64 k,
                                                   const SigmaChoice& choice) {
  if (k % 2 == 0) throw Error("k must be odd");
  const auto& fields = ring.factors();
  std::vector<std::vector<u64>> s_sets, units;
  for (const auto& f : fields) {
    auto s = cyclotomic_s_set(f, k);
    s_sets.emplace_back(s.begin(), s.end());
    std::vector<u64> all;
    for (u64 c = 1; c < f.order(); ++c) all.push_back(c);
    units.push_back(std::move(all));
  }
  const auto classes = nonzero_associate_classes(ring);
  for (const auto& [cls, factor] : choice) {
    if (cls >= classes.size()) throw Error("sigma choice names class " + std::to_string(cls + 1) +
                                           " but there are only " + std::to_string(classes.size()));
    const auto& sup = classes[cls].support;
    if (std::find(sup.begin(), sup.end(), factor) == sup.end())
      throw Error("sigma choice: factor " + std::to_string(factor + 1) + " is null in class " +
                  std::to_string(cls + 1));
  }
  std::vector<Ring::Elem> x;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& sup = classes[c].support;
    const auto it = choice.find(c);
    const std::size_t chosen = it == choice.end() ? sup.front() : it->second;
    std::vector<std::vector<u64>> sets(fields.size(), std::vector<u64>{0});
    for (auto i : sup) sets[i] = (i == chosen) ? s_sets[i] : units[i];
    auto part = product_set(ring, sets);
    x.insert(x.end(), part.begin(), part.end());
  }
  return x;
}

Family cyclotomic_half_ddf(const Ring& ring, u64 k, const SigmaChoice& choice) {
  const auto x = cyclotomic_representatives(ring, k, choice);
  if (x.size() * 2 * k != ring.order() - 1) throw Error("internal error: |X| != (v-1)/2k");
  const auto a = unit_subgroup_of_order(ring, k).elements();
  std::vector<Block> blocks;
  for (auto rep : x) {
    Block b;
    for (auto u : a) b.push_back(ring.mul(rep, u));
    blocks.push_back(std::move(b));
  }
  Family f(ring.additive_group(), sorted_blocks(std::move(blocks)));
  require_ddf(f, (k - 1) / 2, "cyclotomic family");
  return f;
}

DsDesign trivial_ds(u64 k) {
  if (k < 1) throw Error("k must be at least 1");
  DsDesign d{Group::cyclic(k + 1), {}, {k + 1, k, k - 1}};
  for (u64 i = 1; i <= k; ++i) d.set.push_back(i);
  if (!verify_ds(d.set, d.group, d.params).pass) throw Error("internal error: trivial difference set");
  return d;
}

DiffMatrix units_hdm(const Ring& ring, u64 k) {
  require_within_cap(ring.order());
  const auto a = unit_subgroup_of_order(ring, k).elements();
  std::vector<DiffMatrix::Row> rows;
  for (auto u : a) {
    DiffMatrix::Row row(ring.order());
    for (u64 x = 0; x < ring.order(); ++x) row[x] = ring.mul(u, x);
    rows.push_back(std::move(row));
  }
  DiffMatrix m(ring.additive_group(), std::move(rows));
  if (!verify_hdm(m).pass) throw Error("internal error: unit multiplication table is not an HDM");
  return m;
}

Family product_ddf(const Family& over_g, const Family& over_h, const DiffMatrix& hdm) {
  const Group& g = over_g.group();
  const Group& h = over_h.group();
  if (!(hdm.group() == h)) throw Error("difference matrix is over a different group than H");
  if (over_g.size() == 0 || over_h.size() == 0) throw Error("ingredient families must be nonempty");
  const std::size_t k = over_g.blocks().front().size();
  auto uniform = [k](const Family& f) {
    return std::all_of(f.blocks().begin(), f.blocks().end(),
                       [k](const Block& b) { return b.size() == k; });
  };
  if (!uniform(over_g) || !uniform(over_h) || hdm.row_count() != k)
    throw Error("ingredients must share the block size k = " + std::to_string(k) +
                " (matrix has " + std::to_string(hdm.row_count()) + " rows)");
  if (!verify_df(over_g, k - 1).pass || classify_family(over_g) == FamilyKind::plain)
    throw Error("G ingredient is not a (u,k,k-1)-DDF");
  if (!verify_df(over_h, k - 1).pass || classify_family(over_h) == FamilyKind::plain)
    throw Error("H ingredient is not a (v,k,k-1)-DDF");
  if (!verify_hdm(hdm).pass) throw Error("matrix ingredient is not a homogeneous difference matrix");
  const auto missing_g = over_g.uncovered();
  const auto missing_h = over_h.uncovered();
  if (missing_g.size() != 1)
    throw Error("G ingredient leaves " + std::to_string(missing_g.size()) +
                " elements uncovered; exactly one is required");
  if (missing_h.size() != 1)
    throw Error("H ingredient leaves " + std::to_string(missing_h.size()) +
                " elements uncovered; exactly one is required");

  const Group gh = Group::product(g, h);
  const u64 v = h.order();
  auto pair = [v](Group::Elem a, Group::Elem b) { return a * v + b; };
  std::vector<Block> blocks;
  for (const auto& a : over_g.blocks())
    for (u64 j = 0; j < v; ++j) {
      Block b;
      for (std::size_t i = 0; i < k; ++i) b.push_back(pair(a[i], hdm.rows()[i][j]));
      blocks.push_back(std::move(b));
    }
  for (const auto& b : over_h.blocks()) {
    Block lifted;
    for (auto y : b) lifted.push_back(pair(missing_g.front(), y));
    blocks.push_back(std::move(lifted));
  }
  Family f(gh, std::move(blocks));
  if (f.size() != over_g.size() * v + over_h.size()) throw Error("internal error: block count");
  require_ddf(f, k - 1, "product family");
  const auto missing = f.uncovered();
  if (missing.size() != 1 || missing.front() != pair(missing_g.front(), missing_h.front()))
    throw Error("internal error: product family coverage");
  return f;
}

Family result1_ddf(u64 k, const Ring& ring) {
  const DsDesign ds = trivial_ds(k);
  const Family over_g(ds.group, {ds.set});
  const Family over_h = furino_ddf(ring, k, false);
  return product_ddf(over_g, over_h, units_hdm(ring, k));
}

DsDesign singer_ds(u64 q, u64 m) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(std::to_string(q) + " is not a prime power");
  if (m < 3) throw Error("m must be at least 3");
  const u64 big = checked_pow(q, static_cast<unsigned>(m));
  require_within_cap(big);
  const Field f = Field::build(pp->prime, static_cast<unsigned>(pp->exponent * m));
  const u64 v = (big - 1) / (q - 1);
  DsDesign d{Group::cyclic(v), {},
             {v, (big / q - 1) / (q - 1), (big / q / q - 1) / (q - 1)}};
  for (u64 i = 0; i < v; ++i)
    if (f.trace(f.exp(i), pp->exponent) == 0) d.set.push_back(i);
  if (!verify_ds(d.set, d.group, d.params).pass) throw Error("internal error: Singer set failed verification");
  return d;
}

DdsDesign dds_from_ds(const DsDesign& ds, u64 h) {
  if (h < 1) throw Error("h must be at least 1");
  if (!verify_ds(ds.set, ds.group, ds.params).pass)
    throw Error("input is not a " + format(ds.params) + " difference set");
  const DSParams& p = ds.params;
  DdsDesign out;
  out.params = {p.v, h, checked_mul(p.k, h), checked_mul(p.k, h), checked_mul(p.lambda, h)};
  if (h == 1) {
    out.group = ds.group;
    out.set = ds.set;
    out.subgroup = {0};
  } else {
    out.group = Group::product(ds.group, Group::cyclic(h));
    for (auto x : ds.set)
      for (u64 j = 0; j < h; ++j) out.set.push_back(x * h + j);
    for (u64 j = 0; j < h; ++j) out.subgroup.push_back(j);
  }
  if (!verify_dds(out.set, out.group, out.subgroup, out.params).pass)
    throw Error("internal error: lifted set failed verification");
  return out;
}

DdsDesign result3star_dds(u64 q, u64 d, u64 e, u64 h) {
  if (!as_prime_power(q)) throw Error(std::to_string(q) + " is not a prime power");
  if (d < 3) throw Error("d must be at least 3");
  if (e == 0 || (q - 1) % e != 0) throw Error("e must divide q - 1");
  if (gcd(d, e) != 1) throw Error("d and e must be coprime");
  if (h < 1 || h > e) throw Error("h must lie in [1, e]");
  const u64 qd = checked_pow(q, static_cast<unsigned>(d));
  const u64 n = checked_mul(h, q - 1) / e;

  const DdsDesign lifted = dds_from_ds(singer_ds(q, d), n);
  std::vector<GroupFactor> target_factors{CyclicFactor{(qd - 1) / e}};
  if (h > 1) target_factors.push_back(CyclicFactor{h});
  const Group target(std::move(target_factors));

  const auto iso = abelian_iso(lifted.group, target);
  if (!iso)
    throw Error("constructed group " + lifted.group.describe() + " (invariant factors " +
                format_list(invariant_factors(lifted.group)) + ") is not isomorphic to " +
                target.describe() + " (invariant factors " + format_list(invariant_factors(target)) + ")");
  DdsDesign out{target, {}, {}, lifted.params};
  for (auto x : lifted.set) out.set.push_back(iso->apply(x));
  for (auto x : lifted.subgroup) out.subgroup.push_back(iso->apply(x));
  std::sort(out.set.begin(), out.set.end());
  std::sort(out.subgroup.begin(), out.subgroup.end());
  if (!verify_dds(out.set, out.group, out.subgroup, out.params).pass)
    throw Error("internal error: transported set failed verification");
  return out;
}

}  // namespace dfkit
