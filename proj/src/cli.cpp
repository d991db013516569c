#include "dfkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "dfkit/admissibility.hpp"
#include "dfkit/constructions.hpp"

namespace dfkit::cli {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// helpers

u64 parse_number(const std::string& s) {
  u64 value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) throw ParseError("malformed number '" + s + "'");
  return value;
}

std::vector<u64> parse_number_list(const std::string& list) {
  std::vector<u64> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw ParseError("empty number list");
  return out;
}

u64 param(const json& params, const char* key) {
  if (!params.contains(key)) throw ParseError(std::string("declared parameters lack '") + key + "'");
  const auto& v = params[key];
  if (!v.is_number_integer() || v.get<i64>() < 0)
    throw ParseError(std::string("parameter '") + key + "' must be a non-negative integer");
  return v.get<u64>();
}

json family_params(const Family& f, u64 lambda) {
  json p = {{"v", f.group().order()}, {"lambda", lambda}};
  const auto sizes = f.block_sizes();
  if (!sizes.empty() && sizes.front() == sizes.back())
    p["k"] = sizes.front();
  else
    p["K"] = sizes;
  return p;
}

DesignFile family_file(const Family& f, DesignKind kind, u64 lambda) {
  DesignFile d;
  d.group = f.group();
  d.kind = kind;
  d.params = family_params(f, lambda);
  d.blocks = f.blocks();
  return d;
}

DesignFile ds_file(const DsDesign& ds) {
  DesignFile d;
  d.group = ds.group;
  d.kind = DesignKind::ds;
  d.params = {{"v", ds.params.v}, {"k", ds.params.k}, {"lambda", ds.params.lambda}};
  d.blocks = {ds.set};
  return d;
}

DesignFile dds_file(const DdsDesign& dds) {
  DesignFile d;
  d.group = dds.group;
  d.kind = DesignKind::dds;
  d.params = {{"m", dds.params.m},
              {"n", dds.params.n},
              {"k", dds.params.k},
              {"lambda1", dds.params.lambda1},
              {"lambda2", dds.params.lambda2}};
  d.blocks = {dds.set};
  d.subgroup = dds.subgroup;
  return d;
}

DesignFile matrix_file(const DiffMatrix& m, DesignKind kind) {
  DesignFile d;
  d.group = m.group();
  d.kind = kind;
  d.params = {{"v", m.group().order()}, {"k", m.row_count()}, {"lambda", 1}};
  d.rows = m.rows();
  return d;
}

std::string summary(const DesignFile& d) {
  std::ostringstream os;
  os << to_string(d.kind) << " " << d.params.dump() << " in " << d.group.describe();
  const bool matrix = d.kind == DesignKind::dm || d.kind == DesignKind::hdm;
  os << ", " << (matrix ? d.rows.size() : d.blocks.size()) << (matrix ? " rows" : " blocks");
  return os.str();
}

void append_deviations(std::ostringstream& os, const Group& g, const std::vector<Deviation>& devs) {
  os << "deviations: " << devs.size() << "\n";
  for (const auto& d : devs)
    os << "  count(" << g.format(d.element) << ") = " << d.count << " (expected " << d.expected
       << ")\n";
}

Block single_block(const DesignFile& d) {
  if (d.blocks.size() != 1)
    throw ParseError(to_string(d.kind) + " needs exactly one block, file has " +
                     std::to_string(d.blocks.size()));
  return d.blocks.front();
}

Block dds_subgroup(const DesignFile& d, u64 n) {
  if (d.subgroup) return *d.subgroup;
  // Cyclic groups have a unique subgroup of each order dividing |G|.
  if (d.group.factor_count() == 1 && std::holds_alternative<CyclicFactor>(d.group.factors()[0])) {
    const u64 order = d.group.order();
    if (n == 0 || order % n != 0)
      throw ParseError("subgroup order " + std::to_string(n) + " does not divide " + std::to_string(order));
    Block b;
    for (u64 x = 0; x < order; x += order / n) b.push_back(x);
    return b;
  }
  throw ParseError("dds verification in a non-cyclic group needs an explicit \"subgroup\"");
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
  std::vector<u64> factors;
  u64 v = 0, u = 0, k = 0, q = 0, m = 0, d = 0, e = 0, h = 0;
  bool half = false;
  std::string sigma_choice;
  std::string out, out2, in, g_file, h_file, hdm_file;
};

SigmaChoice parse_sigma_choice(const std::string& text) {
  SigmaChoice choice;
  if (text.empty()) return choice;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("sigma choice entries look like class:factor");
    const u64 cls = parse_number(item.substr(0, colon));
    const u64 factor = parse_number(item.substr(colon + 1));
    if (cls < 1 || factor < 1) throw ParseError("sigma choice indices are 1-based");
    choice[cls - 1] = factor - 1;
  }
  return choice;
}

Ring ring_from(const ConstructOptions& o) {
  if (o.factors.empty()) throw ParseError("--factors is required");
  return Ring::build(o.factors);
}

std::string second_path(const ConstructOptions& o) {
  if (!o.out2.empty()) return o.out2;
  const auto dot = o.out.rfind(".json");
  if (dot != std::string::npos && dot + 5 == o.out.size()) return o.out.substr(0, dot) + ".second.json";
  return o.out + ".second";
}

void require_k(const ConstructOptions& o) {
  if (o.k == 0) throw ParseError("--k is required");
}

std::vector<DesignFile> build(const std::string& name, const ConstructOptions& o) {
  if (name == "orbit" || name == "orbit-split") {
    Action action = [&] {
      if (o.v != 0) {
        if (o.u == 0) throw ParseError("--v needs the multiplier --u");
        return Action::multiplier(Group::cyclic(o.v), o.u);
      }
      require_k(o);
      return Action::from_units(unit_subgroup_of_order(ring_from(o), o.k));
    }();
    const u64 k = action.order();
    if (name == "orbit") return {family_file(orbit_ddf(action), DesignKind::ddf, k - 1)};
    auto [a, b] = orbit_ddf_split(action);
    return {family_file(a, DesignKind::ddf, (k - 1) / 2), family_file(b, DesignKind::ddf, (k - 1) / 2)};
  }
  if (name == "furino") {
    require_k(o);
    const Family f = o.v != 0 ? furino_ddf_cyclic(o.v, o.k, o.half) : furino_ddf(ring_from(o), o.k, o.half);
    return {family_file(f, DesignKind::ddf, o.half ? (o.k - 1) / 2 : o.k - 1)};
  }
  if (name == "cyclotomic-half") {
    require_k(o);
    const Family f = cyclotomic_half_ddf(ring_from(o), o.k, parse_sigma_choice(o.sigma_choice));
    return {family_file(f, DesignKind::ddf, (o.k - 1) / 2)};
  }
  if (name == "units-hdm") {
    require_k(o);
    return {matrix_file(units_hdm(ring_from(o), o.k), DesignKind::hdm)};
  }
  if (name == "product") {
    if (o.g_file.empty() || o.h_file.empty() || o.hdm_file.empty())
      throw ParseError("product needs --g-file, --h-file and --hdm-file");
    const auto g = read_design_file(o.g_file);
    const auto h = read_design_file(o.h_file);
    const auto m = read_design_file(o.hdm_file);
    if (m.kind != DesignKind::hdm && m.kind != DesignKind::dm)
      throw ParseError("--hdm-file must hold a difference matrix");
    DiffMatrix hdm(m.group, m.rows);
    if (m.kind == DesignKind::dm) hdm = dm_to_hdm(normalize_dm(hdm));
    const Family f = product_ddf(Family(g.group, g.blocks), Family(h.group, h.blocks), hdm);
    return {family_file(f, DesignKind::ddf, f.blocks().front().size() - 1)};
  }
  if (name == "result1") {
    require_k(o);
    return {family_file(result1_ddf(o.k, ring_from(o)), DesignKind::ddf, o.k - 1)};
  }
  if (name == "trivial-ds") {
    require_k(o);
    return {ds_file(trivial_ds(o.k))};
  }
  if (name == "singer") {
    if (o.q == 0 || o.m == 0) throw ParseError("singer needs --q and --m");
    return {ds_file(singer_ds(o.q, o.m))};
  }
  if (name == "dds-product") {
    if (o.in.empty() || o.h == 0) throw ParseError("dds-product needs --in and --h");
    const auto d = read_design_file(o.in);
    if (d.kind != DesignKind::ds) throw ParseError("--in must hold a difference set");
    const DsDesign ds{d.group, single_block(d),
                      {param(d.params, "v"), param(d.params, "k"), param(d.params, "lambda")}};
    return {dds_file(dds_from_ds(ds, o.h))};
  }
  if (name == "result3star") {
    if (o.q == 0 || o.d == 0 || o.e == 0 || o.h == 0)
      throw ParseError("result3star needs --q, --d, --e and --h");
    return {dds_file(result3star_dds(o.q, o.d, o.e, o.h))};
  }
  throw ParseError("unknown construction " + name);
}

// ---------------------------------------------------------------------------
// check

int run_check(const std::string& kind, const std::vector<std::string>& raw, std::ostream& out) {
  std::vector<u64> n;
  for (const auto& s : raw) n.push_back(parse_number(s));
  auto need = [&](std::size_t count, const char* usage) {
    if (n.size() != count) throw ParseError(std::string("usage: check ") + usage);
  };
  if (kind == "ds") {
    need(3, "ds V K LAMBDA");
    const auto r = ds_admissible({n[0], n[1], n[2]});
    out << "ds " << format(r.params) << ": " << (r.pass ? "admissible" : "NOT admissible") << "\n";
    out << "  lambda(v-1) = " << r.lhs << (r.lhs == r.rhs ? " = " : " ≠ ") << r.rhs << " = k(k-1)\n";
    if (!r.range_ok) out << "  range violated: need 0 <= lambda <= k <= v\n";
    return r.pass ? kExitPass : kExitRefuted;
  }
  if (kind == "dds") {
    need(5, "dds M N K LAMBDA1 LAMBDA2");
    const auto r = dds_counting_identity({n[0], n[1], n[2], n[3], n[4]});
    out << "dds " << format(r.params) << ": " << (r.pass ? "admissible" : "NOT admissible") << "\n";
    out << "  k(k-1) = " << r.lhs << (r.pass ? " = " : " ≠ ") << r.within + r.outside
        << " = lambda1(n-1) + lambda2 n(m-1) = " << r.within << " + " << r.outside << "\n";
    return r.pass ? kExitPass : kExitRefuted;
  }
  if (kind == "proportional") {
    need(4, "proportional V K LAMBDA MU");
    const auto r = proportional_pair_admissible({n[0], n[1], n[2]}, n[3]);
    out << "proportional " << format(r.base) << " x " << r.mu << ": "
        << (r.pass ? "both triples can be admissible" : "scaled triple impossible") << "\n";
    out << "  (v-1)(k mu-1) - (v mu-1)(k-1) = (v-k)(mu-1) = " << r.residual
        << (r.residual == 0 ? " = 0" : " ≠ 0") << "\n";
    out << "  scaled triple " << format(r.scaled.params) << ": lambda(v-1) = " << r.scaled.lhs
        << (r.scaled.pass ? " = " : " ≠ ") << r.scaled.rhs << " = k(k-1)\n";
    return r.pass ? kExitPass : kExitRefuted;
  }
  if (kind == "result3") {
    need(4, "result3 Q M E H");
    const auto r = refute_result3(n[0], n[1], n[2], n[3]);
    out << "result3 q=" << n[0] << " m=" << n[1] << " e=" << n[2] << " h=" << n[3] << ": "
        << (r.valid ? "valid (Singer)" : "refuted") << "\n";
    out << "  claimed triple " << format(r.claimed) << ": lambda(v-1) = " << r.admissibility.lhs
        << (r.admissibility.pass ? " = " : " ≠ ") << r.admissibility.rhs << " = k(k-1)\n";
    out << "  Singer triple " << format(r.singer) << ", mu = h(q-1)/e = " << r.mu
        << ", (v-k)(mu-1) = " << r.residual << "\n";
    return r.valid ? kExitPass : kExitRefuted;
  }
  throw ParseError("unknown check kind '" + kind + "' (ds, dds, proportional, result3)");
}

}  // namespace

// ---------------------------------------------------------------------------
// verify

json params_from_list(DesignKind kind, const std::string& list) {
  const auto n = parse_number_list(list);
  switch (kind) {
    case DesignKind::df:
    case DesignKind::ddf:
    case DesignKind::pdf:
      if (n.size() == 2) return {{"v", n[0]}, {"lambda", n[1]}};
      if (n.size() == 3) return {{"v", n[0]}, {"k", n[1]}, {"lambda", n[2]}};
      throw ParseError("family parameters are v,lambda or v,k,lambda");
    case DesignKind::ds:
      if (n.size() != 3) throw ParseError("ds parameters are v,k,lambda");
      return {{"v", n[0]}, {"k", n[1]}, {"lambda", n[2]}};
    case DesignKind::dds:
      if (n.size() != 5) throw ParseError("dds parameters are m,n,k,lambda1,lambda2");
      return {{"m", n[0]}, {"n", n[1]}, {"k", n[2]}, {"lambda1", n[3]}, {"lambda2", n[4]}};
    case DesignKind::dm:
    case DesignKind::hdm:
      if (n.size() == 2) return {{"v", n[0]}, {"k", n[1]}, {"lambda", 1}};
      if (n.size() == 3) return {{"v", n[0]}, {"k", n[1]}, {"lambda", n[2]}};
      throw ParseError("matrix parameters are v,k[,1]");
  }
  throw ParseError("unknown kind");
}

VerifyOutcome verify_design(const DesignFile& d, DesignKind kind, const json& params) {
  const Group& g = d.group;
  std::ostringstream os;
  os << "kind: " << to_string(kind) << "\n";
  os << "group: " << g.describe() << " (order " << g.order() << ")\n";
  bool pass = false;

  switch (kind) {
    case DesignKind::df:
    case DesignKind::ddf:
    case DesignKind::pdf: {
      const bool matrix_file = d.kind == DesignKind::dm || d.kind == DesignKind::hdm;
      if (matrix_file) throw ParseError("file holds a matrix, not a family");
      const u64 lambda = param(params, "lambda");
      Family f(g, d.blocks);
      const auto report = verify_df(f, lambda);
      bool declared_ok = true;
      if (params.contains("v") && param(params, "v") != g.order()) {
        os << "declared v = " << param(params, "v") << " but |G| = " << g.order() << "\n";
        declared_ok = false;
      }
      if (params.contains("k")) {
        const u64 k = param(params, "k");
        for (auto s : report.block_sizes)
          if (s != k) {
            os << "declared uniform block size " << k << " but a block has size " << s << "\n";
            declared_ok = false;
            break;
          }
      }
      if (params.contains("K")) {
        std::vector<std::size_t> declared;
        for (const auto& x : params["K"]) declared.push_back(x.get<std::size_t>());
        std::sort(declared.begin(), declared.end());
        if (declared != report.block_sizes) {
          os << "declared block-size multiset does not match\n";
          declared_ok = false;
        }
      }
      const FamilyKind structure = classify_family(f);
      os << "blocks: " << f.size() << ", structure: " << to_string(structure) << "\n";
      bool structure_ok = true;
      if (kind == DesignKind::ddf && structure == FamilyKind::plain) {
        os << "blocks are not pairwise disjoint\n";
        structure_ok = false;
      }
      if (kind == DesignKind::pdf && structure != FamilyKind::partitioned) {
        os << "blocks do not partition the group\n";
        structure_ok = false;
      }
      os << "lambda: " << lambda << "\n";
      append_deviations(os, g, report.deviations);
      pass = report.pass && declared_ok && structure_ok;
      break;
    }
    case DesignKind::ds: {
      const DSParams p{param(params, "v"), param(params, "k"), param(params, "lambda")};
      const auto report = verify_ds(single_block(d), g, p);
      os << "params: " << format(p) << "\n";
      if (!report.order_ok) os << "declared v = " << p.v << " but |G| = " << g.order() << "\n";
      if (!report.size_ok) os << "declared k = " << p.k << " but |D| = " << d.blocks.front().size() << "\n";
      const auto adm = ds_admissible(p);
      if (!adm.pass)
        os << "parameters not admissible: lambda(v-1) = " << adm.lhs << " ≠ " << adm.rhs << " = k(k-1)\n";
      append_deviations(os, g, report.deviations);
      if (!report.deviations.empty())
        os << "all other nonzero elements: " << p.lambda << "\n";
      pass = report.pass;
      break;
    }
    case DesignKind::dds: {
      const DDSParams p{param(params, "m"), param(params, "n"), param(params, "k"), param(params, "lambda1"),
                        param(params, "lambda2")};
      const Block n = dds_subgroup(d, p.n);
      DdsReport report;
      try {
        report = verify_dds(single_block(d), g, n, p);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
      os << "params: " << format(p) << "\n";
      os << "subgroup: {";
      for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << g.format(n[i]);
      os << "}\n";
      if (!report.order_ok) os << "declared m n = " << p.m * p.n << " but |G| = " << g.order() << "\n";
      if (!report.subgroup_order_ok) os << "declared n = " << p.n << " but |N| = " << n.size() << "\n";
      if (!report.size_ok) os << "declared k = " << p.k << " but |D| = " << d.blocks.front().size() << "\n";
      append_deviations(os, g, report.deviations);
      pass = report.pass;
      break;
    }
    case DesignKind::dm:
    case DesignKind::hdm: {
      if (d.kind != DesignKind::dm && d.kind != DesignKind::hdm)
        throw ParseError("file holds blocks, not a matrix");
      DiffMatrix m(g, d.rows);
      const auto report = kind == DesignKind::dm ? verify_dm(m) : verify_hdm(m);
      bool declared_ok = true;
      if (params.contains("k") && param(params, "k") != m.row_count()) {
        os << "declared k = " << param(params, "k") << " but the matrix has " << m.row_count() << " rows\n";
        declared_ok = false;
      }
      if (params.contains("v") && param(params, "v") != g.order()) {
        os << "declared v = " << param(params, "v") << " but |G| = " << g.order() << "\n";
        declared_ok = false;
      }
      if (params.contains("lambda") && param(params, "lambda") != 1) {
        os << "only lambda = 1 difference matrices are supported\n";
        declared_ok = false;
      }
      if (report.bad_pair)
        os << "rows " << report.bad_pair->first << " and " << report.bad_pair->second
           << " do not differ by a permutation\n";
      if (report.bad_row) os << "row " << *report.bad_row << " is not a permutation\n";
      pass = report.pass && declared_ok;
      break;
    }
  }
  os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  return {pass, os.str()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify difference families, difference sets and difference matrices",
               "dfkit"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "build a design and write it to a file");
  construct->require_subcommand(1);
  ConstructOptions opts;
  const std::vector<std::pair<std::string, std::string>> constructions{
      {"orbit", "orbits of a semiregular automorphism group"},
      {"orbit-split", "orbit family split into two halves (vk odd)"},
      {"furino", "(v,k,k-1)-DDF, or (v,k,(k-1)/2) with --half"},
      {"cyclotomic-half", "explicit (v,k,(k-1)/2)-DDF in R_v"},
      {"units-hdm", "(v,k,1)-HDM from the unit subgroup of order k"},
      {"product", "product of a G-family, an H-family and an HDM over H"},
      {"result1", "(v(k+1),k,k-1)-DDF in Z_(k+1) x R_v"},
      {"trivial-ds", "Z_(k+1) minus 0"},
      {"singer", "Singer difference set of GF(q^m)"},
      {"dds-product", "D x Z_h from a difference set file"},
      {"result3star", "divisible difference set in Z_((q^d-1)/e) x Z_h"}};
  std::string chosen;
  for (const auto& [name, help] : constructions) {
    auto* sub = construct->add_subcommand(name, help);
    sub->set_help_flag("--help", "print this help and exit");  // frees -h for --h
    sub->add_option("--factors", opts.factors, "prime-power orders of the fields of R_v")->delimiter(',');
    sub->add_option("--v", opts.v, "order of the cyclic group Z_v");
    sub->add_option("--u", opts.u, "multiplier generating the action on Z_v (orbit)");
    sub->add_option("--k", opts.k, "block size / subgroup order");
    sub->add_option("--q", opts.q, "prime power");
    sub->add_option("--m", opts.m, "projective dimension + 1 (singer)");
    sub->add_option("--d", opts.d, "exponent d (result3star)");
    sub->add_option("--e", opts.e, "divisor e of q-1 (result3star)");
    sub->add_option("--h", opts.h, "order of the second factor");
    sub->add_flag("--half", opts.half, "(v,k,(k-1)/2) variant (furino)");
    sub->add_option("--sigma-choice", opts.sigma_choice, "class:factor,... (1-based) overriding sigma(C)");
    sub->add_option("--in", opts.in, "input difference set (dds-product)");
    sub->add_option("--g-file", opts.g_file, "G family (product)");
    sub->add_option("--h-file", opts.h_file, "H family (product)");
    sub->add_option("--hdm-file", opts.hdm_file, "difference matrix over H (product)");
    sub->add_option("--out", opts.out, "output design file")->required();
    sub->add_option("--out2", opts.out2, "second output (orbit-split)");
    sub->callback([&chosen, name = name] { chosen = name; });
  }

  auto* verify = app.add_subcommand("verify", "verify a design file");
  std::string in_path, expect_kind, expect_params;
  verify->add_option("file", in_path, "design file")->required();
  verify->add_option("--expect-kind", expect_kind, "verify as this kind instead of the declared one");
  verify->add_option("--expect-params", expect_params, "comma-separated parameters overriding the file's");

  auto* check = app.add_subcommand("check", "parameter admissibility");
  std::string check_kind;
  std::vector<std::string> numbers;
  check->add_option("kind", check_kind, "ds | dds | proportional | result3")->required();
  check->add_option("numbers", numbers, "integer parameters")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      const auto files = build(chosen, opts);
      write_design_file(opts.out, files.front());
      out << chosen << ": " << summary(files.front()) << " -> " << opts.out << "\n";
      if (files.size() > 1) {
        const auto path = second_path(opts);
        write_design_file(path, files[1]);
        out << chosen << ": " << summary(files[1]) << " -> " << path << "\n";
      }
      return kExitPass;
    }
    if (verify->parsed()) {
      const DesignFile d = read_design_file(in_path);
      DesignKind kind = d.kind;
      if (!expect_kind.empty()) {
        auto k = parse_kind(expect_kind);
        if (!k) throw ParseError("unknown kind " + expect_kind);
        kind = *k;
      }
      const json params = expect_params.empty() ? d.params : params_from_list(kind, expect_params);
      const auto outcome = verify_design(d, kind, params);
      out << outcome.report;
      return outcome.pass ? kExitPass : kExitRefuted;
    }
    if (check->parsed()) return run_check(check_kind, numbers, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OrderCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitRefuted;
  }
  return kExitUsage;
}

}  // namespace dfkit::cli
