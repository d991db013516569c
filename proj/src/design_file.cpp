#include "dfkit/design_file.hpp"

#include <fstream>
#include <sstream>

namespace dfkit {
namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "dfkit-design/1";

u64 as_u64(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<i64>() >= 0))
    throw ParseError(std::string(what) + " must be a non-negative integer");
  return j.get<u64>();
}

void write_element_list(std::ostringstream& os, const Group& g, const std::vector<Group::Elem>& xs) {
  json arr = json::array();
  for (auto x : xs) arr.push_back(element_to_json(g, x));
  os << arr.dump();
}

std::vector<Group::Elem> read_element_list(const Group& g, const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of elements");
  std::vector<Group::Elem> out;
  for (const auto& e : j) out.push_back(element_from_json(g, e));
  return out;
}

}  // namespace

std::string to_string(DesignKind k) {
  switch (k) {
    case DesignKind::df: return "df";
    case DesignKind::ddf: return "ddf";
    case DesignKind::pdf: return "pdf";
    case DesignKind::ds: return "ds";
    case DesignKind::dds: return "dds";
    case DesignKind::dm: return "dm";
    case DesignKind::hdm: return "hdm";
  }
  return "?";
}

std::optional<DesignKind> parse_kind(std::string_view s) {
  for (auto k : {DesignKind::df, DesignKind::ddf, DesignKind::pdf, DesignKind::ds, DesignKind::dds,
                 DesignKind::dm, DesignKind::hdm})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

json group_to_json(const Group& g) {
  json arr = json::array();
  for (const auto& f : g.factors()) {
    if (const auto* c = std::get_if<CyclicFactor>(&f)) {
      arr.push_back({{"cyclic", c->modulus}});
    } else {
      const auto& field = std::get<Field>(f);
      arr.push_back({{"field",
                      {{"p", field.characteristic()}, {"n", field.degree()}, {"modulus", field.modulus()}}}});
    }
  }
  return arr;
}

Group group_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("group must be a nonempty array of factors");
  std::vector<GroupFactor> factors;
  for (const auto& f : j) {
    if (!f.is_object() || f.size() != 1) throw ParseError("group factor must be {\"cyclic\": n} or {\"field\": {...}}");
    if (f.contains("cyclic")) {
      const u64 n = as_u64(f["cyclic"], "cyclic order");
      if (n < 1) throw ParseError("cyclic order must be at least 1");
      factors.emplace_back(CyclicFactor{n});
    } else if (f.contains("field")) {
      const auto& d = f["field"];
      if (!d.is_object() || !d.contains("p") || !d.contains("n") || !d.contains("modulus"))
        throw ParseError("field factor needs p, n and modulus");
      const u64 p = as_u64(d["p"], "p");
      const u64 n = as_u64(d["n"], "n");
      poly::Poly modulus;
      if (!d["modulus"].is_array()) throw ParseError("modulus must be a coefficient list");
      for (const auto& c : d["modulus"]) modulus.push_back(static_cast<u32>(as_u64(c, "modulus coefficient")));
      if (modulus.size() != n + 1) throw ParseError("modulus length must be n + 1");
      try {
        factors.emplace_back(Field::with_modulus(p, std::move(modulus)));
      } catch (const OrderCapExceeded&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(std::string("bad field factor: ") + e.what());
      }
    } else {
      throw ParseError("unknown group factor kind");
    }
  }
  return Group(std::move(factors));
}

json element_to_json(const Group& g, Group::Elem x) {
  json arr = json::array();
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    const u64 code = g.factor_code(x, i);
    if (std::holds_alternative<CyclicFactor>(g.factors()[i]))
      arr.push_back(code);
    else
      arr.push_back(std::get<Field>(g.factors()[i]).decode(static_cast<Field::Code>(code)).coeffs);
  }
  return arr;
}

Group::Elem element_from_json(const Group& g, const json& j) {
  if (!j.is_array() || j.size() != g.factor_count())
    throw ParseError("element must be an array with one coordinate per group factor");
  GroupElement e;
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    if (std::holds_alternative<CyclicFactor>(g.factors()[i])) {
      e.coords.emplace_back(as_u64(j[i], "cyclic coordinate"));
    } else {
      if (!j[i].is_array()) throw ParseError("field coordinate must be a coefficient list");
      FieldElement fe;
      for (const auto& c : j[i]) fe.coeffs.push_back(static_cast<u32>(as_u64(c, "coefficient")));
      e.coords.emplace_back(std::move(fe));
    }
  }
  try {
    return g.index(e);
  } catch (const Error& err) {
    throw ParseError(std::string("bad element ") + j.dump() + ": " + err.what());
  }
}

std::string serialize(const DesignFile& d) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": " << json(kFormatTag).dump() << ",\n";
  os << "  \"kind\": " << json(to_string(d.kind)).dump() << ",\n";
  os << "  \"group\": " << group_to_json(d.group).dump() << ",\n";
  os << "  \"params\": " << d.params.dump();
  if (d.subgroup) {
    os << ",\n  \"subgroup\": ";
    write_element_list(os, d.group, *d.subgroup);
  }
  const bool matrix = d.kind == DesignKind::dm || d.kind == DesignKind::hdm;
  const auto& lists = matrix ? d.rows : d.blocks;
  os << ",\n  \"" << (matrix ? "rows" : "blocks") << "\": [";
  for (std::size_t i = 0; i < lists.size(); ++i) {
    os << (i ? ",\n    " : "\n    ");
    write_element_list(os, d.group, lists[i]);
  }
  os << (lists.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

DesignFile parse_design(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("design file must be a JSON object");
  if (j.contains("format") && j["format"] != kFormatTag)
    throw ParseError("unsupported format " + j["format"].dump());
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing kind");
  if (!j.contains("group")) throw ParseError("missing group");

  DesignFile d;
  const auto kind = parse_kind(j["kind"].get<std::string>());
  if (!kind) throw ParseError("unknown kind " + j["kind"].dump());
  d.kind = *kind;
  d.group = group_from_json(j["group"]);
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError("params must be an object");
    d.params = j["params"];
  }
  if (j.contains("subgroup")) {
    try {
      d.subgroup = make_block(d.group, read_element_list(d.group, j["subgroup"], "subgroup"));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("subgroup: ") + e.what());
    }
  }
  const bool matrix = d.kind == DesignKind::dm || d.kind == DesignKind::hdm;
  const char* key = matrix ? "rows" : "blocks";
  if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing ") + key);
  for (const auto& entry : j[key]) {
    auto elems = read_element_list(d.group, entry, key);
    if (matrix) {
      d.rows.push_back(std::move(elems));
    } else {
      if (elems.empty()) throw ParseError("empty block");
      try {
        d.blocks.push_back(make_block(d.group, std::move(elems)));
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }
  }
  return d;
}

DesignFile read_design_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_design(ss.str());
}

void write_design_file(const std::filesystem::path& path, const DesignFile& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize(d);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace dfkit
