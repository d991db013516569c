#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dfkit/designs.hpp"
#include "dfkit/diff_matrix.hpp"

namespace dfkit {

enum class DesignKind { df, ddf, pdf, ds, dds, dm, hdm };

std::string to_string(DesignKind k);
std::optional<DesignKind> parse_kind(std::string_view s);

/// Malformed design file or element.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Self-contained design document:
///
///   {
///     "format": "dfkit-design/1",
///     "kind": "ddf",
///     "group": [{"cyclic": 4}, {"field": {"p": 7, "n": 1, "modulus": [0, 1]}}],
///     "params": {"v": 28, "k": 3, "lambda": 2},
///     "blocks": [ [[1, [0]], [2, [3]], [3, [5]]], ... ]
///   }
///
/// Elements are coordinate arrays: an integer per cyclic factor, a
/// coefficient list (low degree first) per field factor. Matrices use "rows"
/// instead of "blocks"; divisible difference sets may carry "subgroup".
struct DesignFile {
  Group group;
  DesignKind kind = DesignKind::df;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Block> blocks;
  std::vector<DiffMatrix::Row> rows;
  std::optional<Block> subgroup;
};

/// Deterministic text: fixed key order, one block or row per line.
std::string serialize(const DesignFile& d);
DesignFile parse_design(std::string_view text);

DesignFile read_design_file(const std::filesystem::path& path);
void write_design_file(const std::filesystem::path& path, const DesignFile& d);

nlohmann::json group_to_json(const Group& g);
Group group_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const Group& g, Group::Elem x);
Group::Elem element_from_json(const Group& g, const nlohmann::json& j);

}  // namespace dfkit
