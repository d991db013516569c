#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dfkit/design_file.hpp"

namespace dfkit::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

struct VerifyOutcome {
  bool pass = false;
  std::string report;
};

/// Verifies a parsed design as `kind` with declared parameters `params`
/// (same layout as the file's "params" object). Throws ParseError when the
/// declaration is incomplete or does not fit the kind.
VerifyOutcome verify_design(const DesignFile& d, DesignKind kind, const nlohmann::json& params);

/// Parses "--expect-params" ("170,42,10") into a params object for `kind`.
nlohmann::json params_from_list(DesignKind kind, const std::string& list);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfkit::cli
