#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace dtspec {

enum class EmitMode { Phantom, Datatype, Both, CheckOnly };

// "phantom", "datatype", "both", "check-only"
std::optional<EmitMode> parse_emit_mode(const std::string &s);

struct RunConfig {
  std::filesystem::path input;
  std::filesystem::path out_dir = ".";
  // The datatype unit is layered on the phantom unit, so Datatype writes
  // both units, like Both.
  EmitMode emit = EmitMode::Both;
  std::optional<std::filesystem::path> dot;
  // 0 disables the term-oracle cross-check.
  int depth = 5;
  bool werror = false;
};

// Diagnostics go to `err` as `file:line:col: severity: message`; the
// check-only report goes to `out`. Returns the process exit status: 0 on
// success (warnings allowed unless werror), 1 otherwise. Nothing is written
// unless every step succeeds.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace dtspec
