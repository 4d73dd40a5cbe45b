#include "dtspec/driver.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv) {
  CLI::App app{"Generate ML phantom-type and datatype interfaces for "
               "datatype specializations"};
  dtspec::RunConfig config;
  std::string emit = "both";
  std::string dot;
  bool check_only = false;

  app.add_option("input", config.input, "Declaration file (.dts)")->required();
  app.add_option("--out-dir,-o", config.out_dir, "Directory for generated files")
      ->capture_default_str();
  app.add_option("--emit", emit, "phantom, datatype, both or check-only")
      ->check(CLI::IsMember({"phantom", "datatype", "both", "check-only"}))
      ->capture_default_str();
  app.add_option("--dot", dot, "Write the hierarchy as a DOT graph");
  app.add_option("--depth", config.depth,
                 "Term depth for the oracle cross-check (0 disables)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_flag("--check-only", check_only,
               "Analyze and report without generating code");
  app.add_flag("--werror", config.werror, "Treat warnings as errors");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  config.emit = check_only ? dtspec::EmitMode::CheckOnly
                           : *dtspec::parse_emit_mode(emit);
  if (!dot.empty())
    config.dot = dot;
  return dtspec::run(config, std::cout, std::cerr);
}
