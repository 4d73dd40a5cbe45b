#pragma once

#include "dtspec/dsl.hpp"
#include "dtspec/model.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace support {

inline std::filesystem::path source_dir() { return DTSPEC_SOURCE_DIR; }

inline std::string read_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string spec_text(const std::string &name) {
  return read_file(source_dir() / "specs" / (name + ".dts"));
}

inline dtspec::Analysis load(const std::string &name) {
  return dtspec::analyze(dtspec::parse_declarations(spec_text(name)));
}

inline dtspec::Analysis analyze_text(const std::string &text) {
  return dtspec::analyze(dtspec::parse_declarations(text));
}

// The seven example declaration groups; dnf_two_or is an extra variant.
inline const std::vector<std::string> &examples() {
  static const std::vector<std::string> names = {
      "fmla", "grnd", "nat", "lists", "evenodd", "exp", "bits"};
  return names;
}

inline const std::vector<std::string> &all_specs() {
  static const std::vector<std::string> names = {
      "fmla", "grnd", "nat", "lists", "evenodd", "exp", "bits", "dnf_two_or"};
  return names;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string &tag) {
  static std::mt19937_64 rng{std::random_device{}()};
  auto dir = std::filesystem::temp_directory_path() /
             ("dtspec-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

inline std::string quote(const std::string &s) {
  std::string q = "'";
  for (char c : s)
    q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the command-line tool with `args`; the working directory is `cwd`.
inline CliResult run_cli(const std::vector<std::string> &args,
                         const std::filesystem::path &cwd) {
  auto scratch = temp_dir("cli");
  std::string cmd = "cd " + quote(cwd.string()) + " && " + quote(DTSPEC_CLI);
  for (const auto &a : args)
    cmd += " " + quote(a);
  cmd += " >" + quote((scratch / "out").string()) + " 2>" +
         quote((scratch / "err").string());
  int raw = std::system(cmd.c_str());
  CliResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = read_file(scratch / "out");
  r.err = read_file(scratch / "err");
  std::filesystem::remove_all(scratch);
  return r;
}

inline bool dir_is_empty(const std::filesystem::path &dir) {
  return !std::filesystem::exists(dir) || std::filesystem::is_empty(dir);
}

} // namespace support
