#include "support.hpp"

#include "dtspec/driver.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using namespace dtspec;
namespace fs = std::filesystem;

namespace {

fs::path spec_path(const std::string &name) {
  return support::source_dir() / "specs" / (name + ".dts");
}

std::set<std::string> listing(const fs::path &dir) {
  std::set<std::string> out;
  if (!fs::exists(dir))
    return out;
  for (const auto &e : fs::directory_iterator(dir))
    out.insert(e.path().filename().string());
  return out;
}

void write(const fs::path &p, const std::string &text) {
  std::ofstream(p, std::ios::binary) << text;
}

std::size_t lines(const std::string &s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

const char *kUninhabited = "datatype t = A of t | B\n"
                           "  withspec s = A of s\n";

} // namespace

TEST_CASE("emit both on the formula declaration writes four files") {
  auto work = support::temp_dir("cli");
  auto r = support::run_cli({spec_path("fmla").string(), "-o", "out"}, work);
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  CHECK(r.out.empty());
  CHECK(listing(work / "out") ==
        std::set<std::string>{"Fmla.sig", "Fmla.sml", "FmlaDT.sig", "FmlaDT.sml"});
  fs::remove_all(work);
}

TEST_CASE("library run matches the command line") {
  auto work = support::temp_dir("cli");
  RunConfig cfg;
  cfg.input = spec_path("evenodd").string();
  cfg.out_dir = (work / "lib").string();
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 0);
  CHECK(err.str().empty());
  auto r = support::run_cli({cfg.input, "-o", "cli"}, work);
  CHECK(r.status == 0);
  CHECK(listing(work / "lib") == listing(work / "cli"));
  for (const auto &f : listing(work / "lib"))
    CHECK(support::read_file(work / "lib" / f) ==
          support::read_file(work / "cli" / f));
  fs::remove_all(work);
}

TEST_CASE("refining a non-recursive position exits 1 with one validation error") {
  auto work = support::temp_dir("cli");
  auto file = support::source_dir() / "tests/negative/refined_base.dts";
  auto r = support::run_cli({file.string(), "-o", "out"}, work);
  CHECK(r.status == 1);
  CHECK(lines(r.err) == 1);
  CHECK(r.err.find(": error: validation error: ") != std::string::npos);
  CHECK(listing(work / "out").empty());
  fs::remove_all(work);
}

TEST_CASE("emit modes select the generated units") {
  struct Case {
    std::string mode;
    std::set<std::string> files;
  };
  const std::vector<Case> cases = {
      {"phantom", {"Nat.sig", "Nat.sml"}},
      {"datatype", {"Nat.sig", "Nat.sml", "NatDT.sig", "NatDT.sml"}},
      {"both", {"Nat.sig", "Nat.sml", "NatDT.sig", "NatDT.sml"}},
      {"check-only", {}},
  };
  for (const auto &c : cases) {
    CAPTURE(c.mode);
    auto work = support::temp_dir("cli");
    auto r = support::run_cli(
        {spec_path("nat").string(), "--emit", c.mode, "-o", "out"}, work);
    CHECK(r.status == 0);
    CHECK(listing(work / "out") == c.files);
    fs::remove_all(work);
  }
}

TEST_CASE("check-only prints the hierarchy and writes nothing") {
  auto work = support::temp_dir("cli");
  auto r = support::run_cli({spec_path("lists").string(), "--check-only", "-o", "out"},
                            work);
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  CHECK(r.out == "hierarchy:\n"
                 "  list\n"
                 "    empty\n"
                 "    nonempty\n"
                 "      singleton\n"
                 "inhabitedness:\n"
                 "  list: inhabited\n"
                 "  empty: inhabited\n"
                 "  singleton: inhabited\n"
                 "  nonempty: inhabited\n");
  CHECK(!fs::exists(work / "out"));
  CHECK(support::dir_is_empty(work));
  fs::remove_all(work);
}

TEST_CASE("dot output is written on request") {
  auto work = support::temp_dir("cli");
  auto r = support::run_cli(
      {spec_path("evenodd").string(), "--check-only", "--dot", "h.dot"}, work);
  CHECK(r.status == 0);
  auto dot = support::read_file(work / "h.dot");
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"even\"") != std::string::npos);
  fs::remove_all(work);
}

TEST_CASE("repeated runs produce identical bytes") {
  auto work = support::temp_dir("cli");
  for (const auto &name : support::examples()) {
    CAPTURE(name);
    auto a = support::run_cli({spec_path(name).string(), "-o", "a", "--dot", "a/h.dot"},
                              work);
    auto b = support::run_cli({spec_path(name).string(), "-o", "b", "--dot", "b/h.dot"},
                              work);
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    REQUIRE(listing(work / "a") == listing(work / "b"));
    for (const auto &f : listing(work / "a"))
      CHECK(support::read_file(work / "a" / f) == support::read_file(work / "b" / f));
    fs::remove_all(work / "a");
    fs::remove_all(work / "b");
  }
  fs::remove_all(work);
}

TEST_CASE("uninhabited specializations warn, and fail under --werror") {
  auto work = support::temp_dir("cli");
  write(work / "u.dts", kUninhabited);

  auto r = support::run_cli({"u.dts", "-o", "out"}, work);
  CHECK(r.status == 0);
  CHECK(r.err == "u.dts:2:12: warning: specialization 's' is uninhabited: no "
                 "finite value belongs to it\n");
  CHECK(listing(work / "out").size() == 4);

  auto w = support::run_cli({"u.dts", "-o", "strict", "--werror"}, work);
  CHECK(w.status == 1);
  CHECK(w.err.find("u.dts:2:12: error: specialization 's' is uninhabited") == 0);
  CHECK(!fs::exists(work / "strict"));
  fs::remove_all(work);
}

TEST_CASE("a missing input is an io error") {
  auto work = support::temp_dir("cli");
  auto r = support::run_cli({"absent.dts"}, work);
  CHECK(r.status == 1);
  CHECK(r.err == "absent.dts:1:1: error: io error: cannot read 'absent.dts'\n");
  CHECK(support::dir_is_empty(work));
  fs::remove_all(work);
}

TEST_CASE("a failing datatype plan leaves no partial output") {
  auto work = support::temp_dir("cli");
  auto r = support::run_cli({spec_path("dnf_two_or").string(), "-o", "out"}, work);
  CHECK(r.status == 1);
  CHECK(r.err.find("codegen error: constructor Or' would be declared twice") !=
        std::string::npos);
  CHECK(!fs::exists(work / "out"));

  auto ok = support::run_cli(
      {spec_path("dnf_two_or").string(), "--emit", "phantom", "-o", "out"}, work);
  CHECK(ok.status == 0);
  CHECK(listing(work / "out") == std::set<std::string>{"Fmla.sig", "Fmla.sml"});
  fs::remove_all(work);
}

TEST_CASE("an unwritable output directory is an io error") {
  auto work = support::temp_dir("cli");
  write(work / "blocker", "");
  auto r = support::run_cli({spec_path("nat").string(), "-o", "blocker/out"}, work);
  CHECK(r.status == 1);
  CHECK(r.err.find("error: io error: cannot create directory") != std::string::npos);
  fs::remove_all(work);
}

TEST_CASE("usage errors exit 1") {
  auto work = support::temp_dir("cli");
  CHECK(support::run_cli({}, work).status == 1);
  CHECK(support::run_cli({spec_path("nat").string(), "--emit", "bogus"}, work).status ==
        1);
  CHECK(support::run_cli({spec_path("nat").string(), "--depth", "-3"}, work).status ==
        1);
  CHECK(support::run_cli({"--help"}, work).status == 0);
  fs::remove_all(work);
}

TEST_CASE("oracle depth zero skips enumeration but keeps the encoding check") {
  RunConfig cfg;
  cfg.input = spec_path("fmla").string();
  cfg.emit = EmitMode::CheckOnly;
  cfg.depth = 0;
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 0);
  CHECK(err.str().empty());
  CHECK(out.str().find("  atom: inhabited") != std::string::npos);
}

TEST_CASE("emit mode names round-trip") {
  CHECK(parse_emit_mode("phantom") == EmitMode::Phantom);
  CHECK(parse_emit_mode("datatype") == EmitMode::Datatype);
  CHECK(parse_emit_mode("both") == EmitMode::Both);
  CHECK(parse_emit_mode("check-only") == EmitMode::CheckOnly);
  CHECK(!parse_emit_mode("all"));
}
