#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <regex>
#include <set>

using namespace dtspec;
namespace fs = std::filesystem;

namespace {

struct Expectation {
  fs::path file;
  std::string category;
  int line = 0;
  int col = 0;
};

std::vector<Expectation> corpus() {
  static const std::regex header(R"(\(\* expect: (.+) at (\d+):(\d+) \*\))");
  std::vector<Expectation> out;
  for (const auto &entry : fs::directory_iterator(support::source_dir() / "tests/negative")) {
    if (entry.path().extension() != ".dts")
      continue;
    std::string text = support::read_file(entry.path());
    std::smatch m;
    std::string first = text.substr(0, text.find('\n'));
    REQUIRE(std::regex_match(first, m, header));
    out.push_back({entry.path(), m[1], std::stoi(m[2]), std::stoi(m[3])});
  }
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.file < b.file; });
  return out;
}

} // namespace

TEST_CASE("negative corpus covers the required error classes") {
  auto cases = corpus();
  CHECK(cases.size() >= 12);
  std::set<std::string> names;
  for (const auto &c : cases)
    names.insert(c.file.stem().string());
  for (const char *required :
       {"unknown_constructor", "arity_mismatch", "refined_base", "non_tree",
        "mutually_simulating", "duplicate_clause"})
    CHECK(names.count(required));
}

TEST_CASE("library rejects every negative case with a positioned error") {
  for (const auto &c : corpus()) {
    CAPTURE(c.file.filename().string());
    try {
      analyze(parse_declarations(support::read_file(c.file)));
      FAIL("accepted");
    } catch (const CompileError &e) {
      CHECK(e.category() == c.category);
      CHECK(e.pos().line == c.line);
      CHECK(e.pos().col == c.col);
    }
  }
}

TEST_CASE("command line rejects every negative case without writing files") {
  for (const auto &c : corpus()) {
    CAPTURE(c.file.filename().string());
    auto work = support::temp_dir("neg");
    fs::path out = work / "out";
    auto r = support::run_cli({c.file.string(), "--out-dir", out.string(), "--dot",
                               (out / "h.dot").string()},
                              work);
    CHECK(r.status == 1);
    std::string prefix = c.file.string() + ":" + std::to_string(c.line) + ":" +
                         std::to_string(c.col) + ": error: " + c.category + ": ";
    CHECK(r.err.rfind(prefix, 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK(r.out.empty());
    CHECK(support::dir_is_empty(out));
    CHECK(support::dir_is_empty(work / "out"));
    fs::remove_all(work);
  }
}
