#include "dtspec/driver.hpp"

#include "dtspec/codegen.hpp"
#include "dtspec/diagnostics.hpp"
#include "dtspec/dsl.hpp"
#include "dtspec/model.hpp"
#include "dtspec/oracle.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

namespace fs = std::filesystem;

namespace dtspec {

std::optional<EmitMode> parse_emit_mode(const std::string &s) {
  if (s == "phantom")
    return EmitMode::Phantom;
  if (s == "datatype")
    return EmitMode::Datatype;
  if (s == "both")
    return EmitMode::Both;
  if (s == "check-only")
    return EmitMode::CheckOnly;
  return std::nullopt;
}

namespace {

struct OutputFile {
  fs::path path;
  std::string text;
};

std::string pair_text(const SpecSet &set, SpecPair p) {
  return "'" + set.name(p.first) + "' and '" + set.name(p.second) + "'";
}

void print_report(std::ostream &out, const SpecSet &set, const Hierarchy &h,
                  const std::vector<bool> &inhabited) {
  out << "hierarchy:\n";
  for (SpecId s : h.preorder())
    out << std::string(2 * h.path(s).size(), ' ') << set.name(s) << "\n";
  out << "inhabitedness:\n";
  for (SpecId s = 0; s < set.size(); ++s)
    out << "  " << set.name(s) << ": "
        << (inhabited[s] ? "inhabited" : "uninhabited") << "\n";
}

// Writes every file to a temporary sibling first and renames only once all
// writes have succeeded.
bool commit(const std::vector<OutputFile> &files, std::string &error) {
  std::vector<fs::path> temps;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto &t : temps)
      fs::remove(t, ec);
  };
  for (const auto &f : files) {
    std::error_code ec;
    if (f.path.has_parent_path())
      fs::create_directories(f.path.parent_path(), ec);
    if (ec) {
      error = "cannot create directory '" + f.path.parent_path().string() +
              "': " + ec.message();
      cleanup();
      return false;
    }
    fs::path tmp = f.path;
    tmp += ".tmp";
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    temps.push_back(tmp);
    os << f.text;
    os.close();
    if (!os) {
      error = "cannot write '" + f.path.string() + "'";
      cleanup();
      return false;
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::error_code ec;
    fs::rename(temps[i], files[i].path, ec);
    if (ec) {
      error = "cannot rename '" + temps[i].string() + "' to '" +
              files[i].path.string() + "': " + ec.message();
      cleanup();
      return false;
    }
  }
  return true;
}

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  const std::string file = config.input.string();
  std::vector<Diagnostic> warnings;
  auto report_error = [&](const std::string &message) {
    err << Diagnostic{{}, Severity::Error, message}.format(file) << "\n";
    return 1;
  };

  std::ifstream in(config.input, std::ios::binary);
  if (!in)
    return report_error("io error: cannot read '" + file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string source = buffer.str();

  std::vector<OutputFile> files;
  try {
    DeclGroup group = parse_declarations(source);
    Analysis analysis = analyze(group);
    const SpecSet &set = analysis.set;
    const Hierarchy &h = analysis.hierarchy;

    auto inhabited = check_inhabited(set);
    for (SpecId s = 0; s < set.size(); ++s)
      if (!inhabited[s])
        warnings.push_back({set.spec(s).pos, Severity::Warning,
                            "specialization '" + set.name(s) +
                                "' is uninhabited: no finite value belongs "
                                "to it"});

    OracleReport oracle = cross_check(set, h, config.depth);
    for (const auto &v : oracle.inclusion_violations)
      return report_error(
          "internal error: '" + set.name(v.sub) + "' <= '" +
          set.name(v.super) + "' but " + to_text(v.witness) +
          " belongs only to the first");
    for (const auto &p : oracle.encoding_mismatches)
      return report_error("internal error: encodings of " + pair_text(set, p) +
                          " disagree with the hierarchy");
    for (const auto &p : oracle.missing_witnesses)
      if (inhabited[p.first])
        warnings.push_back(
            {set.spec(p.first).pos, Severity::Note,
             "no term of depth <= " + std::to_string(config.depth) +
                 " separates " + pair_text(set, p)});

    if (config.emit == EmitMode::CheckOnly)
      print_report(out, set, h, inhabited);
    else {
      GeneratedUnit ph = gen_phantom(set, h);
      files.push_back({config.out_dir / ph.sig_file, ph.sig_text});
      files.push_back({config.out_dir / ph.struct_file, ph.struct_text});
      if (config.emit != EmitMode::Phantom) {
        DtPlan plan = plan_datatypes(set, h);
        GeneratedUnit dt = gen_dt(set, h, plan);
        files.push_back({config.out_dir / dt.sig_file, dt.sig_text});
        files.push_back({config.out_dir / dt.struct_file, dt.struct_text});
      }
    }
    if (config.dot)
      files.push_back({*config.dot, hierarchy_dot(set, h)});
  } catch (const CompileError &e) {
    for (const auto &w : warnings)
      err << w.format(file) << "\n";
    err << e.diagnostic().format(file) << "\n";
    return 1;
  }

  bool warned = false;
  for (const auto &w : warnings) {
    Diagnostic d = w;
    if (d.severity == Severity::Warning) {
      warned = true;
      if (config.werror)
        d.severity = Severity::Error;
    }
    err << d.format(file) << "\n";
  }
  if (warned && config.werror)
    return 1;

  std::string error;
  if (!commit(files, error))
    return report_error("io error: " + error);
  return 0;
}

} // namespace dtspec
