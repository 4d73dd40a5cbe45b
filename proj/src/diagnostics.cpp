#include "dtspec/diagnostics.hpp"

namespace dtspec {

const char *severity_name(Severity s) {
  switch (s) {
  case Severity::Error:
    return "error";
  case Severity::Warning:
    return "warning";
  case Severity::Note:
    return "note";
  }
  return "error";
}

std::string Diagnostic::format(const std::string &file) const {
  std::string out = file;
  // Positionless diagnostics still carry a line/col so the format stays
  // grep-friendly.
  int line = pos.valid() ? pos.line : 1;
  int col = pos.valid() ? pos.col : 1;
  out += ":" + std::to_string(line) + ":" + std::to_string(col) + ": ";
  out += severity_name(severity);
  out += ": ";
  out += message;
  return out;
}

CompileError::CompileError(std::string category, SourcePos pos,
                           const std::string &message)
    : std::runtime_error(category + ": " + message),
      category_(std::move(category)), pos_(pos), detail_(message) {}

Diagnostic CompileError::diagnostic() const {
  return Diagnostic{pos_, Severity::Error, what()};
}

} // namespace dtspec
