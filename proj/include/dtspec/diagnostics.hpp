#pragma once

#include <stdexcept>
#include <string>

namespace dtspec {

// 1-based; line 0 means "no position".
struct SourcePos {
  int line = 0;
  int col = 0;

  bool valid() const { return line > 0; }
};

enum class Severity { Error, Warning, Note };

const char *severity_name(Severity s);

struct Diagnostic {
  SourcePos pos;
  Severity severity = Severity::Error;
  std::string message;

  // `file:line:col: severity: message`
  std::string format(const std::string &file) const;
};

// Every user-facing failure in the pipeline is reported through this type.
// `category` is a short label such as "syntax error" or "validation error";
// it is prepended to the message when the diagnostic is rendered.
class CompileError : public std::runtime_error {
public:
  CompileError(std::string category, SourcePos pos, const std::string &message);

  const std::string &category() const { return category_; }
  SourcePos pos() const { return pos_; }
  const std::string &detail() const { return detail_; }

  Diagnostic diagnostic() const;

private:
  std::string category_;
  SourcePos pos_;
  std::string detail_;
};

} // namespace dtspec
