#include "common.hpp"

#include <cctype>
#include <map>

namespace dtspec {

std::string capitalize(const std::string &s) {
  if (s.empty())
    return s;
  std::string out = s;
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string abstract_name(const std::string &spec) {
  return "A" + capitalize(spec);
}

std::string concrete_name(const std::string &spec) {
  return "C" + capitalize(spec);
}

std::string unrolling_name(const std::string &spec) {
  return "D" + capitalize(spec);
}

namespace codegen {

std::string FreshVars::next() {
  for (;;) {
    int n = counter_++;
    std::string name(1, static_cast<char>('a' + n % 26));
    if (n >= 26)
      name += std::to_string(n / 26);
    if (!avoid_.count(name))
      return name;
  }
}

MlType TypeNames::abstract(SpecId s, const std::string &var) const {
  auto args = params();
  args.push_back(MlType::var(var));
  return MlType::con(abstract_name(set_.name(s)), std::move(args));
}

MlType TypeNames::concrete(SpecId s) const {
  return MlType::con(concrete_name(set_.name(s)), params());
}

MlType TypeNames::plain(const TypeAtom &atom) const {
  if (atom.kind == AtomKind::TyVar)
    return MlType::var(atom.name);
  return MlType::con(atom.name, tyvar_args(atom.applied));
}

std::string join(const std::vector<std::string> &parts,
                 const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += sep;
    out += parts[i];
  }
  return out;
}

std::string params_prefix(const std::vector<std::string> &params) {
  if (params.empty())
    return "";
  std::vector<std::string> quoted;
  for (const auto &p : params)
    quoted.push_back("'" + p);
  if (quoted.size() == 1)
    return quoted.front() + " ";
  return "(" + join(quoted, ", ") + ") ";
}

std::string apply_pattern(const std::string &head, std::size_t arity) {
  if (arity == 0)
    return head;
  if (arity == 1)
    return head + " x1";
  std::vector<std::string> xs;
  for (std::size_t i = 1; i <= arity; ++i)
    xs.push_back("x" + std::to_string(i));
  return head + " (" + join(xs, ", ") + ")";
}

std::vector<std::string> constructor_function_names(const Specialization &sp) {
  std::map<std::string, int> total, seen;
  for (const auto &c : sp.clauses)
    ++total[c.constructor];
  std::vector<std::string> out;
  for (const auto &c : sp.clauses) {
    if (total[c.constructor] == 1)
      out.push_back(c.constructor);
    else
      out.push_back(c.constructor + "_" + std::to_string(++seen[c.constructor]));
  }
  return out;
}

} // namespace codegen
} // namespace dtspec
