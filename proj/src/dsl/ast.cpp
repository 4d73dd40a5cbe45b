#include "dtspec/dsl.hpp"

namespace dtspec {

TypeAtom TypeAtom::tyvar(std::string name, SourcePos pos) {
  return {AtomKind::TyVar, std::move(name), {}, pos};
}

TypeAtom TypeAtom::unresolved(std::string name,
                              std::vector<std::string> applied,
                              SourcePos pos) {
  return {AtomKind::Unresolved, std::move(name), std::move(applied), pos};
}

TypeAtom TypeAtom::base(std::string name, std::vector<std::string> applied,
                        SourcePos pos) {
  return {AtomKind::Base, std::move(name), std::move(applied), pos};
}

TypeAtom TypeAtom::rec_ref(std::string target,
                           std::vector<std::string> applied, SourcePos pos) {
  return {AtomKind::RecRef, std::move(target), std::move(applied), pos};
}

bool operator==(const TypeAtom &a, const TypeAtom &b) {
  return a.kind == b.kind && a.name == b.name && a.applied == b.applied;
}

bool operator==(const ConClause &a, const ConClause &b) {
  return a.constructor == b.constructor && a.args == b.args;
}

bool operator==(const DatatypeDecl &a, const DatatypeDecl &b) {
  return a.name == b.name && a.typarams == b.typarams && a.clauses == b.clauses;
}

bool operator==(const SpecDecl &a, const SpecDecl &b) {
  return a.name == b.name && a.typarams == b.typarams && a.clauses == b.clauses;
}

bool operator==(const DeclGroup &a, const DeclGroup &b) {
  return a.datatype == b.datatype && a.specs == b.specs;
}

namespace {

std::string render_tyvars(const std::vector<std::string> &vars) {
  if (vars.empty())
    return "";
  if (vars.size() == 1)
    return "'" + vars.front() + " ";
  std::string s = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i)
      s += ", ";
    s += "'" + vars[i];
  }
  return s + ") ";
}

std::string render_clauses(const std::vector<ConClause> &clauses) {
  std::string s;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i)
      s += " | ";
    s += clauses[i].constructor;
    if (!clauses[i].args.empty()) {
      s += " of ";
      for (std::size_t j = 0; j < clauses[i].args.size(); ++j) {
        if (j)
          s += " * ";
        s += render_atom(clauses[i].args[j]);
      }
    }
  }
  return s;
}

} // namespace

std::string render_atom(const TypeAtom &atom) {
  if (atom.kind == AtomKind::TyVar)
    return "'" + atom.name;
  return render_tyvars(atom.applied) + atom.name;
}

std::string pretty_print(const DeclGroup &group) {
  const auto &dt = group.datatype;
  std::string out = "datatype " + render_tyvars(dt.typarams) + dt.name +
                    " = " + render_clauses(dt.clauses) + "\n";
  for (std::size_t i = 0; i < group.specs.size(); ++i) {
    const auto &sp = group.specs[i];
    out += i == 0 ? "  withspec " : "       and ";
    out += render_tyvars(sp.typarams) + sp.name + " = " +
           render_clauses(sp.clauses) + "\n";
  }
  return out;
}

} // namespace dtspec
