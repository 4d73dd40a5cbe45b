#include "dtspec/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dtspec {

std::optional<SpecId> SpecSet::find(std::string_view name) const {
  for (SpecId i = 0; i < specs_.size(); ++i)
    if (specs_[i].name == name)
      return i;
  return std::nullopt;
}

SpecId SpecSet::id_of(std::string_view name) const {
  if (auto id = find(name))
    return *id;
  throw std::invalid_argument("unknown specialization '" + std::string(name) +
                              "'");
}

std::optional<std::size_t>
SpecSet::root_clause_index(std::string_view constructor) const {
  for (std::size_t i = 0; i < root_.clauses.size(); ++i)
    if (root_.clauses[i].constructor == constructor)
      return i;
  return std::nullopt;
}

namespace {

[[noreturn]] void invalid(SourcePos pos, const std::string &msg) {
  throw CompileError("validation error", pos, msg);
}

std::string quote_vars(const std::vector<std::string> &vars) {
  if (vars.empty())
    return "no type parameters";
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i)
      s += ", ";
    s += "'" + vars[i];
  }
  return s;
}

class Resolver {
public:
  Resolver(const DeclGroup &group) : typarams_(group.datatype.typarams) {
    declared_.insert(group.datatype.name);
    for (const auto &sp : group.specs)
      declared_.insert(sp.name);
  }

  TypeAtom resolve(const TypeAtom &atom) const {
    switch (atom.kind) {
    case AtomKind::TyVar:
      for (const auto &p : typarams_)
        if (p == atom.name)
          return atom;
      invalid(atom.pos, "unbound type variable '" + atom.name);
    case AtomKind::Unresolved:
      if (declared_.count(atom.name)) {
        if (atom.applied != typarams_)
          invalid(atom.pos, "'" + atom.name +
                                "' must be applied to exactly the type "
                                "parameters of the datatype (" +
                                quote_vars(typarams_) + ")");
        return TypeAtom::rec_ref(atom.name, atom.applied, atom.pos);
      }
      for (const auto &v : atom.applied)
        if (std::find(typarams_.begin(), typarams_.end(), v) == typarams_.end())
          invalid(atom.pos, "unbound type variable '" + v);
      return TypeAtom::base(atom.name, atom.applied, atom.pos);
    case AtomKind::Base:
    case AtomKind::RecRef:
      return atom;
    }
    return atom;
  }

private:
  const std::vector<std::string> &typarams_;
  std::set<std::string> declared_;
};

std::string ordinal_arg(std::size_t i, const std::string &con) {
  return "argument " + std::to_string(i + 1) + " of '" + con + "'";
}

} // namespace

SpecSet validate(const DeclGroup &group) {
  const DatatypeDecl &dt = group.datatype;
  Resolver resolver(group);

  std::set<std::string> names{dt.name};
  for (const auto &sp : group.specs) {
    if (sp.name == dt.name)
      invalid(sp.pos, "specialization '" + sp.name +
                          "' has the same name as its datatype");
    if (!names.insert(sp.name).second)
      invalid(sp.pos, "specialization '" + sp.name + "' is declared twice");
    if (sp.typarams != dt.typarams)
      invalid(sp.pos, "specialization '" + sp.name + "' must take the type "
                      "parameters of '" + dt.name + "' (" +
                      quote_vars(dt.typarams) + "), found " +
                      quote_vars(sp.typarams));
  }

  SpecSet set;
  set.root_ = dt;
  for (auto &clause : set.root_.clauses) {
    for (auto &atom : clause.args) {
      atom = resolver.resolve(atom);
      if (atom.kind == AtomKind::RecRef && atom.name != dt.name)
        invalid(atom.pos, "datatype '" + dt.name + "' refers to specialization '" +
                              atom.name + "'; only '" + dt.name +
                              "' itself may appear in its constructors");
    }
  }
  set.specs_.push_back({dt.name, set.root_.clauses, dt.pos});

  for (const auto &sp : group.specs) {
    Specialization out{sp.name, {}, sp.pos};
    for (const auto &clause : sp.clauses) {
      auto idx = set.root_clause_index(clause.constructor);
      if (!idx)
        invalid(clause.pos, "unknown constructor '" + clause.constructor +
                                "' in specialization '" + sp.name +
                                "': datatype '" + dt.name +
                                "' has no such constructor");
      const ConClause &root_clause = set.root_.clauses[*idx];
      if (root_clause.args.size() != clause.args.size())
        invalid(clause.pos, "arity mismatch: '" + clause.constructor +
                                "' takes " +
                                std::to_string(root_clause.args.size()) +
                                " argument(s) in '" + dt.name + "' but " +
                                std::to_string(clause.args.size()) +
                                " in specialization '" + sp.name + "'");
      ConClause resolved{clause.constructor, {}, clause.pos};
      for (std::size_t i = 0; i < clause.args.size(); ++i) {
        const TypeAtom &raw = clause.args[i];
        const TypeAtom &expected = root_clause.args[i];
        TypeAtom atom;
        if (raw.kind == AtomKind::Unresolved && expected.is_recursive() &&
            !names.count(raw.name))
          invalid(raw.pos, "unknown specialization '" + raw.name + "' (" +
                               ordinal_arg(i, clause.constructor) +
                               " is recursive in '" + dt.name + "')");
        atom = resolver.resolve(raw);
        if (expected.is_recursive()) {
          if (!atom.is_recursive())
            invalid(raw.pos, ordinal_arg(i, clause.constructor) +
                                 " is recursive in '" + dt.name +
                                 "'; expected a specialization, found '" +
                                 render_atom(raw) + "'");
        } else if (!(atom == expected)) {
          invalid(raw.pos, "specialization '" + sp.name +
                               "' refines non-recursive " +
                               ordinal_arg(i, clause.constructor) +
                               ": expected '" + render_atom(expected) +
                               "', found '" + render_atom(raw) + "'");
        }
        resolved.args.push_back(std::move(atom));
      }
      out.clauses.push_back(std::move(resolved));
    }
    set.specs_.push_back(std::move(out));
  }
  return set;
}

} // namespace dtspec
