#include "common.hpp"

#include "dtspec/encoding.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dtspec {

using codegen::FreshVars;
using codegen::TypeNames;
using codegen::join;
using codegen::params_prefix;

const PhantomSubstructure &
PhantomInterface::substructure(const std::string &name) const {
  for (const auto &s : substructures)
    if (s.name == name)
      return s;
  throw std::invalid_argument("no substructure '" + name + "'");
}

namespace {

std::string upper(const std::string &s) {
  std::string out = s;
  for (auto &c : out)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

// Distinct constructor names of a spec, in order of first appearance.
std::vector<std::string> branch_constructors(const Specialization &sp) {
  std::vector<std::string> out;
  for (const auto &c : sp.clauses)
    if (std::find(out.begin(), out.end(), c.constructor) == out.end())
      out.push_back(c.constructor);
  return out;
}

MlType branch_type(const SpecSet &set, const Hierarchy &h,
                   const TypeNames &names, const Specialization &sp,
                   const std::string &con, const std::string &result) {
  std::vector<const ConClause *> clauses;
  for (const auto &c : sp.clauses)
    if (c.constructor == con)
      clauses.push_back(&c);
  const ConClause &first = *clauses.front();
  if (first.args.empty())
    return MlType::arrow(MlType::con("unit"), MlType::var(result));
  std::vector<MlType> args;
  for (std::size_t i = 0; i < first.args.size(); ++i) {
    if (!first.args[i].is_recursive()) {
      args.push_back(names.plain(first.args[i]));
      continue;
    }
    // Several clauses for one constructor: the branch receives the pointwise
    // least upper bound of their argument specializations.
    SpecId bound = set.target(first.args[i]);
    for (const ConClause *c : clauses)
      bound = lub(h, bound, set.target(c->args[i]));
    args.push_back(names.concrete(bound));
  }
  return MlType::arrow(MlType::tuple(std::move(args)), MlType::var(result));
}

std::string abbrev_line(const TypeAbbrev &a) {
  return "type " + params_prefix(a.params) + a.name + " = " + render(a.rhs);
}

std::string rep_datatype(const SpecSet &set, const TypeNames &names) {
  std::vector<std::string> clauses;
  for (const auto &c : set.root().clauses) {
    std::string s = c.constructor;
    if (!c.args.empty()) {
      std::vector<MlType> args;
      for (const auto &a : c.args)
        args.push_back(a.is_recursive()
                           ? MlType::con("t", names.params())
                           : names.plain(a));
      s += " of " + render(MlType::tuple(std::move(args)));
    }
    clauses.push_back(std::move(s));
  }
  return "datatype " + params_prefix(set.typarams()) + "t = " +
         join(clauses, " | ");
}

} // namespace

PhantomInterface phantom_interface(const SpecSet &set, const Hierarchy &h) {
  TypeNames names(set);
  PhantomInterface out;
  out.sig_name = upper(set.root_name());
  out.struct_name = capitalize(set.root_name());

  const std::string phantom = FreshVars(set.typarams()).next();
  out.carrier_params = set.typarams();
  out.carrier_params.push_back(phantom);

  for (SpecId s : h.preorder()) {
    auto args = names.params();
    MlType row = MlType::row(set.name(s), MlType::var(phantom));
    args.push_back(std::move(row));
    std::string base =
        s == kRootSpec ? "t" : abstract_name(set.name(*h.parent(s)));
    out.abstract_types.push_back({out.carrier_params, abstract_name(set.name(s)),
                                  MlType::con(base, std::move(args))});
  }
  for (SpecId s = 0; s < set.size(); ++s) {
    auto args = names.params();
    args.push_back(MlType::con("unit"));
    out.concrete_types.push_back(
        {set.typarams(), concrete_name(set.name(s)),
         MlType::con(abstract_name(set.name(s)), std::move(args))});
  }

  for (SpecId s = 0; s < set.size(); ++s) {
    const Specialization &sp = set.spec(s);
    PhantomSubstructure sub;
    sub.spec = s;
    sub.name = capitalize(sp.name);

    auto fn_names = codegen::constructor_function_names(sp);
    for (std::size_t k = 0; k < sp.clauses.size(); ++k) {
      const ConClause &c = sp.clauses[k];
      FreshVars fresh(set.typarams());
      if (c.args.empty()) {
        sub.constructors.push_back({fn_names[k], names.concrete(s)});
        continue;
      }
      std::vector<MlType> args;
      for (const auto &a : c.args)
        args.push_back(a.is_recursive() ? names.abstract(set.target(a), fresh.next())
                                        : names.plain(a));
      sub.constructors.push_back(
          {fn_names[k],
           MlType::arrow(MlType::tuple(std::move(args)), names.concrete(s))});
    }

    {
      FreshVars fresh(set.typarams());
      std::string arg = fresh.next();
      std::string result = fresh.next();
      std::vector<std::pair<std::string, MlType>> fields;
      for (const auto &con : branch_constructors(sp))
        fields.emplace_back(con, branch_type(set, h, names, sp, con, result));
      sub.dest = {"dest",
                  MlType::arrow(names.abstract(s, arg),
                                MlType::arrow(MlType::record(std::move(fields)),
                                              MlType::var(result)))};
    }
    {
      FreshVars fresh(set.typarams());
      sub.coerce = {"coerce", MlType::arrow(names.abstract(s, fresh.next()),
                                            names.concrete(s))};
    }
    out.substructures.push_back(std::move(sub));
  }
  return out;
}

GeneratedUnit gen_phantom(const SpecSet &set, const Hierarchy &h) {
  TypeNames names(set);
  PhantomInterface iface = phantom_interface(set, h);
  const std::string phantom = iface.carrier_params.back();

  GeneratedUnit unit;
  unit.sig_name = iface.sig_name;
  unit.struct_name = iface.struct_name;
  unit.sig_file = iface.struct_name + ".sig";
  unit.struct_file = iface.struct_name + ".sml";

  // Signature
  std::string sig = codegen::kBanner;
  sig += "signature " + iface.sig_name + " = sig\n";
  sig += "  type " + params_prefix(iface.carrier_params) + "t\n\n";
  const auto order = h.preorder();
  for (std::size_t i = 0; i < order.size(); ++i) {
    sig += "  " + abbrev_line(iface.abstract_types[i]);
    if (order[i] != kRootSpec)
      sig += " (* = " + render(encode_abstract(set, h, order[i], phantom)) +
             " *)";
    sig += "\n";
  }
  sig += "\n";
  for (const auto &c : iface.concrete_types)
    sig += "  " + abbrev_line(c) + "\n";
  for (const auto &sub : iface.substructures) {
    sig += "\n  structure " + sub.name + " : sig\n";
    for (const auto &v : sub.constructors)
      sig += "    val " + v.name + " : " + render(v.type) + "\n";
    sig += "    val dest : " + render(sub.dest.type) + "\n";
    sig += "    val coerce : " + render(sub.coerce.type) + "\n";
    sig += "  end\n";
  }
  sig += "end\n";

  // Structure
  std::string st = codegen::kBanner;
  st += "structure " + iface.struct_name + " :> " + iface.sig_name +
        " = struct\n";
  st += "  structure Rep = struct\n";
  st += "    " + rep_datatype(set, names) + "\n";
  st += "  end\n\n";
  st += "  type " + params_prefix(iface.carrier_params) + "t = " +
        render(MlType::con("Rep.t", names.params())) + "\n\n";
  for (const auto &a : iface.abstract_types)
    st += "  " + abbrev_line(a) + "\n";
  st += "\n";
  for (const auto &c : iface.concrete_types)
    st += "  " + abbrev_line(c) + "\n";
  st += "\n  exception Unreachable\n";

  for (const auto &sub : iface.substructures) {
    const Specialization &sp = set.spec(sub.spec);
    st += "\n  structure " + sub.name + " = struct\n";
    for (std::size_t k = 0; k < sp.clauses.size(); ++k)
      st += "    val " + sub.constructors[k].name + " = Rep." +
            sp.clauses[k].constructor + "\n";

    auto cons = branch_constructors(sp);
    std::vector<std::string> fields;
    for (const auto &con : cons)
      fields.push_back(con + " = f" + con);
    st += "    fun dest f {" + join(fields, ", ") + "} =\n";
    st += "      case f of\n";
    for (std::size_t i = 0; i < cons.size(); ++i) {
      std::size_t arity =
          set.root().clauses[*set.root_clause_index(cons[i])].args.size();
      std::string call = arity == 0
                             ? "f" + cons[i] + " ()"
                             : codegen::apply_pattern("f" + cons[i], arity);
      st += std::string(i == 0 ? "        " : "      | ") +
            codegen::apply_pattern("Rep." + cons[i], arity) + " => " + call +
            "\n";
    }
    if (cons.size() < set.root().clauses.size())
      st += "      | _ => raise Unreachable\n";
    st += "    fun coerce f = f\n";
    st += "  end\n";
  }
  st += "end\n";

  unit.sig_text = std::move(sig);
  unit.struct_text = std::move(st);
  return unit;
}

} // namespace dtspec
