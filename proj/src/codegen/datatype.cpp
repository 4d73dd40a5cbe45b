#include "common.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace dtspec {

using codegen::FreshVars;
using codegen::TypeNames;
using codegen::join;
using codegen::params_prefix;

const DtSubstructure &
DatatypeInterface::substructure(const std::string &name) const {
  for (const auto &s : substructures)
    if (s.name == name)
      return s;
  throw std::invalid_argument("no substructure '" + name + "'");
}

namespace {

std::string lower(const std::string &s) {
  std::string out = s;
  for (auto &c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Variable names for the recursive positions of one clause: `not` for a
// single position, `andl`/`andr` for two, `if1`..`ifN` beyond that.
std::vector<std::string> clause_vars(const ConClause &c) {
  std::size_t rec = 0;
  for (const auto &a : c.args)
    rec += a.is_recursive();
  std::string base = lower(c.constructor);
  std::vector<std::string> out;
  if (rec == 1)
    out.push_back(base);
  else if (rec == 2)
    out = {base + "l", base + "r"};
  else
    for (std::size_t i = 1; i <= rec; ++i)
      out.push_back(base + std::to_string(i));
  return out;
}

std::string map_fn(const std::string &var) { return "g" + capitalize(var); }

} // namespace

DtPlan plan_datatypes(const SpecSet &set, const Hierarchy &) {
  DtPlan plan;
  for (SpecId s = 0; s < set.size(); ++s) {
    const Specialization &sp = set.spec(s);
    DtSpecPlan p;
    p.spec = s;
    p.substructure = capitalize(sp.name);
    p.abbrev = unrolling_name(sp.name);

    // Every variable, including the primed/suffixed ones map introduces,
    // must be distinct from the others and from the type parameters.
    std::map<std::string, SourcePos> taken;
    for (const auto &tp : set.typarams())
      taken.emplace(tp, sp.pos);
    auto claim = [&](const std::string &var, SourcePos pos) {
      if (!taken.emplace(var, pos).second)
        throw CompileError(
            "codegen error", pos,
            "type variable '" + var + " of datatype " + p.substructure +
                ".t' collides with another variable; rename the "
                "constructor or the type parameter");
    };

    std::map<std::string, SourcePos> primed;
    for (std::size_t k = 0; k < sp.clauses.size(); ++k) {
      const ConClause &c = sp.clauses[k];
      DtConstructor dc;
      dc.name = c.constructor + "'";
      dc.source = c.constructor;
      dc.clause = k;
      if (!primed.emplace(dc.name, c.pos).second)
        throw CompileError(
            "codegen error", c.pos,
            "constructor " + dc.name + " would be declared twice in " +
                p.substructure + ".t' because '" + sp.name + "' uses '" +
                c.constructor +
                "' in several clauses; the datatype interface needs one "
                "clause per constructor (split the clauses into separate "
                "specializations, or emit only the phantom interface)");
      auto names = clause_vars(c);
      std::size_t next = 0;
      for (const auto &a : c.args) {
        if (!a.is_recursive()) {
          dc.vars.push_back(std::nullopt);
          continue;
        }
        const std::string &v = names[next++];
        claim(v, a.pos);
        claim(v + "1", a.pos);
        claim(v + "2", a.pos);
        dc.vars.push_back(v);
        p.vars.push_back(v);
        p.var_targets.push_back(set.target(a));
      }
      p.constructors.push_back(std::move(dc));
    }
    plan.specs.push_back(std::move(p));
  }
  return plan;
}

namespace {

MlType unrolling(const TypeNames &names, const DtSpecPlan &p,
                 std::vector<MlType> vars) {
  auto args = names.params();
  for (auto &v : vars)
    args.push_back(std::move(v));
  return MlType::con(p.abbrev, std::move(args));
}

std::vector<std::string> all_params(const SpecSet &set, const DtSpecPlan &p) {
  auto params = set.typarams();
  params.insert(params.end(), p.vars.begin(), p.vars.end());
  return params;
}

std::string datatype_line(const SpecSet &set, const TypeNames &names,
                          const DtSpecPlan &p) {
  const Specialization &sp = set.spec(p.spec);
  std::vector<std::string> clauses;
  for (const auto &dc : p.constructors) {
    const ConClause &c = sp.clauses[dc.clause];
    std::string s = dc.name;
    if (!c.args.empty()) {
      std::vector<MlType> args;
      for (std::size_t i = 0; i < c.args.size(); ++i)
        args.push_back(dc.vars[i] ? MlType::var(*dc.vars[i])
                                  : names.plain(c.args[i]));
      s += " of " + render(MlType::tuple(std::move(args)));
    }
    clauses.push_back(std::move(s));
  }
  return "datatype " + params_prefix(all_params(set, p)) + "t' = " +
         join(clauses, " | ");
}

std::string abbrev_line(const SpecSet &set, const DtSpecPlan &p,
                        bool qualified) {
  auto params = all_params(set, p);
  return "type " + params_prefix(params) + p.abbrev + " = " +
         render(MlType::con(qualified ? p.substructure + ".t'" : "t'",
                            tyvar_args(params)));
}

} // namespace

DatatypeInterface datatype_interface(const SpecSet &set, const Hierarchy &,
                                     const DtPlan &plan) {
  TypeNames names(set);
  DatatypeInterface out;
  std::string upper_root;
  for (char c : set.root_name())
    upper_root += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  out.sig_name = upper_root + "_DT";
  out.struct_name = capitalize(set.root_name()) + "DT";

  for (const auto &p : plan.specs) {
    DtSubstructure sub;
    sub.spec = p.spec;
    sub.name = p.substructure;
    {
      FreshVars fresh(set.typarams());
      std::vector<MlType> vars;
      for (SpecId target : p.var_targets)
        vars.push_back(names.abstract(target, fresh.next()));
      sub.inj = {"inj", MlType::arrow(unrolling(names, p, std::move(vars)),
                                      names.concrete(p.spec))};
    }
    {
      FreshVars fresh(set.typarams());
      std::vector<MlType> vars;
      for (SpecId target : p.var_targets)
        vars.push_back(names.concrete(target));
      sub.prj = {"prj", MlType::arrow(names.abstract(p.spec, fresh.next()),
                                      unrolling(names, p, std::move(vars)))};
    }
    {
      std::vector<MlType> fns, from, to;
      for (const auto &v : p.vars) {
        fns.push_back(MlType::arrow(MlType::var(v + "1"), MlType::var(v + "2")));
        from.push_back(MlType::var(v + "1"));
        to.push_back(MlType::var(v + "2"));
      }
      sub.map = {"map",
                 MlType::arrow(MlType::tuple(std::move(fns)),
                               MlType::arrow(unrolling(names, p, std::move(from)),
                                             unrolling(names, p, std::move(to))))};
    }
    out.substructures.push_back(std::move(sub));
  }
  return out;
}

GeneratedUnit gen_dt(const SpecSet &set, const Hierarchy &h,
                     const DtPlan &plan) {
  TypeNames names(set);
  PhantomInterface ph = phantom_interface(set, h);
  DatatypeInterface dt = datatype_interface(set, h, plan);

  GeneratedUnit unit;
  unit.sig_name = dt.sig_name;
  unit.struct_name = dt.struct_name;
  unit.sig_file = dt.struct_name + ".sig";
  unit.struct_file = dt.struct_name + ".sml";

  // The signature repeats the phantom interface and extends each
  // substructure in place; SML has no way to extend a substructure of an
  // included signature.
  std::string sig = codegen::kBanner;
  sig += "signature " + dt.sig_name + " = sig\n";
  sig += "  type " + params_prefix(ph.carrier_params) + "t\n\n";
  for (const auto &a : ph.abstract_types)
    sig += "  type " + params_prefix(a.params) + a.name + " = " +
           render(a.rhs) + "\n";
  sig += "\n";
  for (const auto &c : ph.concrete_types)
    sig += "  type " + params_prefix(c.params) + c.name + " = " +
           render(c.rhs) + "\n";
  for (std::size_t i = 0; i < dt.substructures.size(); ++i) {
    const auto &psub = ph.substructures[i];
    const auto &dsub = dt.substructures[i];
    const auto &p = plan.spec(dsub.spec);
    sig += "\n  structure " + dsub.name + " : sig\n";
    for (const auto &v : psub.constructors)
      sig += "    val " + v.name + " : " + render(v.type) + "\n";
    sig += "    val dest : " + render(psub.dest.type) + "\n";
    sig += "    val coerce : " + render(psub.coerce.type) + "\n";
    sig += "    " + datatype_line(set, names, p) + "\n";
    sig += "    " + abbrev_line(set, p, false) + "\n";
    sig += "    val inj : " + render(dsub.inj.type) + "\n";
    sig += "    val prj : " + render(dsub.prj.type) + "\n";
    sig += "    val map : " + render(dsub.map.type) + "\n";
    sig += "  end\n";
    sig += "  " + abbrev_line(set, p, true) + "\n";
  }
  sig += "end\n";

  std::string st = codegen::kBanner;
  st += "structure " + dt.struct_name + " : " + dt.sig_name + " = struct\n";
  st += "  open " + ph.struct_name + "\n";
  for (const auto &p : plan.specs) {
    const Specialization &sp = set.spec(p.spec);
    st += "\n  structure " + p.substructure + " = struct\n";
    st += "    open " + p.substructure + "\n";
    st += "    " + datatype_line(set, names, p) + "\n";
    st += "    " + abbrev_line(set, p, false) + "\n";

    // inj: each primed constructor back to the constructor function.
    st += "    fun inj d =\n      case d of\n";
    for (std::size_t i = 0; i < p.constructors.size(); ++i) {
      const auto &dc = p.constructors[i];
      std::size_t arity = sp.clauses[dc.clause].args.size();
      st += std::string(i == 0 ? "        " : "      | ") +
            codegen::apply_pattern(dc.name, arity) + " => " +
            codegen::apply_pattern(dc.source, arity) + "\n";
    }

    // prj: dest with every branch building the primed constructor.
    std::vector<std::string> branches;
    for (const auto &dc : p.constructors) {
      std::size_t arity = sp.clauses[dc.clause].args.size();
      std::string lambda =
          arity == 0 ? "fn () => " + dc.name
                     : "fn " + codegen::apply_pattern("", arity).substr(1) +
                           " => " + codegen::apply_pattern(dc.name, arity);
      branches.push_back(dc.source + " = " + lambda);
    }
    st += "    fun prj f =\n      dest f {" + join(branches, ", ") + "}\n";

    // map: one function per type variable, applied at its position.
    std::vector<std::string> fns;
    for (const auto &v : p.vars)
      fns.push_back(map_fn(v));
    std::string fn_pat = fns.empty()     ? "()"
                         : fns.size() == 1 ? fns.front()
                                           : "(" + join(fns, ", ") + ")";
    st += "    fun map " + fn_pat + " d =\n      case d of\n";
    for (std::size_t i = 0; i < p.constructors.size(); ++i) {
      const auto &dc = p.constructors[i];
      std::size_t arity = dc.vars.size();
      std::string rhs = dc.name;
      if (arity > 0) {
        std::vector<std::string> xs;
        for (std::size_t j = 0; j < arity; ++j) {
          std::string x = "x" + std::to_string(j + 1);
          xs.push_back(dc.vars[j] ? map_fn(*dc.vars[j]) + " " + x : x);
        }
        if (arity > 1)
          rhs += " (" + join(xs, ", ") + ")";
        else
          rhs += dc.vars[0] ? " (" + xs.front() + ")" : " " + xs.front();
      }
      st += std::string(i == 0 ? "        " : "      | ") +
            codegen::apply_pattern(dc.name, arity) + " => " + rhs + "\n";
    }
    st += "  end\n";
    st += "  " + abbrev_line(set, p, true) + "\n";
  }
  st += "end\n";

  unit.sig_text = std::move(sig);
  unit.struct_text = std::move(st);
  return unit;
}

} // namespace dtspec
