#include "dtspec/unrolling.hpp"

#include <stdexcept>

namespace dtspec {

Unrolled prj_term(const SpecSet &set, const DtPlan &plan, SpecId s,
                  const TermPtr &t) {
  if (!membership(set, *t, s))
    throw std::invalid_argument("prj: " + to_text(t) + " is not a member of '" +
                                set.name(s) + "'");
  const DtSpecPlan &p = plan.spec(s);
  for (std::size_t i = 0; i < p.constructors.size(); ++i)
    if (p.constructors[i].source == t->constructor())
      return {s, i, t->args()};
  throw std::logic_error("prj: no unrolling constructor for " +
                         t->constructor());
}

TermPtr inj_term(const SpecSet &set, const DtPlan &plan, const Unrolled &u) {
  const DtSpecPlan &p = plan.spec(u.spec);
  const DtConstructor &dc = p.constructors.at(u.constructor);
  const ConClause &c = set.spec(u.spec).clauses[dc.clause];
  if (u.args.size() != c.args.size())
    throw std::invalid_argument("inj: arity mismatch for " + dc.name);
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (!c.args[i].is_recursive())
      continue;
    const TermArg &a = u.args[i];
    SpecId target = set.target(c.args[i]);
    if (a.kind != TermArg::Kind::Sub || !membership(set, *a.sub, target))
      throw std::invalid_argument("inj: argument " + std::to_string(i + 1) +
                                  " of " + dc.name + " is not a member of '" +
                                  set.name(target) + "'");
  }
  return make_term(dc.source, u.args);
}

Unrolled map_unrolled(const DtPlan &plan, const std::vector<TermFn> &fns,
                      const Unrolled &u) {
  const DtSpecPlan &p = plan.spec(u.spec);
  if (fns.size() != p.vars.size())
    throw std::invalid_argument("map: expected " + std::to_string(p.vars.size()) +
                                " functions");
  std::size_t offset = 0;
  for (std::size_t i = 0; i < u.constructor; ++i)
    for (const auto &v : p.constructors[i].vars)
      offset += v.has_value();
  Unrolled out = u;
  const DtConstructor &dc = p.constructors.at(u.constructor);
  for (std::size_t i = 0; i < dc.vars.size(); ++i)
    if (dc.vars[i])
      out.args[i] = TermArg::subterm(fns[offset++](u.args[i].sub));
  return out;
}

} // namespace dtspec
