#pragma once

// Term-level reading of the generated inj, prj and map: one unrolling of a
// specialization is its primed constructor applied to the argument values,
// with subterms standing for the type variables.

#include "dtspec/codegen.hpp"
#include "dtspec/terms.hpp"

#include <functional>

namespace dtspec {

struct Unrolled {
  SpecId spec = kRootSpec;
  std::size_t constructor = 0; // index into DtSpecPlan::constructors
  std::vector<TermArg> args;
};

// Throws std::invalid_argument if `t` is not a member of `s`.
Unrolled prj_term(const SpecSet &set, const DtPlan &plan, SpecId s,
                  const TermPtr &t);

// Throws std::invalid_argument if a recursive argument is not a member of
// the specialization its position refers to.
TermPtr inj_term(const SpecSet &set, const DtPlan &plan, const Unrolled &u);

using TermFn = std::function<TermPtr(const TermPtr &)>;

// fns[i] is applied at the position of type variable i of the spec.
Unrolled map_unrolled(const DtPlan &plan, const std::vector<TermFn> &fns,
                      const Unrolled &u);

} // namespace dtspec
